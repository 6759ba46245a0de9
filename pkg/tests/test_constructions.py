import math

import numpy as np
import pytest

from sensilab import (
    ArityError,
    BooleanFunction,
    CertificateCollection,
    HammingCode,
    PartialAssignment,
    TruthTable,
    address_fn,
    chaf,
    data_compose,
    desensitize,
    from_descriptor,
    haf,
    maf,
    s0,
    s1,
    to_descriptor,
    tradeoff,
    tradeoff_profile,
)
from sensilab.constructions import _colex_rank


class TestHaf:
    def test_haf2_pinned_values(self):
        f = haf(2)
        assert f.arity == 5
        t = f.table()
        assert t.ones_count() == 4
        assert t.to_hex() == "81800100"
        # pinned points, written x1 first
        assert f(0b01000) == 1  # (0,0,0,1,0)
        assert f(0b10111) == 1  # (1,1,1,0,1)
        assert f(0b11100) == 0  # (0,0,1,1,1)

    def test_meta_predictions(self):
        f = haf(2)
        assert f.meta.family == "haf" and f.meta.params == {"r": 2}
        assert f.meta.predicted_s0 == 1
        assert f.meta.predicted_s1 == 4
        assert f.meta.predicted_lambda_sq == 4
        assert f.meta.codeword_len == 3 and f.meta.data_len == 2

    def test_certificates_valid_and_unambiguous(self):
        f = haf(2)
        certs = f.meta.certificates
        assert certs is not None and len(certs) == 2
        assert certs.unambiguous
        assert certs.validation_error(f) is None
        # each member fixes the codeword section and one data bit
        assert {c.codim for c in certs.certificates} == {4}

    def test_small_instance_keeps_eager_certificates(self):
        f = haf(3)
        assert f.arity == 23
        assert len(f.meta.certificates) == 16
        assert f.meta.predicted_s1 == 8

    def test_large_instance_has_no_eager_certificates(self):
        f = haf(5)
        assert f.meta.certificates is None
        assert f.meta.predicted_s1 == 32

    def test_haf5_evaluator_spot_checks(self):
        f = haf(5)
        assert f.arity == 31 + (1 << 26)
        code = HammingCode(5)
        m0 = 54321
        section = code.encode_index(m0)
        x = section | (1 << (31 + m0))
        assert f(x) == 1
        assert f(section) == 0
        assert f(x ^ (1 << (31 + m0))) == 0
        assert f(x ^ 1) == 0  # corrupted codeword section

    def test_rejects_bad_r(self):
        with pytest.raises(ValueError):
            haf(1)
        with pytest.raises(ValueError):
            haf(6)  # arity budget


class TestChaf:
    def test_profile_2_2(self):
        f = chaf([2, 2])
        assert f.arity == 10
        assert s0(f).value == 1
        assert s1(f).value == 7
        assert f.meta.predicted_s1 == 7

    def test_batch_matches_point_exhaustively(self):
        f = chaf([2, 2])
        xs = np.arange(1 << 10, dtype=np.int64)
        batch = f.values(xs)
        assert all(batch[x] == f._point(int(x)) for x in xs)

    def test_certificates_partition_the_ones(self):
        f = chaf([2, 2])
        certs = f.meta.certificates
        assert len(certs) == 4
        assert certs.validation_error(f) is None

    def test_mixed_radix_order_is_most_significant_first(self):
        # with codes of sizes 2 and 2, message (1, 0) selects data bit 2
        f = chaf([2, 2])
        c = HammingCode(2)
        section = c.encode_index(1) | (c.encode_index(0) << 3)
        x = section | (1 << (6 + 2))
        assert f(x) == 1

    def test_invalid_section_gives_zero(self):
        f = chaf([2])
        # 0b001 is not a codeword of the length-3 code
        assert all(f(0b001 | (d << 3)) == 0 for d in range(4))

    def test_needs_at_least_one_code(self):
        with pytest.raises(ValueError):
            chaf([])


class TestAddress:
    def test_pinned_point(self):
        f = address_fn(2)
        assert f.arity == 6
        assert f(0b000100) == 1  # address 0, data bit 0 set

    def test_output_is_selected_data_bit(self):
        f = address_fn(2)
        for x in range(1 << 6):
            a = x & 3
            assert f(x) == (x >> (2 + a)) & 1

    def test_certificates(self):
        f = address_fn(2)
        assert f.meta.certificates.validation_error(f) is None

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            address_fn(0)


class TestMaf:
    def test_colex_rank_is_bijective_on_fixed_weight(self):
        k, w = 6, 3
        ranks = sorted(
            _colex_rank(a) for a in range(1 << k) if a.bit_count() == w
        )
        assert ranks == list(range(math.comb(k, w)))

    def test_weight_rule(self):
        f = maf(4)
        assert f.arity == 10
        for x in range(1 << 10):
            wt = (x & 15).bit_count()
            if wt > 2:
                assert f(x) == 1
            elif wt < 2:
                assert f(x) == 0

    def test_monotone(self):
        for k in (2, 3, 4):
            t = maf(k).table().values
            for i in range(maf(k).arity):
                v = t.reshape(-1, 2, 1 << i)
                assert (v[:, 1, :] >= v[:, 0, :]).all()

    def test_pinned_profiles(self):
        profiles = {2: (2, 2), 3: (3, 2), 4: (3, 3)}
        for k, (e0, e1) in profiles.items():
            f = maf(k)
            assert s0(f).value == e0 and s1(f).value == e1

    def test_certificates(self):
        f = maf(3)
        certs = f.meta.certificates
        assert certs.validation_error(f) is None
        assert certs.max_codim() == 4  # address bits plus one data bit

    def test_batch_matches_point(self):
        f = maf(4)
        xs = np.arange(1 << 10, dtype=np.int64)
        batch = f.values(xs)
        assert all(batch[x] == f._point(int(x)) for x in xs)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            maf(1)


class TestDesensitize:
    def test_or2_pinned_memberships(self, or2, or2_certs):
        fp = desensitize(or2, or2_certs)
        assert fp.arity == 6
        assert fp(0b110101) == 1  # blocks (1,0),(1,0),(1,1) all inside (1,*)
        assert fp(0b011001) == 0  # blocks straddle different members
        assert s0(fp).value == 1 and s1(fp).value == 6

    def test_diagonal_agrees_with_base(self, or2, or2_certs):
        fp = desensitize(or2, or2_certs)
        for x in range(4):
            diag = x | (x << 2) | (x << 4)
            assert fp(diag) == or2(x)

    def test_dictator_becomes_and3(self):
        d = BooleanFunction(1, lambda x: x & 1, name="x1")
        certs = CertificateCollection(
            1, (PartialAssignment.from_string("1"),), unambiguous=True
        )
        f3 = desensitize(d, certs)
        assert [f3(x) for x in range(8)] == [0, 0, 0, 0, 0, 0, 0, 1]

    def test_meta(self, or2, or2_certs):
        fp = desensitize(or2, or2_certs)
        assert fp.meta.family == "desensitized"
        assert fp.meta.predicted_s0 == 1
        assert fp.meta.predicted_s1 == 6
        assert fp.meta.certificates_validated

    def test_rejects_invalid_collection(self, and2=None):
        f = BooleanFunction.from_table(
            TruthTable(2, np.array([0, 0, 0, 1], dtype=np.uint8))
        )
        impure = CertificateCollection(
            1, (PartialAssignment.from_string("1*"),), unambiguous=True
        )
        with pytest.raises(ValueError):
            desensitize(f, impure)

    def test_rejects_ambiguous_cover(self, or2):
        overlapping = CertificateCollection(
            1,
            (
                PartialAssignment.from_string("1*"),
                PartialAssignment.from_string("*1"),
                PartialAssignment.from_string("01"),
            ),
            unambiguous=True,
        )
        with pytest.raises(ValueError):
            desensitize(or2, overlapping)

    def test_rejects_zero_certificates(self, or2):
        zero = CertificateCollection(0, (PartialAssignment.from_string("0*"),))
        with pytest.raises(ValueError):
            desensitize(or2, zero)

    def test_batch_matches_point(self, or2, or2_certs):
        fp = desensitize(or2, or2_certs)
        xs = np.arange(1 << 6, dtype=np.int64)
        assert all(fp.values(xs)[x] == fp._point(int(x)) for x in xs)


class TestDataCompose:
    def test_matches_manual_composition(self, or2):
        outer = chaf([2])
        composed = data_compose(outer, or2)
        assert composed.arity == 3 + 2 * 2
        for x in range(1 << 7):
            virt = x & 7
            for j in range(2):
                blk = (x >> (3 + 2 * j)) & 3
                virt |= or2(blk) << (3 + j)
            assert composed(x) == outer(virt)

    def test_batch_matches_point(self, or2):
        composed = data_compose(chaf([2]), or2)
        xs = np.arange(1 << 7, dtype=np.int64)
        assert all(composed.values(xs)[x] == composed._point(int(x)) for x in xs)

    def test_requires_section_split(self, or2, and2):
        with pytest.raises(ValueError):
            data_compose(or2, and2)


class TestTradeoff:
    def test_profile_closed_forms(self):
        assert tradeoff_profile([2], [2]) == {
            "arity": 13,
            "s0": 4,
            "s1": 4,
            "lambda_sq": 7,
        }
        assert tradeoff_profile([3], [3]) == {
            "arity": 375,
            "s0": 8,
            "s1": 8,
            "lambda_sq": 15,
        }
        assert tradeoff_profile([2, 2], [2]) == {
            "arity": 26,
            "s0": 4,
            "s1": 7,
            "lambda_sq": 10,
        }

    def test_empty_inner_reduces_to_chaf(self):
        f = tradeoff([2], [])
        g = chaf([2])
        assert f.arity == g.arity
        xs = np.arange(1 << f.arity, dtype=np.int64)
        assert (f.values(xs) == g.values(xs)).all()
        assert f.meta.family == "tradeoff"
        assert f.meta.predicted_s0 == 1

    def test_composed_meta(self):
        f = tradeoff([2], [2])
        assert f.arity == 13
        assert f.meta.predicted_s0 == 4
        assert f.meta.predicted_s1 == 4
        assert f.meta.predicted_lambda_sq == 7

    def test_measured_profile_small_instance(self):
        f = tradeoff([2], [2])
        assert s0(f).value == 4
        assert s1(f).value == 4


class TestDescriptors:
    def test_round_trip_all_families(self, or2, or2_certs):
        fns = [
            haf(2),
            chaf([2, 2]),
            address_fn(2),
            maf(3),
            tradeoff([2], [2]),
            desensitize(or2, or2_certs),
        ]
        for fn in fns:
            back = from_descriptor(to_descriptor(fn))
            assert back.arity == fn.arity
            if fn.arity <= 13:
                xs = np.arange(1 << fn.arity, dtype=np.int64)
                assert (back.values(xs) == fn.values(xs)).all()

    def test_desensitized_descriptor_embeds_table_base(self, or2, or2_certs):
        d = to_descriptor(desensitize(or2, or2_certs))
        assert d["family"] == "desensitized"
        assert d["params"]["base"]["family"] == "table"
        assert d["params"]["certificates"] == ["1*", "01"]

    def test_desensitized_descriptor_keeps_construction_base(self):
        base = address_fn(2)
        d = to_descriptor(desensitize(base, base.meta.certificates))
        assert d["params"]["base"] == {"family": "address", "params": {"k": 2}}

    def test_plain_function_has_no_descriptor(self, or2):
        with pytest.raises(ValueError):
            to_descriptor(BooleanFunction(2, lambda x: x & 1))

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            from_descriptor({"family": "haf"})
        with pytest.raises(ValueError):
            from_descriptor({"family": "haf", "params": {"r": "2"}})
        with pytest.raises(ValueError):
            from_descriptor({"family": "nope", "params": {}})
        with pytest.raises(ValueError):
            from_descriptor({"family": "chaf", "params": {"rs": [2, True]}})
