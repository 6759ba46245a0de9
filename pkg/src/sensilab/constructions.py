"""Function families with extreme sensitivity profiles.

Every factory returns a BooleanFunction whose meta records the construction
family, its parameters, the predicted measure values where the family makes
a claim, and (when small enough to materialize) the generating collection of
1-certificates.

Layout convention shared by the address-style families: the low positions
hold one or more codeword sections, the high positions hold the data
section, and the function returns a data bit selected by decoding the
codeword sections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .core import (
    ArityError,
    BooleanFunction,
    CertificateCollection,
    DEFAULT_TABLE_CAP,
    PartialAssignment,
    TruthTable,
)
from .codes import HammingCode

# Evaluators stay fast and exact well past table range, but refuse absurd
# arities outright.
MAX_CONSTRUCTION_ARITY = 1 << 27

# Certificate collections are materialized only when they stay small.
MAX_EAGER_CERTIFICATES = 4096

# desensitize checks its certificate collection exhaustively up to here.
DESENS_VALIDATION_CAP = 20


@dataclass(frozen=True)
class ConstructionMeta:
    """What a construction claims about itself.

    predicted_* values are the family's closed forms for the concrete
    parameters; they are claims to verify, not measurements. codeword_len
    and data_len describe the section split for families that have one.
    """

    family: str | None = None
    params: dict | None = None
    predicted_s0: int | None = None
    predicted_s1: int | None = None
    predicted_lambda_sq: int | None = None
    certificates: CertificateCollection | None = None
    codeword_len: int | None = None
    data_len: int | None = None
    certificates_validated: bool = True

    def negated(self) -> "ConstructionMeta":
        certs = self.certificates
        if certs is not None:
            certs = CertificateCollection(
                1 - certs.target_value, certs.certificates, certs.unambiguous
            )
        return ConstructionMeta(
            family=None,
            params=None,
            predicted_s0=self.predicted_s1,
            predicted_s1=self.predicted_s0,
            predicted_lambda_sq=self.predicted_lambda_sq,
            certificates=certs,
            codeword_len=self.codeword_len,
            data_len=self.data_len,
            certificates_validated=self.certificates_validated,
        )


def _check_budget(arity: int) -> int:
    if arity > MAX_CONSTRUCTION_ARITY:
        raise ValueError(
            f"parameters give arity {arity}, over the budget {MAX_CONSTRUCTION_ARITY}"
        )
    return arity


def _chaf_certificates(codes: list[HammingCode], offsets: list[int], K: int, t: int):
    """One certificate per data position: all codeword sections fixed to the
    encoding of that position's mixed-radix digits, plus the data bit itself."""
    if t > MAX_EAGER_CERTIFICATES:
        return None
    places = [1] * len(codes)
    for i in range(len(codes) - 2, -1, -1):
        places[i] = places[i + 1] * codes[i + 1].size
    section_mask = sum(code.word_mask << off for code, off in zip(codes, offsets))
    arity = K + t
    certs = []
    for m0 in range(t):
        rem = m0
        section = 0
        for code, off, place in zip(codes, offsets, places):
            digit, rem = divmod(rem, place)
            section |= code.encode_index(digit) << off
        data_bit = 1 << (K + m0)
        certs.append(
            PartialAssignment(arity, section_mask | data_bit, section | data_bit)
        )
    return CertificateCollection(1, tuple(certs), unambiguous=True)


def chaf(rs: Sequence[int]) -> BooleanFunction:
    """Address function keyed by a conjunction of distance-3 codes.

    The input is l codeword sections followed by a data section of size
    t = prod(2^(2^r_i - r_i - 1)). The output is data bit m0, where m0 is the
    mixed-radix number (section 1 most significant) whose digits are the
    decoded message indices; invalid sections give 0.
    """
    rs = [int(r) for r in rs]
    if not rs:
        raise ValueError("need at least one code order")
    codes = [HammingCode(r) for r in rs]
    offsets = []
    K = 0
    for code in codes:
        offsets.append(K)
        K += code.codeword_len
    t = math.prod(code.size for code in codes)
    arity = _check_budget(K + t)

    def point(x: int) -> int:
        m0 = 0
        for code, off in zip(codes, offsets):
            seg = (x >> off) & code.word_mask
            if code.syndrome(seg):
                return 0
            m0 = m0 * code.size + code.message_index(seg)
        return (x >> (K + m0)) & 1

    def batch(xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        m0 = np.zeros(xs.shape, dtype=np.int64)
        valid = np.ones(xs.shape, dtype=bool)
        for code, off in zip(codes, offsets):
            seg = (xs >> off) & code.word_mask
            valid &= code.syndrome_batch(seg) == 0
            m0 = m0 * code.size + code.message_index_batch(seg)
        out = ((xs >> (K + m0)) & 1).astype(np.uint8)
        out[~valid] = 0
        return out

    s1 = K + 1
    meta = ConstructionMeta(
        family="chaf",
        params={"rs": list(rs)},
        predicted_s0=1,
        predicted_s1=s1,
        predicted_lambda_sq=s1,
        certificates=_chaf_certificates(codes, offsets, K, t),
        codeword_len=K,
        data_len=t,
    )
    name = f"chaf({','.join(str(r) for r in rs)})"
    return BooleanFunction(arity, point, batch, meta=meta, name=name)


def haf(r: int) -> BooleanFunction:
    """Single-code address function: chaf with one section of order r."""
    fn = chaf([r])
    meta = replace(fn.meta, family="haf", params={"r": int(r)})
    return BooleanFunction(fn.arity, fn._point, fn._batch, meta=meta, name=f"haf({r})")


def address_fn(k: int) -> BooleanFunction:
    """Plain address function on k + 2^k bits: output data bit number a,
    where a is the integer read from the k address bits."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"address width must be a positive integer, got {k!r}")
    arity = _check_budget(k + (1 << k))
    amask = (1 << k) - 1

    def point(x: int) -> int:
        return (x >> (k + (x & amask))) & 1

    def batch(xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        return ((xs >> (k + (xs & amask))) & 1).astype(np.uint8)

    certs = None
    if (1 << k) <= MAX_EAGER_CERTIFICATES:
        certs = CertificateCollection(
            1,
            tuple(
                PartialAssignment(arity, amask | (1 << (k + a)), a | (1 << (k + a)))
                for a in range(1 << k)
            ),
            unambiguous=True,
        )
    meta = ConstructionMeta(
        family="address",
        params={"k": k},
        certificates=certs,
        codeword_len=k,
        data_len=1 << k,
    )
    return BooleanFunction(arity, point, batch, meta=meta, name=f"address({k})")


def _colex_rank(a: int) -> int:
    """Rank of a set-bit pattern among same-weight patterns, colex order."""
    rank = 0
    i = 0
    while a:
        p = (a & -a).bit_length() - 1
        i += 1
        rank += math.comb(p, i)
        a &= a - 1
    return rank


def maf(k: int) -> BooleanFunction:
    """Monotone address function on k + C(k, floor(k/2)) bits.

    Address weight above floor(k/2) forces 1, below forces 0; at exactly
    floor(k/2) the output is the data bit indexed by the address pattern's
    colex rank. Monotone because raising an address bit can only raise the
    weight, and each weight-w pattern reads its own data bit.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"address width must be an integer >= 2, got {k!r}")
    w = k // 2
    m = math.comb(k, w)
    arity = _check_budget(k + m)
    amask = (1 << k) - 1

    def point(x: int) -> int:
        a = x & amask
        wt = a.bit_count()
        if wt != w:
            return 1 if wt > w else 0
        return (x >> (k + _colex_rank(a))) & 1

    comb_table = np.zeros((k + 1, w + 1), dtype=np.int64)
    for p in range(k + 1):
        for j in range(min(p, w) + 1):
            comb_table[p, j] = math.comb(p, j)

    def batch(xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        a = xs & amask
        wt = np.bitwise_count(a).astype(np.int64)
        rank = np.zeros(xs.shape, dtype=np.int64)
        below = np.zeros(xs.shape, dtype=np.int64)
        for p in range(k):
            bit = (a >> p) & 1
            rank += bit * comb_table[p, np.minimum(below + 1, w)]
            below += bit
        out = ((xs >> (k + rank)) & 1).astype(np.uint8)
        out[wt > w] = 1
        out[wt < w] = 0
        return out

    n_certs = m + sum(math.comb(k, j) for j in range(w + 1, k + 1))
    certs = None
    if n_certs <= MAX_EAGER_CERTIFICATES:
        members = []
        for a in range(1 << k):
            wt = a.bit_count()
            if wt < w:
                continue
            if wt == w:
                bit = 1 << (k + _colex_rank(a))
                members.append(PartialAssignment(arity, amask | bit, a | bit))
            else:
                members.append(PartialAssignment(arity, amask, a))
        certs = CertificateCollection(1, tuple(members), unambiguous=True)
    meta = ConstructionMeta(
        family="maf",
        params={"k": k},
        certificates=certs,
        codeword_len=k,
        data_len=m,
    )
    return BooleanFunction(arity, point, batch, meta=meta, name=f"maf({k})")


def desensitize(fn: BooleanFunction, certs: CertificateCollection) -> BooleanFunction:
    """Triplicate fn against an unambiguous 1-certificate collection.

    The result takes three n-bit blocks and outputs 1 iff some collection
    member contains all three blocks. On the diagonal it agrees with fn;
    every 0-input of the result has exactly one sensitive bit, and 1-inputs
    reach sensitivity 3 * max codim of the collection.
    """
    n = fn.arity
    if certs.target_value != 1:
        raise ValueError("desensitization needs 1-certificates")
    if not certs.certificates:
        raise ValueError("certificate collection is empty")
    if certs.arity != n:
        raise ArityError(f"certificate arity {certs.arity} != function arity {n}")
    validated = False
    if n <= DESENS_VALIDATION_CAP:
        err = certs.validation_error(fn)
        if err is not None:
            raise ValueError(f"collection is not an unambiguous cover: {err}")
        validated = True
    arity = _check_budget(3 * n)
    masks = [(c.mask, c.value) for c in certs.certificates]

    def point(x: int) -> int:
        b1 = x & ((1 << n) - 1)
        b2 = (x >> n) & ((1 << n) - 1)
        b3 = x >> (2 * n)
        for mask, value in masks:
            if (b1 & mask) == value and (b2 & mask) == value and (b3 & mask) == value:
                return 1
        return 0

    batch = None
    if arity <= 63:

        def batch(xs: np.ndarray) -> np.ndarray:
            xs = np.asarray(xs, dtype=np.int64)
            blockmask = (1 << n) - 1
            b1 = xs & blockmask
            b2 = (xs >> n) & blockmask
            b3 = (xs >> (2 * n)) & blockmask
            hit = np.zeros(xs.shape, dtype=bool)
            for mask, value in masks:
                hit |= (
                    ((b1 & mask) == value)
                    & ((b2 & mask) == value)
                    & ((b3 & mask) == value)
                )
            return hit.astype(np.uint8)

    tripled = CertificateCollection(
        1,
        tuple(
            PartialAssignment(
                arity,
                c.mask | (c.mask << n) | (c.mask << (2 * n)),
                c.value | (c.value << n) | (c.value << (2 * n)),
            )
            for c in certs.certificates
        ),
        unambiguous=False,
    )
    s1 = 3 * certs.max_codim()
    meta = ConstructionMeta(
        family="desensitized",
        params=_desens_params(fn, certs),
        predicted_s0=1,
        predicted_s1=s1,
        predicted_lambda_sq=s1,
        certificates=tripled,
        certificates_validated=validated,
    )
    return BooleanFunction(arity, point, batch, meta=meta, name=f"desens({fn.name})")


def _desens_params(fn: BooleanFunction, certs: CertificateCollection) -> dict | None:
    base = None
    if fn.meta is not None and fn.meta.family is not None and fn.meta.params is not None:
        base = {"family": fn.meta.family, "params": fn.meta.params}
    elif fn.arity <= DEFAULT_TABLE_CAP:
        table = fn.table()
        base = {"family": "table", "params": {"n": fn.arity, "hex": table.to_hex()}}
    if base is None:
        return None
    return {
        "base": base,
        "certificates": [c.to_string() for c in certs.certificates],
    }


def data_compose(outer: BooleanFunction, inner: BooleanFunction) -> BooleanFunction:
    """Compose on the data section only: each data bit of outer is replaced
    by a copy of inner on fresh variables, while outer's codeword sections
    stay raw input bits."""
    meta = outer.meta
    if meta is None or meta.codeword_len is None or meta.data_len is None:
        raise ValueError("outer function does not declare a codeword/data split")
    K, t = meta.codeword_len, meta.data_len
    if outer.arity != K + t:
        raise ValueError("outer split does not match its arity")
    n_in = inner.arity
    arity = _check_budget(K + t * n_in)
    kmask = (1 << K) - 1
    inmask = (1 << n_in) - 1

    def point(x: int) -> int:
        virt = x & kmask
        rest = x >> K
        for j in range(t):
            blk = (rest >> (j * n_in)) & inmask
            virt |= inner._point(blk) << (K + j)
        return outer._point(virt)

    batch = None
    if arity <= 63:

        def batch(xs: np.ndarray) -> np.ndarray:
            xs = np.asarray(xs, dtype=np.int64)
            virt = xs & kmask
            for j in range(t):
                blk = (xs >> (K + j * n_in)) & inmask
                virt |= inner.values(blk).astype(np.int64) << (K + j)
            return outer.values(virt)

    return BooleanFunction(
        arity, point, batch, meta=None, name=f"compose({outer.name},{inner.name})"
    )


def tradeoff_profile(as_: Sequence[int], bs_: Sequence[int]) -> dict:
    """Closed-form predictions for tradeoff(as_, bs_)."""
    as_ = [int(a) for a in as_]
    bs_ = [int(b) for b in bs_]
    if not as_:
        raise ValueError("need at least one outer code order")
    k_out = sum((1 << a) - 1 for a in as_)
    t_out = math.prod(1 << ((1 << a) - a - 1) for a in as_)
    s1 = sum(1 << a for a in as_) - len(as_) + 1
    if not bs_:
        return {
            "arity": k_out + t_out,
            "s0": 1,
            "s1": s1,
            "lambda_sq": s1,
        }
    k_in = sum((1 << b) - 1 for b in bs_)
    t_in = math.prod(1 << ((1 << b) - b - 1) for b in bs_)
    s0 = sum(1 << b for b in bs_) - len(bs_) + 1
    return {
        "arity": k_out + t_out * (k_in + t_in),
        "s0": s0,
        "s1": s1,
        "lambda_sq": s0 + s1 - 1,
    }


def tradeoff(as_: Sequence[int], bs_: Sequence[int] = ()) -> BooleanFunction:
    """Sensitivity-tradeoff family: chaf over as_ with each data bit replaced
    by a negated chaf over bs_. Empty bs_ gives plain chaf over as_."""
    as_ = [int(a) for a in as_]
    bs_ = [int(b) for b in bs_]
    profile = tradeoff_profile(as_, bs_)
    params = {"as": as_, "bs": bs_}
    tag = f"tradeoff({','.join(map(str, as_))};{','.join(map(str, bs_))})"
    if not bs_:
        base = chaf(as_)
        meta = replace(base.meta, family="tradeoff", params=params)
        return BooleanFunction(base.arity, base._point, base._batch, meta=meta, name=tag)
    outer = chaf(as_)
    inner = chaf(bs_).negate()
    fn = data_compose(outer, inner)
    assert fn.arity == profile["arity"]
    meta = ConstructionMeta(
        family="tradeoff",
        params=params,
        predicted_s0=profile["s0"],
        predicted_s1=profile["s1"],
        predicted_lambda_sq=profile["lambda_sq"],
        codeword_len=outer.meta.codeword_len,
        data_len=outer.meta.data_len,
    )
    return BooleanFunction(fn.arity, fn._point, fn._batch, meta=meta, name=tag)


FAMILIES = ("haf", "chaf", "address", "maf", "tradeoff", "desensitized")


def to_descriptor(fn: BooleanFunction) -> dict:
    """JSON-ready {"family", "params"} description of a constructed function."""
    meta = fn.meta
    if meta is None or meta.family is None or meta.params is None:
        raise ValueError(f"{fn.name} has no serializable construction descriptor")
    return {"family": meta.family, "params": meta.params}


def from_descriptor(obj: dict) -> BooleanFunction:
    """Rebuild a constructed function from its descriptor."""
    if not isinstance(obj, dict):
        raise ValueError("descriptor must be a JSON object")
    family = obj.get("family")
    params = obj.get("params")
    if not isinstance(family, str) or not isinstance(params, dict):
        raise ValueError("descriptor needs string 'family' and object 'params'")

    def _int(key):
        v = params.get(key)
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{family} descriptor needs integer {key!r}")
        return v

    def _int_list(key):
        v = params.get(key)
        if not isinstance(v, list) or any(
            not isinstance(e, int) or isinstance(e, bool) for e in v
        ):
            raise ValueError(f"{family} descriptor needs integer list {key!r}")
        return v

    if family == "haf":
        return haf(_int("r"))
    if family == "chaf":
        return chaf(_int_list("rs"))
    if family == "address":
        return address_fn(_int("k"))
    if family == "maf":
        return maf(_int("k"))
    if family == "tradeoff":
        return tradeoff(_int_list("as"), _int_list("bs"))
    if family == "table":
        hexdigits = params.get("hex")
        if not isinstance(hexdigits, str):
            raise ValueError("table descriptor needs string 'hex'")
        return BooleanFunction.from_table(TruthTable.from_hex(_int("n"), hexdigits))
    if family == "desensitized":
        base_obj = params.get("base")
        cert_strings = params.get("certificates")
        if not isinstance(base_obj, dict) or not isinstance(cert_strings, list):
            raise ValueError(
                "desensitized descriptor needs 'base' object and 'certificates' list"
            )
        base = from_descriptor(base_obj)
        members = []
        for s in cert_strings:
            if not isinstance(s, str):
                raise ValueError("certificates must be strings of 0/1/*")
            members.append(PartialAssignment.from_string(s))
        collection = CertificateCollection(1, tuple(members), unambiguous=True)
        return desensitize(base, collection)
    raise ValueError(f"unknown construction family {family!r}")
