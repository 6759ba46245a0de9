import numpy as np
import pytest

from sensilab import BooleanFunction, CertificateCollection, PartialAssignment, TruthTable


@pytest.fixture
def and2():
    return BooleanFunction.from_table(
        TruthTable(2, np.array([0, 0, 0, 1], dtype=np.uint8)), name="and2"
    )


@pytest.fixture
def or2():
    return BooleanFunction.from_table(
        TruthTable(2, np.array([0, 1, 1, 1], dtype=np.uint8)), name="or2"
    )


@pytest.fixture
def or2_certs():
    return CertificateCollection(
        1,
        (PartialAssignment.from_string("1*"), PartialAssignment.from_string("01")),
        unambiguous=True,
    )


def make_parity(n: int) -> BooleanFunction:
    vals = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.uint8) & 1
    return BooleanFunction.from_table(TruthTable(n, vals), name=f"parity{n}")


@pytest.fixture
def parity3():
    return make_parity(3)
