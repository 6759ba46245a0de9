"""Boolean function substrate: encoded inputs, truth tables, subcubes.

An n-bit input is an unsigned integer whose least-significant bit is the
first variable x1. Truth tables are numpy uint8 arrays indexed by that
encoding, so position i of the integer and axis-block i of the table always
refer to the same variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

# Materializing 2**26 table entries (~64 MB as uint8) is the default ceiling
# for anything that needs the whole function at once.
DEFAULT_TABLE_CAP = 26

# Batch evaluators shift int64 values, so they only exist up to this arity.
BATCH_ARITY_LIMIT = 63

_HEX_RE = re.compile(r"[0-9a-f]+\Z")


class ArityError(ValueError):
    """An input, assignment, or table does not match the declared arity."""


class CapExceeded(ValueError):
    """The requested computation exceeds its configured arity or size cap."""


def flip(x: int, i: int) -> int:
    """Flip variable i (0-indexed) of the encoded input x."""
    return x ^ (1 << i)


def point_from_bits(bits: Iterable[int]) -> int:
    """Encode a bit sequence (x1 first) as an integer input."""
    v = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit {j} is {b!r}, expected 0 or 1")
        v |= b << j
    return v


def point_bits(x: int, arity: int) -> tuple[int, ...]:
    """Decode an integer input into its bits, x1 first."""
    if not 0 <= x < (1 << arity):
        raise ArityError(f"input {x} out of range for arity {arity}")
    return tuple((x >> j) & 1 for j in range(arity))


def _check_arity(arity: int) -> int:
    if not isinstance(arity, int) or arity < 1:
        raise ArityError(f"arity must be a positive integer, got {arity!r}")
    return arity


@dataclass(frozen=True)
class TruthTable:
    """Dense truth table of a Boolean function.

    values[x] is f(x) for the integer encoding above. Entries are uint8 0/1.
    """

    arity: int
    values: np.ndarray

    def __post_init__(self) -> None:
        _check_arity(self.arity)
        vals = np.ascontiguousarray(self.values, dtype=np.uint8)
        if vals.shape != (1 << self.arity,):
            raise ArityError(
                f"table for arity {self.arity} needs {1 << self.arity} entries, "
                f"got shape {self.values.shape}"
            )
        if vals.max(initial=0) > 1:
            raise ValueError("table entries must be 0 or 1")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return 1 << self.arity

    def __getitem__(self, x: int) -> int:
        if not 0 <= x < len(self):
            raise ArityError(f"input {x} out of range for arity {self.arity}")
        return int(self.values[x])

    def ones_count(self) -> int:
        return int(self.values.sum())

    def to_hex(self) -> str:
        """Hex encoding, most-significant hex digit first, lowercase."""
        packed = np.packbits(self.values, bitorder="little").tobytes()
        width = max(1, -(-len(self) // 4))
        return format(int.from_bytes(packed, "little"), f"0{width}x")

    @classmethod
    def from_hex(cls, arity: int, digits: str) -> "TruthTable":
        _check_arity(arity)
        width = max(1, -(-(1 << arity) // 4))
        if not _HEX_RE.match(digits):
            raise ValueError("table hex must be lowercase [0-9a-f] with no prefix")
        if len(digits) != width:
            raise ValueError(
                f"arity {arity} needs exactly {width} hex digits, got {len(digits)}"
            )
        nbytes = max(1, -(-(1 << arity) // 8))
        raw = int(digits, 16).to_bytes(nbytes, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return cls(arity, bits[: 1 << arity])

    def dumps(self) -> str:
        return f"n={self.arity}\n{self.to_hex()}\n"

    @classmethod
    def loads(cls, text: str) -> "TruthTable":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if len(lines) != 2 or not lines[0].startswith("n="):
            raise ValueError("expected two lines: 'n=<arity>' then hex digits")
        try:
            arity = int(lines[0][2:])
        except ValueError:
            raise ValueError(f"bad arity line {lines[0]!r}") from None
        return cls.from_hex(arity, lines[1])

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.dumps())

    @classmethod
    def load(cls, path) -> "TruthTable":
        with open(path) as fh:
            return cls.loads(fh.read())


class BooleanFunction:
    """A total Boolean function f: {0,1}^n -> {0,1}.

    Wraps a pointwise evaluator working on integer-encoded inputs, an
    optional vectorized evaluator over int64 arrays (arity <= 63), and
    optional construction metadata. Instances are treated as immutable.
    """

    def __init__(
        self,
        arity: int,
        point_fn: Callable[[int], int],
        batch_fn: Callable[[np.ndarray], np.ndarray] | None = None,
        meta=None,
        name: str = "f",
    ):
        self.arity = _check_arity(arity)
        self._point = point_fn
        self._batch = batch_fn if arity <= BATCH_ARITY_LIMIT else None
        self.meta = meta
        self.name = name
        self._table: TruthTable | None = None

    def __repr__(self) -> str:
        return f"BooleanFunction({self.name}, arity={self.arity})"

    def __call__(self, x: int) -> int:
        if not 0 <= x < (1 << self.arity):
            raise ArityError(f"input {x} out of range for arity {self.arity}")
        v = self._point(x)
        if v not in (0, 1):
            raise ValueError(f"evaluator returned {v!r} at {x}, expected 0 or 1")
        return int(v)

    def values(self, xs: np.ndarray) -> np.ndarray:
        """Evaluate a batch of encoded inputs, returning uint8."""
        xs = np.asarray(xs)
        if self._batch is not None:
            out = np.asarray(self._batch(xs), dtype=np.uint8)
        else:
            out = np.fromiter(
                (self._point(int(x)) for x in xs.ravel()), np.uint8, xs.size
            ).reshape(xs.shape)
        return out

    def table(self, cap: int = DEFAULT_TABLE_CAP) -> TruthTable:
        """Materialize the full truth table. Raises CapExceeded above cap."""
        if self.arity > cap:
            raise CapExceeded(
                f"arity {self.arity} exceeds materialization cap {cap}"
            )
        if self._table is None or self._table.arity != self.arity:
            n = 1 << self.arity
            if self._batch is not None:
                vals = np.zeros(n, dtype=np.uint8)
                # chunked so huge tables never allocate a second int64 copy at once
                step = 1 << 22
                for lo in range(0, n, step):
                    hi = min(lo + step, n)
                    vals[lo:hi] = self._batch(np.arange(lo, hi, dtype=np.int64))
                self._table = TruthTable(self.arity, vals)
            else:
                vals = np.fromiter((self._point(x) for x in range(n)), np.uint8, n)
                self._table = TruthTable(self.arity, vals)
        return self._table

    @classmethod
    def from_table(cls, table: TruthTable, meta=None, name: str = "table") -> "BooleanFunction":
        vals = table.values

        def batch(xs: np.ndarray) -> np.ndarray:
            return vals[np.asarray(xs, dtype=np.int64)]

        fn = cls(table.arity, lambda x: int(vals[x]), batch, meta=meta, name=name)
        fn._table = table
        return fn

    def restrict(self, assignment: "PartialAssignment") -> "BooleanFunction":
        """Fix the assigned variables; free variables keep their relative order."""
        if assignment.arity != self.arity:
            raise ArityError(
                f"assignment arity {assignment.arity} != function arity {self.arity}"
            )
        free = assignment.free_positions()
        sub_arity = len(free)
        if sub_arity == 0:
            raise ArityError("restriction must leave at least one free variable")
        base = assignment.value

        def embed(y: int) -> int:
            x = base
            for j, pos in enumerate(free):
                x |= ((y >> j) & 1) << pos
            return x

        def point(y: int) -> int:
            return self._point(embed(y))

        batch = None
        if self._batch is not None:

            def batch(ys: np.ndarray) -> np.ndarray:
                ys = np.asarray(ys, dtype=np.int64)
                xs = np.full(ys.shape, base, dtype=np.int64)
                for j, pos in enumerate(free):
                    xs |= ((ys >> j) & 1) << pos
                return self._batch(xs)

        return BooleanFunction(
            sub_arity, point, batch, meta=None, name=f"{self.name}|{assignment.to_string()}"
        )

    def negate(self) -> "BooleanFunction":
        point = self._point

        def neg_point(x: int) -> int:
            return 1 - point(x)

        batch = None
        if self._batch is not None:
            inner = self._batch

            def batch(xs: np.ndarray) -> np.ndarray:
                return 1 - np.asarray(inner(xs), dtype=np.uint8)

        negated = getattr(self.meta, "negated", None)
        meta = negated() if negated is not None else None
        return BooleanFunction(self.arity, neg_point, batch, meta=meta, name=f"not({self.name})")

    def is_nondegenerate(self, cap: int = DEFAULT_TABLE_CAP) -> bool:
        """True iff every variable influences the output somewhere."""
        vals = self.table(cap).values
        for i in range(self.arity):
            v = vals.reshape(-1, 2, 1 << i)
            if (v[:, 0, :] != v[:, 1, :]).any():
                continue
            return False
        return True


@dataclass(frozen=True)
class PartialAssignment:
    """A subcube of {0,1}^n given by fixed positions and their values.

    mask has a set bit for each fixed position; value carries the fixed bits
    and is zero elsewhere. Plain ints, so arbitrary arity is fine.
    """

    arity: int
    mask: int
    value: int

    def __post_init__(self) -> None:
        _check_arity(self.arity)
        full = (1 << self.arity) - 1
        if self.mask & ~full:
            raise ArityError(f"mask {self.mask:#x} has bits beyond arity {self.arity}")
        if self.value & ~self.mask:
            raise ValueError("value has bits outside the fixed positions")

    @classmethod
    def from_entries(cls, entries: Sequence) -> "PartialAssignment":
        """Build from a per-variable sequence of 0, 1, or '*'/None (x1 first)."""
        mask = value = 0
        for j, e in enumerate(entries):
            if e in ("*", None):
                continue
            if e in (0, "0"):
                mask |= 1 << j
            elif e in (1, "1"):
                mask |= 1 << j
                value |= 1 << j
            else:
                raise ValueError(f"entry {j} is {e!r}, expected 0, 1, or '*'")
        return cls(len(entries), mask, value)

    @classmethod
    def from_string(cls, s: str) -> "PartialAssignment":
        return cls.from_entries(list(s))

    def to_string(self) -> str:
        out = []
        for j in range(self.arity):
            if (self.mask >> j) & 1:
                out.append("1" if (self.value >> j) & 1 else "0")
            else:
                out.append("*")
        return "".join(out)

    @property
    def codim(self) -> int:
        return self.mask.bit_count()

    @property
    def dim(self) -> int:
        return self.arity - self.codim

    def fixed_positions(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.arity) if (self.mask >> j) & 1)

    def free_positions(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.arity) if not (self.mask >> j) & 1)

    def contains(self, x: int) -> bool:
        return (x & self.mask) == self.value

    def contains_batch(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        return (xs & self.mask) == self.value

    def points(self, cap: int = DEFAULT_TABLE_CAP) -> np.ndarray:
        """Enumerate the subcube's inputs as an int64 array."""
        if self.dim > cap:
            raise CapExceeded(f"subcube dimension {self.dim} exceeds cap {cap}")
        pts = np.array([self.value], dtype=np.int64)
        for pos in self.free_positions():
            pts = np.concatenate([pts, pts | (1 << pos)])
        pts.sort()
        return pts

    def __iter__(self) -> Iterator[int]:
        return iter(int(p) for p in self.points())


def satisfies(x: int, assignment: PartialAssignment) -> bool:
    """True iff input x lies in the assignment's subcube."""
    return assignment.contains(x)


@dataclass(frozen=True)
class CertificateCollection:
    """A set of certificates that all force the same output value.

    When unambiguous is True the subcubes are claimed to partition the
    preimage of target_value; validation_error checks both directions.
    """

    target_value: int
    certificates: tuple[PartialAssignment, ...]
    unambiguous: bool = False

    def __post_init__(self) -> None:
        if self.target_value not in (0, 1):
            raise ValueError("target_value must be 0 or 1")
        certs = tuple(self.certificates)
        if certs:
            arity = certs[0].arity
            for c in certs:
                if c.arity != arity:
                    raise ArityError("certificates mix arities")
        object.__setattr__(self, "certificates", certs)

    def __len__(self) -> int:
        return len(self.certificates)

    @property
    def arity(self) -> int | None:
        return self.certificates[0].arity if self.certificates else None

    def max_codim(self) -> int:
        return max((c.codim for c in self.certificates), default=0)

    def membership_counts(self, arity: int, cap: int = DEFAULT_TABLE_CAP) -> np.ndarray:
        """counts[x] = number of member subcubes containing x."""
        if arity > cap:
            raise CapExceeded(f"arity {arity} exceeds cap {cap}")
        xs = np.arange(1 << arity, dtype=np.int64)
        counts = np.zeros(1 << arity, dtype=np.int64)
        for c in self.certificates:
            if c.arity != arity:
                raise ArityError("certificate arity mismatch")
            counts += c.contains_batch(xs)
        return counts

    def validation_error(self, fn: BooleanFunction, cap: int = DEFAULT_TABLE_CAP) -> str | None:
        """Exhaustively check the collection against fn; None means valid.

        Valid means: every member subcube is monochromatic with value
        target_value, the members cover the whole preimage, and (when the
        collection is unambiguous) no input lies in two members.
        """
        b = self.target_value
        vals = fn.table(cap).values
        counts = self.membership_counts(fn.arity, cap)
        on_target = vals == b
        if (counts[~on_target] > 0).any():
            x = int(np.flatnonzero(~on_target & (counts > 0))[0])
            return f"certificate covers input {x} where f != {b}"
        if (counts[on_target] == 0).any():
            x = int(np.flatnonzero(on_target & (counts == 0))[0])
            return f"input {x} with f == {b} satisfies no certificate"
        if self.unambiguous and (counts[on_target] > 1).any():
            x = int(np.flatnonzero(on_target & (counts > 1))[0])
            return f"input {x} satisfies {int(counts[x])} certificates, expected 1"
        return None
