"""Scalar domains, vectors, matrices, and the column-variation primitives.

Values are immutable after construction and every operation is a pure
function, so they can be shared freely between threads.  Two scalar
domains are supported: exact rationals backed by ``fractions.Fraction``
and IEEE floats guarded by a module-level tolerance.  A vector or matrix
belongs to exactly one domain, chosen at construction; mixing domains in
a single operation raises :class:`DomainMismatchError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

from .errors import (
    DimensionError,
    DomainMismatchError,
    NotSquareError,
    NotTypeOneError,
)

Scalar = Union[Fraction, float]
ScalarLike = Union[int, float, str, Fraction]

DEFAULT_TOLERANCE = 1e-9

_tolerance = DEFAULT_TOLERANCE


class Domain(Enum):
    """Scalar domain a vector or matrix lives in."""

    RATIONAL = "rational"
    FLOAT = "float"


def set_tolerance(value: float) -> float:
    """Replace the float-domain comparison tolerance, returning the old one.

    The tolerance guards float-domain equality tests (type detection,
    fixed-point verification) and the strictness margin applied when a
    variation is compared against a threshold.  It is meant to be set once
    at startup; rational-domain computations never consult it.
    """
    global _tolerance
    tol = float(value)
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    previous = _tolerance
    _tolerance = tol
    return previous


def tolerance() -> float:
    """Current float-domain comparison tolerance."""
    return _tolerance


def scalars_close(x: float, y: float) -> bool:
    """Float equality within the tolerance, relative to max(1, |x|, |y|)."""
    return abs(x - y) <= _tolerance * max(1.0, abs(x), abs(y))


def is_zero(value: Scalar, domain: Domain) -> bool:
    if domain is Domain.RATIONAL:
        return value == 0
    return scalars_close(float(value), 0.0)


def strictly_less(x: Scalar, y: Scalar, domain: Domain) -> bool:
    """Strict comparison; float values within tolerance of each other tie."""
    if domain is Domain.RATIONAL:
        return x < y
    return x < y and not scalars_close(float(x), float(y))


def zero_of(domain: Domain) -> Scalar:
    return Fraction(0) if domain is Domain.RATIONAL else 0.0


def one_of(domain: Domain) -> Scalar:
    return Fraction(1) if domain is Domain.RATIONAL else 1.0


def _coerce(value: ScalarLike, domain: Domain) -> Scalar:
    if domain is Domain.RATIONAL:
        if isinstance(value, float):
            raise DomainMismatchError(
                "float entry in a rational-domain value; pass a Fraction, "
                "an int, or a literal string such as '3/5' or '0.24'"
            )
        try:
            return Fraction(value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise DomainMismatchError(f"cannot interpret {value!r} as a rational") from exc
    try:
        return float(value)
    except (ValueError, TypeError) as exc:
        raise DomainMismatchError(f"cannot interpret {value!r} as a float") from exc


def _infer_domain(values: Iterable[ScalarLike]) -> Domain:
    for value in values:
        if isinstance(value, float):
            return Domain.FLOAT
    return Domain.RATIONAL


def _require_same_domain(a: Domain, b: Domain) -> Domain:
    if a is not b:
        raise DomainMismatchError(
            f"cannot mix {a.value}-domain and {b.value}-domain values in one operation"
        )
    return a


class Vector:
    """Column vector with at least one entry, fixed at construction."""

    __slots__ = ("_entries", "_domain")

    def __init__(self, entries: Iterable[ScalarLike], domain: Optional[Domain] = None):
        items = list(entries)
        if not items:
            raise DimensionError("a vector needs at least one entry")
        dom = domain if domain is not None else _infer_domain(items)
        self._entries = tuple(_coerce(v, dom) for v in items)
        self._domain = dom

    @property
    def entries(self) -> tuple[Scalar, ...]:
        return self._entries

    @property
    def domain(self) -> Domain:
        return self._domain

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> Scalar:
        return self._entries[index]

    def __add__(self, other: "Vector") -> "Vector":
        self._check_peer(other)
        return Vector([a + b for a, b in zip(self, other)], domain=self._domain)

    def __sub__(self, other: "Vector") -> "Vector":
        self._check_peer(other)
        return Vector([a - b for a, b in zip(self, other)], domain=self._domain)

    def __rmul__(self, scalar: ScalarLike) -> "Vector":
        factor = _coerce(scalar, self._domain)
        return Vector([factor * v for v in self], domain=self._domain)

    def scale(self, scalar: ScalarLike) -> "Vector":
        return scalar * self

    def as_matrix(self) -> "Matrix":
        """This vector as an n-by-1 matrix."""
        return Matrix([[v] for v in self], domain=self._domain)

    def _check_peer(self, other: "Vector") -> None:
        if not isinstance(other, Vector):
            raise TypeError(f"expected a Vector, got {type(other).__name__}")
        _require_same_domain(self._domain, other._domain)
        if len(self) != len(other):
            raise DimensionError(f"vector lengths differ: {len(self)} vs {len(other)}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self._domain is other._domain and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._domain, self._entries))

    def __repr__(self) -> str:
        inner = ", ".join(str(v) for v in self._entries)
        return f"Vector([{inner}])"


class RowVector:
    """Row vector with at least one entry, fixed at construction."""

    __slots__ = ("_entries", "_domain")

    def __init__(self, entries: Iterable[ScalarLike], domain: Optional[Domain] = None):
        items = list(entries)
        if not items:
            raise DimensionError("a row vector needs at least one entry")
        dom = domain if domain is not None else _infer_domain(items)
        self._entries = tuple(_coerce(v, dom) for v in items)
        self._domain = dom

    @property
    def entries(self) -> tuple[Scalar, ...]:
        return self._entries

    @property
    def domain(self) -> Domain:
        return self._domain

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> Scalar:
        return self._entries[index]

    def __matmul__(self, other: "Matrix") -> "RowVector":
        if not isinstance(other, Matrix):
            return NotImplemented
        return row_mat_mul(self, other)

    def as_matrix(self) -> "Matrix":
        """This row as a 1-by-m matrix."""
        return Matrix([list(self._entries)], domain=self._domain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowVector):
            return NotImplemented
        return self._domain is other._domain and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(("row", self._domain, self._entries))

    def __repr__(self) -> str:
        inner = ", ".join(str(v) for v in self._entries)
        return f"RowVector([{inner}])"


def ones_row(length: int, domain: Domain = Domain.RATIONAL) -> RowVector:
    """Row vector of the given length with every entry equal to one."""
    return RowVector([one_of(domain)] * length, domain=domain)


class Matrix:
    """Dense m-by-n matrix stored row-major over a single scalar domain.

    Both dimensions must be at least one; empty matrices are rejected at
    construction.  Index accessors are 0-based.
    """

    __slots__ = ("_rows", "_cols", "_entries", "_domain")

    def __init__(
        self,
        rows: Iterable[Iterable[ScalarLike]],
        domain: Optional[Domain] = None,
    ):
        data = [list(row) for row in rows]
        if not data or not data[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("all rows must have the same number of entries")
        flat = [value for row in data for value in row]
        dom = domain if domain is not None else _infer_domain(flat)
        self._rows = len(data)
        self._cols = width
        self._entries = tuple(_coerce(v, dom) for v in flat)
        self._domain = dom

    @classmethod
    def identity(cls, n: int, domain: Domain = Domain.RATIONAL) -> "Matrix":
        one = one_of(domain)
        zero = zero_of(domain)
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)],
            domain=domain,
        )

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def domain(self) -> Domain:
        return self._domain

    @property
    def entries(self) -> tuple[Scalar, ...]:
        """Row-major tuple of all entries."""
        return self._entries

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def entry(self, i: int, j: int) -> Scalar:
        """Entry at 0-based row i, column j."""
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self._rows}x{self._cols} matrix")
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> RowVector:
        """Row i (0-based) as a row vector."""
        start = i * self._cols
        return RowVector(self._entries[start : start + self._cols], domain=self._domain)

    def column(self, j: int) -> Vector:
        """Column j (0-based) as a column vector."""
        if not 0 <= j < self._cols:
            raise IndexError(f"column {j} outside a {self._rows}x{self._cols} matrix")
        return Vector(
            [self._entries[i * self._cols + j] for i in range(self._rows)],
            domain=self._domain,
        )

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self._cols))

    def col_sums(self) -> tuple[Scalar, ...]:
        sums = []
        for j in range(self._cols):
            total = zero_of(self._domain)
            for i in range(self._rows):
                total = total + self._entries[i * self._cols + j]
            sums.append(total)
        return tuple(sums)

    def row_lists(self) -> list[list[Scalar]]:
        """Mutable row-major copy, for elimination-style algorithms."""
        return [
            list(self._entries[i * self._cols : (i + 1) * self._cols])
            for i in range(self._rows)
        ]

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entry(i, j) for i in range(self._rows)] for j in range(self._cols)],
            domain=self._domain,
        )

    def to_float(self) -> "Matrix":
        """The same matrix converted to the float domain."""
        return Matrix(
            [[float(self.entry(i, j)) for j in range(self._cols)] for i in range(self._rows)],
            domain=Domain.FLOAT,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [self.entry(i, j) + other.entry(i, j) for j in range(self._cols)]
                for i in range(self._rows)
            ],
            domain=self._domain,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [self.entry(i, j) - other.entry(i, j) for j in range(self._cols)]
                for i in range(self._rows)
            ],
            domain=self._domain,
        )

    def __rmul__(self, scalar: ScalarLike) -> "Matrix":
        factor = _coerce(scalar, self._domain)
        return Matrix(
            [[factor * self.entry(i, j) for j in range(self._cols)] for i in range(self._rows)],
            domain=self._domain,
        )

    def scale(self, scalar: ScalarLike) -> "Matrix":
        return scalar * self

    def __matmul__(self, other: object):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        if isinstance(other, Vector):
            return mat_vec(self, other)
        return NotImplemented

    def _check_same_shape(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        _require_same_domain(self._domain, other._domain)
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise DimensionError(
                f"shape mismatch: {self._rows}x{self._cols} vs {other._rows}x{other._cols}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self._domain is other._domain
            and (self._rows, self._cols) == (other._rows, other._cols)
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._domain, self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        rows = [
            "[" + ", ".join(str(self.entry(i, j)) for j in range(self._cols)) + "]"
            for i in range(self._rows)
        ]
        return f"Matrix([{', '.join(rows)}], {self._domain.value})"


@dataclass(frozen=True)
class TypeReport:
    """Whether all column sums agree, and by how much they fail to.

    ``type_value`` is the first column's sum and is meaningful only when
    ``has_type`` is true.  ``max_deviation`` is the largest observed
    |column sum - type_value|, exactly zero for a typed rational matrix.
    """

    has_type: bool
    type_value: Scalar
    max_deviation: Scalar


@dataclass(frozen=True)
class VariationReport:
    """Half the largest pairwise column distance, with the achieving pair.

    Column indices are 1-based.  ``(arg_j, arg_k)`` is the lexicographically
    smallest maximizing pair with ``arg_j < arg_k``; a single-column matrix
    reports value zero with pair (1, 1).
    """

    value: Scalar
    arg_j: int
    arg_k: int


def vsum(x: Union[Vector, RowVector]) -> Scalar:
    """Sum of the entries; equals the all-ones row applied to the vector."""
    total = zero_of(x.domain)
    for value in x:
        total = total + value
    return total


def l1_norm(x: Union[Vector, RowVector]) -> Scalar:
    """Sum of absolute values of the entries."""
    total = zero_of(x.domain)
    for value in x:
        total = total + abs(value)
    return total


def variation(a: Matrix) -> VariationReport:
    """Column variation: half the maximum l1 distance between two columns."""
    n = a.cols
    if n == 1:
        return VariationReport(value=zero_of(a.domain), arg_j=1, arg_k=1)
    best: Optional[Scalar] = None
    best_pair = (1, 2)
    for j in range(n):
        for k in range(j + 1, n):
            dist = zero_of(a.domain)
            for i in range(a.rows):
                dist = dist + abs(a.entry(i, j) - a.entry(i, k))
            if best is None or dist > best:
                best = dist
                best_pair = (j + 1, k + 1)
    return VariationReport(value=best / 2, arg_j=best_pair[0], arg_k=best_pair[1])


def row_variation(z: RowVector) -> Scalar:
    """Half of (max entry - min entry); the variation of z as a 1-row matrix."""
    return (max(z.entries) - min(z.entries)) / 2


def type_of(a: Matrix) -> TypeReport:
    """Detect a constant column sum.

    Rational matrices are typed only when the column sums are exactly
    equal; float matrices compare sums within the module tolerance.
    """
    sums = a.col_sums()
    reference = sums[0]
    max_dev = zero_of(a.domain)
    typed = True
    for s in sums[1:]:
        dev = abs(s - reference)
        if dev > max_dev:
            max_dev = dev
        if a.domain is Domain.RATIONAL:
            if s != reference:
                typed = False
        elif not scalars_close(float(s), float(reference)):
            typed = False
    return TypeReport(has_type=typed, type_value=reference, max_deviation=max_dev)


def ensure_type_one(a: Matrix) -> TypeReport:
    """Return the type report, raising NotTypeOneError unless the type is 1."""
    report = type_of(a)
    if not report.has_type:
        raise NotTypeOneError(
            f"column sums are not constant (max deviation {report.max_deviation})"
        )
    value = report.type_value
    if a.domain is Domain.RATIONAL:
        ok = value == 1
    else:
        ok = scalars_close(float(value), 1.0)
    if not ok:
        raise NotTypeOneError(f"matrix is of type {value}, expected type 1")
    return report


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Standard matrix product; exact in the rational domain."""
    _require_same_domain(a.domain, b.domain)
    if a.cols != b.rows:
        raise DimensionError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    zero = zero_of(a.domain)
    out = []
    for i in range(a.rows):
        row = []
        for k in range(b.cols):
            total = zero
            for j in range(a.cols):
                total = total + a.entry(i, j) * b.entry(j, k)
            row.append(total)
        out.append(row)
    return Matrix(out, domain=a.domain)


def mat_vec(a: Matrix, x: Vector) -> Vector:
    """Matrix-vector product."""
    _require_same_domain(a.domain, x.domain)
    if a.cols != len(x):
        raise DimensionError(f"cannot apply {a.rows}x{a.cols} matrix to length-{len(x)} vector")
    zero = zero_of(a.domain)
    out = []
    for i in range(a.rows):
        total = zero
        for j in range(a.cols):
            total = total + a.entry(i, j) * x[j]
        out.append(total)
    return Vector(out, domain=a.domain)


def row_mat_mul(z: RowVector, a: Matrix) -> RowVector:
    """Row-vector-matrix product."""
    _require_same_domain(z.domain, a.domain)
    if len(z) != a.rows:
        raise DimensionError(f"cannot apply length-{len(z)} row to {a.rows}x{a.cols} matrix")
    zero = zero_of(a.domain)
    out = []
    for j in range(a.cols):
        total = zero
        for i in range(a.rows):
            total = total + z[i] * a.entry(i, j)
        out.append(total)
    return RowVector(out, domain=a.domain)


def mat_pow(m: Matrix, k: int) -> Matrix:
    """k-th power by repeated multiplication; the zeroth power is identity."""
    if not m.is_square:
        raise NotSquareError(f"cannot raise a {m.rows}x{m.cols} matrix to a power")
    if not isinstance(k, int) or k < 0:
        raise ValueError("exponent must be a non-negative integer")
    result = Matrix.identity(m.rows, domain=m.domain)
    for _ in range(k):
        result = mat_mul(result, m)
    return result
