"""Convergence analysis for square matrices with constant column sums.

The central question: given a square matrix M whose column sums are all 1,
do the powers M^k approach a rank-one projection?  They do exactly when
some power has column variation strictly below one.  This module searches
for that contraction power, solves for the fixed vector E with entry sum
one, builds the limit projection P = E * J, and evaluates the a priori
decay and iterate error bounds that the contraction provides.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .core import (
    Domain,
    Matrix,
    Scalar,
    ScalarLike,
    Vector,
    ensure_type_one,
    is_zero,
    l1_norm,
    mat_mul,
    mat_pow,
    mat_vec,
    one_of,
    scalars_close,
    strictly_less,
    tolerance,
    type_of,
    variation,
    vsum,
    zero_of,
)
from .errors import (
    DimensionError,
    NonUniqueFixedVectorError,
    NotSquareError,
    NotTypedError,
    VsumNotOneError,
)

DEFAULT_P_MAX = 64
DEFAULT_K_REPORT = 200


class Verdict(Enum):
    CONVERGES = "converges"
    NO_CONTRACTION_FOUND = "no-contraction-found"


@dataclass(frozen=True)
class ConvergenceAnalysis:
    """Full convergence report for a type-1 square matrix.

    ``variation_per_power`` holds the variation of M^k for k = 1 up to the
    contraction power, or up to ``p_max`` when no contraction was found.
    ``stationary`` and ``projection`` are present only on convergence.
    A missing contraction power is never a divergence proof, only failure
    to certify convergence within the search bound.
    """

    verdict: Verdict
    p_max: int
    contraction_power: Optional[int]
    variation_at_p: Optional[Scalar]
    variation_per_power: tuple[Scalar, ...]
    stationary: Optional[Vector]
    projection: Optional[Matrix]
    decay_bounds: tuple[tuple[int, Scalar], ...] = ()

    @property
    def converged(self) -> bool:
        return self.verdict is Verdict.CONVERGES

    def decay_bound_at(self, k: int) -> Scalar:
        """Certified upper bound on the variation of M^k."""
        if not self.converged:
            raise ValueError("decay bounds require a contraction power")
        return decay_bound(
            self.variation_per_power[0],
            self.variation_at_p,
            self.contraction_power,
            k,
        )


class Case2x2(Enum):
    CONVERGES_GENERIC = "ConvergesGeneric"
    DIVERGES_GENERIC = "DivergesGeneric"
    DIVERGES_LINEAR = "DivergesLinear"
    IDENTITY = "Identity"


@dataclass(frozen=True)
class Classification2x2:
    """Complete taxonomy of the 2x2 type-1 matrix [[1-a, b], [a, 1-b]].

    With c = a + b the eigenvalues are 1 and 1 - c and the variation is
    |1 - c|.  Powers converge exactly when 0 < c < 2 and (a, b) != (0, 0);
    the stationary vector (b/c, a/c) is present only in that case.
    Eigenvectors ((b, a), (1, -1)) are present whenever c != 0.
    """

    case: Case2x2
    a: Scalar
    b: Scalar
    c: Scalar
    variation: Scalar
    eigenvalues: tuple[Scalar, Scalar]
    eigenvectors: Optional[tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]]
    stationary: Optional[Vector]


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise NotSquareError(f"expected a square matrix, got {m.rows}x{m.cols}")


def _variation_scan(m: Matrix, p_max: int) -> tuple[Optional[int], list[Scalar]]:
    """Variations of M^1..M^p, stopping at the first power with variation < 1."""
    if not isinstance(p_max, int) or p_max < 1:
        raise ValueError("p_max must be a positive integer")
    history: list[Scalar] = []
    power = m
    for p in range(1, p_max + 1):
        value = variation(power).value
        history.append(value)
        if strictly_less(value, one_of(m.domain), m.domain):
            return p, history
        if p < p_max:
            power = mat_mul(power, m)
    return None, history


def find_contraction_power(
    m: Matrix, p_max: int = DEFAULT_P_MAX
) -> Optional[tuple[int, Scalar]]:
    """Smallest p <= p_max with variation(M^p) < 1, or None.

    The comparison is exact in the rational domain; in the float domain a
    variation within tolerance of one is treated as inconclusive, so only
    values strictly below 1 - tolerance qualify.
    """
    _require_square(m)
    ensure_type_one(m)
    p, history = _variation_scan(m, p_max)
    if p is None:
        return None
    return p, history[-1]


def _solve_square(
    rows: list[list[Scalar]], rhs: list[Scalar], domain: Domain
) -> Optional[list[Scalar]]:
    """Gaussian elimination with partial pivoting; None when singular.

    Rational systems pivot on the first nonzero entry and are exact.
    Float systems pivot on the largest magnitude and declare singularity
    when no candidate exceeds tolerance * max(1, largest input entry).
    """
    n = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    limit: float = 0.0
    if domain is Domain.FLOAT:
        scale = max(1.0, max(abs(aug[i][j]) for i in range(n) for j in range(n)))
        limit = tolerance() * scale
    for col in range(n):
        pivot_row = None
        if domain is Domain.RATIONAL:
            for r in range(col, n):
                if aug[r][col] != 0:
                    pivot_row = r
                    break
        else:
            best = limit
            for r in range(col, n):
                magnitude = abs(aug[r][col])
                if magnitude > best:
                    best = magnitude
                    pivot_row = r
        if pivot_row is None:
            return None
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            if aug[r][col] == 0:
                continue
            factor = aug[r][col] / pivot
            aug[r][col] = zero_of(domain)
            for c in range(col + 1, n + 1):
                aug[r][c] = aug[r][c] - factor * aug[col][c]
    solution: list[Scalar] = [zero_of(domain)] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n]
        for j in range(i + 1, n):
            acc = acc - aug[i][j] * solution[j]
        solution[i] = acc / aug[i][i]
    return solution


def stationary_vector(m: Matrix) -> Vector:
    """The unique vector E with M E = E and entry sum one.

    The rows of M - I sum to zero for a type-1 matrix, so the kernel
    equation is solved by replacing one row of M - I with the all-ones row
    and putting a one on the right-hand side of that row.  The last row is
    replaced first; when the resulting system is singular every other row
    is tried once before giving up.  A matrix whose eigenvalue 1 has
    multiplicity two or more leaves every replacement singular and raises
    :class:`NonUniqueFixedVectorError`; so does a solution that fails the
    fixed-point verification M E = E.
    """
    _require_square(m)
    ensure_type_one(m)
    n = m.rows
    domain = m.domain
    one = one_of(domain)
    zero = zero_of(domain)
    shifted = (m - Matrix.identity(n, domain=domain)).row_lists()
    for replaced in [n - 1] + list(range(n - 1)):
        rows = [list(row) for row in shifted]
        rows[replaced] = [one] * n
        rhs = [zero] * n
        rhs[replaced] = one
        solution = _solve_square(rows, rhs, domain)
        if solution is None:
            continue
        candidate = Vector(solution, domain=domain)
        image = mat_vec(m, candidate)
        if domain is Domain.RATIONAL:
            fixed = image == candidate and vsum(candidate) == 1
        else:
            fixed = all(
                scalars_close(float(u), float(v))
                for u, v in zip(image, candidate)
            ) and scalars_close(float(vsum(candidate)), 1.0)
        if not fixed:
            raise NonUniqueFixedVectorError(
                "solved system's result is not a fixed vector of the matrix"
            )
        return candidate
    raise NonUniqueFixedVectorError(
        "no unique fixed vector with entry sum one "
        "(eigenvalue 1 appears with multiplicity two or more)"
    )


def limit_projection(e: Vector) -> Matrix:
    """Square matrix with every column equal to e; requires entry sum one.

    The result P is the outer product of e with the all-ones row, so
    P P = P and P x = (entry sum of x) * e for every vector x.
    """
    total = vsum(e)
    if e.domain is Domain.RATIONAL:
        ok = total == 1
    else:
        ok = scalars_close(float(total), 1.0)
    if not ok:
        raise VsumNotOneError(f"entry sum is {total}, expected 1")
    n = len(e)
    return Matrix([[e[i]] * n for i in range(n)], domain=e.domain)


def decay_bound(var_m: Scalar, var_mp: Scalar, p: int, k: int) -> Scalar:
    """Upper bound (var M)^r * (var M^p)^q on the variation of M^k.

    Here k = p*q + r with 0 <= r < p from the division algorithm.  The
    bound is valid whenever var_mp, the variation at the contraction
    power p, is below one.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError("p must be a positive integer")
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if not var_mp < 1:
        raise ValueError("decay bound requires variation below one at power p")
    q, r = divmod(k, p)
    return var_m**r * var_mp**q


def iterate_error_bound(
    m: Matrix, k: int, x: Vector, e: Vector
) -> tuple[Scalar, Scalar]:
    """Actual distance of M^k x from e, next to its certified bound.

    Requires a type-1 square matrix and entry sum one for both x and e.
    Returns (|M^k x - e|, variation(M^k) * |x - e|) in the l1 norm; the
    first component never exceeds the second.
    """
    _require_square(m)
    ensure_type_one(m)
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if len(x) != m.rows or len(e) != m.rows:
        raise DimensionError("vector lengths must match the matrix dimension")
    for vec, name in ((x, "x"), (e, "e")):
        total = vsum(vec)
        if m.domain is Domain.RATIONAL:
            ok = total == 1
        else:
            ok = scalars_close(float(total), 1.0)
        if not ok:
            raise VsumNotOneError(f"entry sum of {name} is {total}, expected 1")
    mk = mat_pow(m, k)
    actual = l1_norm(mat_vec(mk, x) - e)
    bound = variation(mk).value * l1_norm(x - e)
    return actual, bound


def _report_powers(p: int, k_report: int) -> list[int]:
    """Deterministic set of exponents for the decay-bound table."""
    candidates = {1, 2, 3, 4, 5, 10, 20, 50, 100, p, k_report}
    return sorted(k for k in candidates if 1 <= k <= k_report)


def analyze(
    m: Matrix,
    p_max: int = DEFAULT_P_MAX,
    k_report: int = DEFAULT_K_REPORT,
) -> ConvergenceAnalysis:
    """Contraction search plus stationary vector and limit projection.

    Scans powers 1..p_max for variation strictly below one.  On success
    the verdict is CONVERGES and the report carries the stationary vector,
    the limit projection, and the per-power variations up to the
    contraction power.  Otherwise the verdict is NO_CONTRACTION_FOUND,
    which is deliberately inconclusive: the variation function is
    continuous, so failure below a finite bound proves nothing about
    divergence (outside the fully classified 2x2 case).
    """
    _require_square(m)
    ensure_type_one(m)
    if not isinstance(k_report, int) or k_report < 1:
        raise ValueError("k_report must be a positive integer")
    p, history = _variation_scan(m, p_max)
    if p is None:
        return ConvergenceAnalysis(
            verdict=Verdict.NO_CONTRACTION_FOUND,
            p_max=p_max,
            contraction_power=None,
            variation_at_p=None,
            variation_per_power=tuple(history),
            stationary=None,
            projection=None,
        )
    e = stationary_vector(m)
    bounds = tuple(
        (k, decay_bound(history[0], history[-1], p, k))
        for k in _report_powers(p, k_report)
    )
    return ConvergenceAnalysis(
        verdict=Verdict.CONVERGES,
        p_max=p_max,
        contraction_power=p,
        variation_at_p=history[-1],
        variation_per_power=tuple(history),
        stationary=e,
        projection=limit_projection(e),
        decay_bounds=bounds,
    )


def determinant(m: Matrix) -> Scalar:
    """Determinant by elimination; exact in the rational domain."""
    _require_square(m)
    n = m.rows
    domain = m.domain
    work = m.row_lists()
    det = one_of(domain)
    for col in range(n):
        pivot_row = None
        if domain is Domain.RATIONAL:
            for r in range(col, n):
                if work[r][col] != 0:
                    pivot_row = r
                    break
        else:
            best = 0.0
            for r in range(col, n):
                magnitude = abs(work[r][col])
                if magnitude > best:
                    best = magnitude
                    pivot_row = r
        if pivot_row is None:
            return zero_of(domain)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            if work[r][col] == 0:
                continue
            factor = work[r][col] / pivot
            for c in range(col, n):
                work[r][c] = work[r][c] - factor * work[col][c]
    return det


def _rank(rows: list[list[Scalar]], domain: Domain) -> int:
    """Row rank by forward elimination (float pivots gated by tolerance)."""
    work = [list(row) for row in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    limit = 0.0
    if domain is Domain.FLOAT:
        scale = max(1.0, max((abs(v) for row in work for v in row), default=0.0))
        limit = tolerance() * scale
    rank = 0
    pivot_row = 0
    for col in range(n):
        if pivot_row >= m:
            break
        chosen = None
        if domain is Domain.RATIONAL:
            for r in range(pivot_row, m):
                if work[r][col] != 0:
                    chosen = r
                    break
        else:
            best = limit
            for r in range(pivot_row, m):
                magnitude = abs(work[r][col])
                if magnitude > best:
                    best = magnitude
                    chosen = r
        if chosen is None:
            continue
        work[pivot_row], work[chosen] = work[chosen], work[pivot_row]
        pivot = work[pivot_row][col]
        for r in range(pivot_row + 1, m):
            if work[r][col] == 0:
                continue
            factor = work[r][col] / pivot
            for c in range(col, n):
                work[r][c] = work[r][c] - factor * work[pivot_row][c]
        pivot_row += 1
        rank += 1
    return rank


def type_eigenvalue_certificate(m: Matrix) -> Scalar:
    """Return the column-sum type c after certifying that M - cI is singular.

    The row sums of M - cI vanish, so singularity always holds for a typed
    matrix; a full-rank result would contradict that and aborts with
    RuntimeError rather than returning a wrong certificate.
    """
    _require_square(m)
    report = type_of(m)
    if not report.has_type:
        raise NotTypedError(
            f"column sums are not constant (max deviation {report.max_deviation})"
        )
    c = report.type_value
    shifted = m - Matrix.identity(m.rows, domain=m.domain).scale(c)
    if _rank(shifted.row_lists(), m.domain) >= m.rows:
        raise RuntimeError(
            "internal certificate failure: M - cI reports full rank for a typed matrix"
        )
    return c


def matrix_2x2(a: ScalarLike, b: ScalarLike) -> Matrix:
    """The 2x2 type-1 matrix [[1-a, b], [a, 1-b]]."""
    domain = Domain.FLOAT if isinstance(a, float) or isinstance(b, float) else Domain.RATIONAL
    if domain is Domain.FLOAT:
        a, b = float(a), float(b)
    else:
        a, b = Fraction(a), Fraction(b)
    one = one_of(domain)
    return Matrix([[one - a, b], [a, one - b]], domain=domain)


def classify_2x2(a: ScalarLike, b: ScalarLike) -> Classification2x2:
    """Complete convergence taxonomy for [[1-a, b], [a, 1-b]] with c = a + b.

    Float inputs use the module tolerance as a guard band: c within
    tolerance of zero counts as zero, and the convergent window requires c
    clearly inside (0, 2).
    """
    domain = Domain.FLOAT if isinstance(a, float) or isinstance(b, float) else Domain.RATIONAL
    if domain is Domain.FLOAT:
        a, b = float(a), float(b)
    else:
        a, b = Fraction(a), Fraction(b)
    c = a + b
    one = one_of(domain)
    var_value = abs(one - c)
    eigenvalues = (one, one - c)
    eigenvectors = None if is_zero(c, domain) else ((b, a), (one, -one))
    if is_zero(a, domain) and is_zero(b, domain):
        case = Case2x2.IDENTITY
        stationary = None
    elif is_zero(c, domain):
        case = Case2x2.DIVERGES_LINEAR
        stationary = None
    elif strictly_less(zero_of(domain), c, domain) and strictly_less(c, 2 * one, domain):
        case = Case2x2.CONVERGES_GENERIC
        stationary = Vector([b / c, a / c], domain=domain)
    else:
        case = Case2x2.DIVERGES_GENERIC
        stationary = None
    return Classification2x2(
        case=case,
        a=a,
        b=b,
        c=c,
        variation=var_value,
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        stationary=stationary,
    )
