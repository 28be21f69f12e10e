"""Division through exact determinants of structured matrices.

The linear system tying quotient to dividend has a Hankel coefficient
matrix H whose determinant is known in closed form. Bordering H with the
dividend column and a row of powers of x gives a matrix W whose
determinant is a scalar multiple of the quotient polynomial itself.
Cycling and reversing the rows of W turns it into a lower Hessenberg
matrix with constant superdiagonal, whose leading minors (the mixed
deltas) deliver the quotient one coefficient at a time. A second, pure
family of deltas built from the divisor tail alone collapses to a short
sum over the general recurrent sequence.

Everything is exact. The det_oracle here is the brute-force referee for
every closed determinant formula in the package; it shares no code with
the formulas it checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .closedform import t_sequence
from .polycore import (
    DegreeTooSmall,
    DivisionResult,
    DivisorViews,
    Polynomial,
    PolyDivError,
    Rational,
    ZeroDivisor,
    divisor_views,
)

# Hard ceiling on constructed matrix orders. Exact determinants blow up
# combinatorially in entry size; past desk scale the right response is a
# loud error, not a silent stall. Every builder takes a max_order
# override for callers that know better.
DEFAULT_MAX_ORDER = 64


class IndexOutOfRange(PolyDivError):
    """A delta index k falls outside the range the construction defines."""


class MatrixTooLarge(PolyDivError):
    """A requested matrix order exceeds the configured cap."""


def _check_order(order: int, max_order: int) -> None:
    if order < 1:
        raise IndexOutOfRange(f"matrix order must be positive, got {order}")
    if order > max_order:
        raise MatrixTooLarge(f"matrix order {order} exceeds the cap {max_order}")


class ExactMatrix:
    """Immutable square matrix of rationals.

    Rows are addressed 0-based in code; the docstrings of the builders
    speak 1-based where that matches the written formulas.
    """

    __slots__ = ("rows",)

    rows: tuple[tuple[Rational, ...], ...]

    def __init__(self, rows: Iterable[Sequence]):
        grid = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not grid:
            raise IndexOutOfRange("a matrix needs at least one row")
        if any(len(row) != len(grid) for row in grid):
            raise IndexOutOfRange("matrix must be square")
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Rational:
        return self.rows[i][j]

    def leading_minor(self, k: int) -> ExactMatrix:
        """The top-left k-by-k submatrix."""
        if not 1 <= k <= self.order:
            raise IndexOutOfRange(f"minor order {k} outside 1..{self.order}")
        return ExactMatrix(tuple(row[:k] for row in self.rows[:k]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.order != other.order:
            raise IndexOutOfRange("matrix product needs equal orders")
        cols = tuple(zip(*other.rows))
        return ExactMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def __repr__(self) -> str:
        body = "; ".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in self.rows
        )
        return f"ExactMatrix({body})"


def _det_cofactor(rows: tuple[tuple[Rational, ...], ...]) -> Rational:
    # Textbook expansion along the first row. Exponential, so reserved
    # for the small orders where it doubles as the hand calculation.
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(size):
        pivot = rows[0][j]
        if pivot == 0:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = pivot * _det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def _det_bareiss(rows: tuple[tuple[Rational, ...], ...]) -> Rational:
    # Fraction-free elimination over the integers: each row is cleared
    # of denominators first and the accumulated scale divided back out
    # at the end. All intermediate divisions in the Bareiss update are
    # exact by construction.
    size = len(rows)
    scale = 1
    grid = []
    for row in rows:
        lcm = math.lcm(*(v.denominator for v in row))
        scale *= lcm
        grid.append([int(v * lcm) for v in row])

    sign = 1
    prev = 1
    for k in range(size - 1):
        if grid[k][k] == 0:
            for r in range(k + 1, size):
                if grid[r][k] != 0:
                    grid[k], grid[r] = grid[r], grid[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                grid[i][j] = (
                    grid[i][j] * grid[k][k] - grid[i][k] * grid[k][j]
                ) // prev
        prev = grid[k][k]
    return Fraction(sign * grid[-1][-1], scale)


def det_oracle(matrix: ExactMatrix) -> Rational:
    """Exact determinant by brute force, independent of every closed form.

    Orders up to 4 use first-row cofactor expansion, matching the hand
    calculations the golden values came from. Larger orders switch to
    fraction-free elimination, which stays exact over the integers.
    """
    if matrix.order <= 4:
        return _det_cofactor(matrix.rows)
    return _det_bareiss(matrix.rows)


def anti_identity_sign(t: int) -> Rational:
    """Determinant of the order-t anti-identity: (-1)^(t(t-1)/2).

    Reversing t rows takes floor(t/2) transpositions, whose parity
    matches t(t-1)/2.
    """
    if t < 1:
        raise IndexOutOfRange(f"order must be positive, got {t}")
    return Fraction(-1) ** (t * (t - 1) // 2)


def build_anti_identity(t: int, max_order: int = DEFAULT_MAX_ORDER) -> ExactMatrix:
    """Permutation matrix with ones on the anti-diagonal."""
    _check_order(t, max_order)
    return ExactMatrix(
        tuple(
            tuple(Fraction(1 if i + j == t - 1 else 0) for j in range(t))
            for i in range(t)
        )
    )


def build_hankel(g: Polynomial, n: int, max_order: int = DEFAULT_MAX_ORDER) -> ExactMatrix:
    """Coefficient matrix of the quotient system, order n - m + 1.

    Entry (i, j), 0-based, holds the raw divisor coefficient with index
    2m - n + i + j, reading 0 outside 0..m. Anti-diagonals are constant,
    the main anti-diagonal is all lead coefficients, and everything
    strictly below it is zero. Multiplying by the descending quotient
    vector reproduces the top dividend coefficients a_m .. a_n.
    """
    views = divisor_views(g)
    m = views.degree
    if n < m:
        raise DegreeTooSmall(f"target degree {n} below divisor degree {m}")
    size = n - m + 1
    _check_order(size, max_order)
    return ExactMatrix(
        tuple(
            tuple(g.coeff(2 * m - n + i + j) for j in range(size))
            for i in range(size)
        )
    )


def hankel_det_closed(g: Polynomial, n: int) -> Rational:
    """det of build_hankel(g, n) without building it.

    The matrix is anti-triangular with the lead coefficient along the
    anti-diagonal, so with t = n - m + 2 its determinant is

        (-1)^((t-1)(t-2)/2) * lead^(t-1).
    """
    views = divisor_views(g)
    if n < views.degree:
        raise DegreeTooSmall(f"target degree {n} below divisor degree {views.degree}")
    t = n - views.degree + 2
    sign = Fraction(-1) ** ((t - 1) * (t - 2) // 2)
    return sign * views.lead ** (t - 1)


def _require_division_shape(f: Polynomial, g: Polynomial) -> tuple[int, int]:
    if g.is_zero:
        raise ZeroDivisor("cannot divide by the zero polynomial")
    if g.degree < 1:
        raise DegreeTooSmall("divisor must have degree at least 1 here")
    if f.is_zero or f.degree < g.degree:
        raise DegreeTooSmall("dividend degree must reach the divisor degree")
    return f.degree, g.degree


def build_bordered(
    f: Polynomial, g: Polynomial, x0, max_order: int = DEFAULT_MAX_ORDER
) -> ExactMatrix:
    """The matrix W at the point x0, order t = n - m + 2.

    Rows 1..t-1 are the Hankel rows extended by the dividend column
    a_m .. a_n; the last row is x0^(n-m), ..., x0, 1, 0.
    """
    n, m = _require_division_shape(f, g)
    t = n - m + 2
    _check_order(t, max_order)
    x0 = Fraction(x0)
    hankel = build_hankel(g, n, max_order=max_order)
    rows = [hankel.rows[i] + (f.coeff(m + i),) for i in range(t - 1)]
    rows.append(tuple(x0 ** (n - m - j) for j in range(t - 1)) + (Fraction(0),))
    return ExactMatrix(rows)


def det_W_at(f: Polynomial, g: Polynomial, x0, max_order: int = DEFAULT_MAX_ORDER) -> Rational:
    """Exact determinant of the bordered matrix W evaluated at x0.

    As a function of x0 this is -det(H) times the quotient of f by g,
    which is what quotient_ratio exploits.
    """
    return det_oracle(build_bordered(f, g, x0, max_order=max_order))


def build_permuted(
    f: Polynomial, g: Polynomial, x0, max_order: int = DEFAULT_MAX_ORDER
) -> ExactMatrix:
    """W with its bottom row cycled to the top and last column to the front.

    Both cycles are even permutations of t - 1 transpositions each, so
    the determinant is unchanged: det(T) = det(W).
    """
    bordered = build_bordered(f, g, x0, max_order=max_order)
    cycled = [row[-1:] + row[:-1] for row in bordered.rows]
    return ExactMatrix([cycled[-1]] + cycled[:-1])


def build_hessenberg(
    f: Polynomial, g: Polynomial, x0, max_order: int = DEFAULT_MAX_ORDER
) -> ExactMatrix:
    """Lower Hessenberg form of W: the rows of T in reverse order.

    Row i (0-based, i < t-1) is a_{n-i} followed by the divisor slice
    g_{m-i}, g_{m-i+1}, ...; the constant superdiagonal is the lead
    coefficient. The last row is 0, x0^(n-m), ..., x0, 1. Equal by
    construction to anti_identity @ permuted, which the tests assert.
    """
    n, m = _require_division_shape(f, g)
    t = n - m + 2
    _check_order(t, max_order)
    x0 = Fraction(x0)
    rows = [
        (f.coeff(n - i),) + tuple(g.coeff(m - i + j - 1) for j in range(1, t))
        for i in range(t - 1)
    ]
    rows.append((Fraction(0),) + tuple(x0 ** (t - 1 - j) for j in range(1, t)))
    return ExactMatrix(rows)


@dataclass(frozen=True)
class DeltaMixedSpec:
    """Order-k leading minor of the Hessenberg form: dividend column plus
    shifted raw divisor columns."""

    f: Polynomial
    g: Polynomial
    k: int

    def __post_init__(self):
        n, m = _require_division_shape(self.f, self.g)
        if not 1 <= self.k <= n - m + 1:
            raise IndexOutOfRange(f"delta index {self.k} outside 1..{n - m + 1}")


def mixed_delta_matrix(spec: DeltaMixedSpec, max_order: int = DEFAULT_MAX_ORDER) -> ExactMatrix:
    """Explicit k-by-k matrix: column 0 holds a_n .. a_{n-k+1}, column
    j >= 1 holds the raw divisor coefficients g_{m-i+j-1}."""
    _check_order(spec.k, max_order)
    n = spec.f.degree
    m = spec.g.degree
    return ExactMatrix(
        tuple(
            (spec.f.coeff(n - i),)
            + tuple(spec.g.coeff(m - i + j - 1) for j in range(1, spec.k))
            for i in range(spec.k)
        )
    )


def _mixed_deltas(f: Polynomial, g: Polynomial, kmax: int) -> list[Rational]:
    # First-column Laplace expansion, run as a recursion. Striking row i
    # and column 0 from the order-k matrix leaves a block-triangular
    # minor: an upper-left triangle of lead coefficients contributing
    # lead^(i-1), and a lower-right band matrix in the divisor tail
    # whose determinant G_{k-i} satisfies the same expansion one level
    # down. Everything is O(kmax^2) scalar operations.
    n = f.degree
    m = g.degree
    lead = g.lead
    band = [Fraction(1)]
    for s in range(1, kmax):
        acc = Fraction(0)
        for p in range(1, s + 1):
            gp = g.coeff(m - p)
            if gp != 0:
                term = gp * lead ** (p - 1) * band[s - p]
                acc += term if p % 2 == 1 else -term
        band.append(acc)
    deltas = []
    for k in range(1, kmax + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            ai = f.coeff(n - i + 1)
            if ai != 0:
                term = ai * lead ** (i - 1) * band[k - i]
                acc += term if i % 2 == 1 else -term
        deltas.append(acc)
    return deltas


def delta_mixed(spec: DeltaMixedSpec) -> Rational:
    """Determinant of the mixed delta matrix by first-column expansion.

    Matrix-free: the block structure of each complementary minor reduces
    the whole expansion to two short convolutions. The tests hold this
    equal to det_oracle(mixed_delta_matrix(spec)).
    """
    return _mixed_deltas(spec.f, spec.g, spec.k)[-1]


def quotient_from_dets(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient assembled from the mixed deltas.

    With t = n - m + 2, coefficient j of the quotient is

        d_j = (-1)^(t-j) * lead^(j+1-t) * delta_{t-j-1},

    for j = 0 .. n-m. The delta indices run t-1 down to 1, so one shared
    recursion fills them all.
    """
    n, m = _require_division_shape(f, g)
    t = n - m + 2
    lead = g.lead
    deltas = _mixed_deltas(f, g, t - 1)
    d = [
        (1 if (t - j) % 2 == 0 else -1) * lead ** (j + 1 - t) * deltas[t - j - 2]
        for j in range(n - m + 1)
    ]
    return Polynomial(d)


def _interpolation_nodes(count: int) -> list[Rational]:
    # 0, 1, -1, 2, -2, ...: fixed and distinct, so reproducible and
    # collision-free regardless of the divisor.
    nodes = [Fraction(0)]
    step = 1
    while len(nodes) < count:
        nodes.append(Fraction(step))
        if len(nodes) < count:
            nodes.append(Fraction(-step))
        step += 1
    return nodes[:count]


def _interpolate(points: list[tuple[Rational, Rational]]) -> Polynomial:
    # Lagrange basis accumulation over exact rationals: lossless.
    total = Polynomial()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


def quotient_ratio(
    f: Polynomial, g: Polynomial, max_order: int = DEFAULT_MAX_ORDER
) -> Polynomial:
    """Quotient recovered from the ratio -det(W at x) / det(H).

    The ratio is evaluated at n - m + 1 fixed nodes and interpolated.
    The quotient has degree n - m, so that many exact samples determine
    it; det(H) comes from the oracle, keeping this route free of any
    closed formula.
    """
    n, m = _require_division_shape(f, g)
    det_h = det_oracle(build_hankel(g, n, max_order=max_order))
    points = []
    for x0 in _interpolation_nodes(n - m + 1):
        points.append((x0, -det_W_at(f, g, x0, max_order=max_order) / det_h))
    return _interpolate(points)


def hessenberg_det_expansion(f: Polynomial, g: Polynomial, x0) -> Rational:
    """Last-row expansion of the Hessenberg form's determinant at x0:

        sum over i = 2 .. t of (-1)^(t-i) * x0^(t-i) * lead^(t-i) * delta_{i-1}.

    Equals anti_identity_sign(t) times det_W_at(f, g, x0), since the row
    reversal taking the cycled matrix to Hessenberg form contributes
    exactly that sign.
    """
    n, m = _require_division_shape(f, g)
    t = n - m + 2
    x0 = Fraction(x0)
    lead = g.lead
    deltas = _mixed_deltas(f, g, t - 1)
    acc = Fraction(0)
    for i in range(2, t + 1):
        term = (x0 * lead) ** (t - i) * deltas[i - 2]
        acc += term if (t - i) % 2 == 0 else -term
    return acc


@dataclass(frozen=True)
class DeltaPureSpec:
    """Order-k determinant built from the divisor tail alone.

    The matrix is lower Hessenberg-Toeplitz: row i (1-based) holds the
    negated tail slice ending at c_{m-1} on the diagonal, with the lead
    coefficient on the superdiagonal and zeros above. Out-of-range tail
    indices read 0, so k may exceed the divisor degree.
    """

    views: DivisorViews
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise IndexOutOfRange(f"delta index must be positive, got {self.k}")


def pure_delta_matrix(
    spec: DeltaPureSpec, flipped: bool = False, max_order: int = DEFAULT_MAX_ORDER
) -> ExactMatrix:
    """Explicit matrix behind the pure deltas.

    Base variant: entry (i, j), 0-based, is -c(m-1-i+j) on and below the
    diagonal and lead on the superdiagonal. The flipped variant negates
    both: +c entries below, -lead above. Either way the determinant
    changes by (-1)^k between the two.
    """
    _check_order(spec.k, max_order)
    views = spec.views
    m = views.degree
    sgn = -1 if flipped else 1
    rows = []
    for i in range(spec.k):
        row = []
        for j in range(spec.k):
            if j <= i:
                row.append(-sgn * views.c(m - 1 - i + j))
            elif j == i + 1:
                row.append(sgn * views.lead)
            else:
                row.append(Fraction(0))
        rows.append(tuple(row))
    return ExactMatrix(rows)


def delta_pure_direct(spec: DeltaPureSpec, flipped: bool = False) -> Rational:
    """Pure delta by building the matrix and asking the oracle."""
    return det_oracle(pure_delta_matrix(spec, flipped=flipped))


def delta_pure_closed(spec: DeltaPureSpec, flipped: bool = False) -> Rational:
    """Pure delta as a short sum over the general recurrent sequence:

        delta_k = (-1)^k * lead^k * sum over i = 1 .. k of t_i * c(m-k-1+i)

    for the base variant; the flipped variant drops the (-1)^k."""
    views = spec.views
    m = views.degree
    t_terms = t_sequence(views, spec.k)
    acc = Fraction(0)
    for i in range(1, spec.k + 1):
        ci = views.c(m - spec.k - 1 + i)
        if ci != 0:
            acc += t_terms.term(i) * ci
    base = views.lead ** spec.k * acc
    if flipped:
        return base
    return base if spec.k % 2 == 0 else -base


def divide_det_formula(f: Polynomial, g: Polynomial) -> DivisionResult:
    """Full division with the quotient taken from the mixed deltas."""
    from .closedform import remainder_closed

    if g.is_zero:
        raise ZeroDivisor("cannot divide by the zero polynomial")
    m = g.degree
    if f.is_zero or f.degree < m:
        return DivisionResult(quotient=Polynomial(), remainder=f)
    if m == 0:
        return DivisionResult(quotient=f * (Fraction(1) / g.lead), remainder=Polynomial())
    q = quotient_from_dets(f, g)
    return DivisionResult(quotient=q, remainder=remainder_closed(f, g, q))


def divide_det_ratio(
    f: Polynomial, g: Polynomial, max_order: int = DEFAULT_MAX_ORDER
) -> DivisionResult:
    """Full division with the quotient taken from the determinant ratio."""
    from .closedform import remainder_closed

    if g.is_zero:
        raise ZeroDivisor("cannot divide by the zero polynomial")
    m = g.degree
    if f.is_zero or f.degree < m:
        return DivisionResult(quotient=Polynomial(), remainder=f)
    if m == 0:
        return DivisionResult(quotient=f * (Fraction(1) / g.lead), remainder=Polynomial())
    q = quotient_ratio(f, g, max_order=max_order)
    return DivisionResult(quotient=q, remainder=remainder_closed(f, g, q))
