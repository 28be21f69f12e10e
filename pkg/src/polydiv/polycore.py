"""Exact scalars, dense polynomials, and the long-division oracle.

Coefficients live in the field of rationals with arbitrary precision, so
every arithmetic identity in this package is decided by exact equality.
A polynomial is a dense ascending coefficient sequence: index i holds the
coefficient of x^i. The canonical zero polynomial is the empty sequence,
and its degree is None rather than a sentinel integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

# The coefficient field. Fraction is already canonical (reduced form,
# positive denominator) and exact, which is all the package relies on.
Rational = Fraction

Scalar = Union[Rational, int, str]


class PolyDivError(Exception):
    """Base class for every domain error raised by this package."""


class ZeroDivisor(PolyDivError):
    """Division by the zero polynomial."""


class DegreeTooSmall(PolyDivError):
    """A degree precondition does not hold (e.g. deg f < deg g)."""


def _coerce(value: Scalar) -> Rational:
    return value if isinstance(value, Fraction) else Fraction(value)


class Polynomial:
    """Immutable dense polynomial over the rationals.

    >>> Polynomial([1, 2, 0, 0])
    Polynomial([1, 2])
    >>> Polynomial([]).is_zero
    True
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Rational, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [_coerce(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Rational:
        """Leading coefficient; undefined (raises) for the zero polynomial."""
        if not self.coeffs:
            raise ZeroDivisor("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Rational:
        """Coefficient of x^i, with every out-of-range index reading as 0."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        short, long_ = sorted((self.coeffs, other.coeffs), key=len)
        summed = [a + b for a, b in zip(long_, short)]
        return Polynomial(summed + list(long_[len(short):]))

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * _coerce(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        result = long_divide(self, other)
        return result.quotient, result.remainder

    def __call__(self, x0: Scalar) -> Rational:
        return evaluate(self, x0)

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"Polynomial([{inner}])"


@dataclass(frozen=True)
class DivisorViews:
    """The three coefficient views of one nonzero divisor.

    For g of degree m with leading coefficient ``lead``:

    * ``raw`` is g itself, coefficients g_0..g_m ascending;
    * ``monic_tail`` holds g_i / lead for i < m (the tail of g made monic);
    * ``negated_tail`` holds -g_i for i < m.

    The negated tail is the canonical internal form for every recurrence
    and closed formula in this package, which removes the usual sign
    ambiguity between writing a divisor with plus signs or with the tail
    subtracted from the leading term. Indices outside 0..m-1 read as 0.
    """

    raw: Polynomial
    lead: Rational
    monic_tail: tuple[Rational, ...]
    negated_tail: tuple[Rational, ...]

    @property
    def degree(self) -> int:
        return len(self.monic_tail)

    def beta(self, j: int) -> Rational:
        """Monic-tail coefficient g_j / lead, 0 when j is out of range."""
        if 0 <= j < len(self.monic_tail):
            return self.monic_tail[j]
        return Fraction(0)

    def c(self, j: int) -> Rational:
        """Negated-tail coefficient -g_j, 0 when j is out of range."""
        if 0 <= j < len(self.negated_tail):
            return self.negated_tail[j]
        return Fraction(0)

    def gamma(self, j: int) -> Rational:
        """Negated tail of the monic divisor: c_j / lead, 0 out of range."""
        return self.c(j) / self.lead


@dataclass(frozen=True)
class DivisionResult:
    """Quotient/remainder pair; unique for a given dividend and divisor."""

    quotient: Polynomial
    remainder: Polynomial

    def reconstructs(self, dividend: Polynomial, divisor: Polynomial) -> bool:
        """Check divisor * quotient + remainder == dividend exactly, along
        with the degree bound on the remainder."""
        if divisor * self.quotient + self.remainder != dividend:
            return False
        if self.remainder.is_zero:
            return True
        if divisor.is_zero:
            return False
        return self.remainder.degree < divisor.degree


def normalize(coeffs: Iterable[Scalar]) -> Polynomial:
    """Canonical polynomial from a raw coefficient sequence.

    Trailing zeros are stripped; an all-zero or empty input yields the
    canonical zero polynomial.
    """
    return Polynomial(coeffs)


def evaluate(p: Polynomial, x0: Scalar) -> Rational:
    """Exact value of p at x0 by Horner's scheme."""
    x0 = _coerce(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(p: Polynomial, c: Scalar) -> Polynomial:
    return p * _coerce(c)


def long_divide(f: Polynomial, g: Polynomial) -> DivisionResult:
    """Schoolbook Euclidean division of f by a nonzero g.

    Returns the unique (q, r) with f = g*q + r and r either zero or of
    degree strictly below deg g. This is the ground-truth oracle that the
    closed-form and determinant routes are checked against.
    """
    if g.is_zero:
        raise ZeroDivisor("cannot divide by the zero polynomial")
    m = g.degree
    if f.is_zero or f.degree < m:
        return DivisionResult(quotient=Polynomial(), remainder=f)

    lead = g.lead
    rem = list(f.coeffs)
    q = [Fraction(0)] * (f.degree - m + 1)
    for k in range(f.degree - m, -1, -1):
        coef = rem[k + m] / lead
        q[k] = coef
        if coef == 0:
            continue
        for i, gi in enumerate(g.coeffs):
            rem[k + i] -= coef * gi
    return DivisionResult(quotient=Polynomial(q), remainder=Polynomial(rem[:m]))


def monic_reduction(f: Polynomial, g: Polynomial) -> DivisionResult:
    """Divide by first normalizing the divisor to a monic polynomial.

    Dividing f by g/lead(g) leaves the remainder unchanged and scales the
    quotient by lead(g), so dividing the intermediate quotient back down
    reproduces long_divide(f, g) exactly.
    """
    if g.is_zero:
        raise ZeroDivisor("cannot divide by the zero polynomial")
    lead = g.lead
    inner = long_divide(f, scale(g, Fraction(1) / lead))
    return DivisionResult(
        quotient=scale(inner.quotient, Fraction(1) / lead),
        remainder=inner.remainder,
    )


def divisor_views(g: Polynomial) -> DivisorViews:
    """Build the canonical multi-convention view of a nonzero divisor."""
    if g.is_zero:
        raise ZeroDivisor("the zero polynomial has no divisor views")
    lead = g.lead
    tail = g.coeffs[:-1]
    return DivisorViews(
        raw=g,
        lead=lead,
        monic_tail=tuple(c / lead for c in tail),
        negated_tail=tuple(-c for c in tail),
    )
