"""Division by recurrent sequences instead of iterated subtraction.

A single linear recurrence driven by the divisor's tail produces a
sequence whose terms, combined with the high coefficients of the
dividend, give every quotient coefficient directly. The remainder then
falls out of one convolution. Nothing here calls the long-division
oracle; agreement between the two routes is checked in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polycore import (
    DegreeTooSmall,
    DivisionResult,
    DivisorViews,
    Polynomial,
    Rational,
    ZeroDivisor,
    divisor_views,
)

# Sequence kinds. The monic kind absorbs the leading coefficient into the
# divisor; the general kind carries it through every step instead.
S_MONIC = "s"
T_GENERAL = "t"


@dataclass(frozen=True)
class RecurrentSequence:
    """Terms of one divisor-driven recurrence, 1-indexed via term()."""

    kind: str
    source_views: DivisorViews
    terms: tuple[Rational, ...]

    def term(self, r: int) -> Rational:
        if not 1 <= r <= len(self.terms):
            raise IndexError(f"term index {r} outside 1..{len(self.terms)}")
        return self.terms[r - 1]


def s_sequence(views: DivisorViews, count: int) -> RecurrentSequence:
    """First ``count`` terms of the monic-divisor recurrence.

    s_1 = 1 and each later term is a tail-weighted sum of its
    predecessors:

        s_r = sum over i of gamma(m - i) * s_{r-i},  i = 1 .. r-1,

    where gamma(j) is the negated tail of the monic divisor and reads 0
    outside 0..m-1. For x^2 - x - 1 this is the Fibonacci sequence.
    """
    if count < 1:
        raise DegreeTooSmall("a sequence needs at least one term")
    m = views.degree
    terms = [Fraction(1)]
    for r in range(2, count + 1):
        acc = Fraction(0)
        for i in range(1, r):
            g = views.gamma(m - i)
            if g != 0:
                acc += g * terms[r - i - 1]
        terms.append(acc)
    return RecurrentSequence(kind=S_MONIC, source_views=views, terms=tuple(terms))


def t_sequence(views: DivisorViews, count: int) -> RecurrentSequence:
    """First ``count`` terms of the general-divisor recurrence.

    t_1 = 1/lead and

        t_r = (1/lead) * sum over i of c(m - i) * t_{r-i},  i = 1 .. r-1,

    with c(j) the negated divisor tail. Term for term this is the monic
    sequence divided by the leading coefficient: lead * t_r = s_r.
    """
    if count < 1:
        raise DegreeTooSmall("a sequence needs at least one term")
    m = views.degree
    inv = Fraction(1) / views.lead
    terms = [inv]
    for r in range(2, count + 1):
        acc = Fraction(0)
        for i in range(1, r):
            ci = views.c(m - i)
            if ci != 0:
                acc += ci * terms[r - i - 1]
        terms.append(acc * inv)
    return RecurrentSequence(kind=T_GENERAL, source_views=views, terms=tuple(terms))


def quotient_closed(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient coefficients straight from the general recurrence.

    With n = deg f, m = deg g and t the general sequence of g, the
    quotient d_{n-m} x^{n-m} + ... + d_0 satisfies

        d_{n-m-k} = sum over j of t_{k+1-j} * a_{n-j},  j = 0 .. k,

    for k = 0 .. n-m. Only the top n-m+1 dividend coefficients enter, so
    perturbing any a_i with i < m cannot change the quotient.
    """
    views = divisor_views(g)
    if f.is_zero:
        raise DegreeTooSmall("the zero dividend has no quotient coefficients")
    n = f.degree
    m = views.degree
    if n < m:
        raise DegreeTooSmall(f"dividend degree {n} below divisor degree {m}")
    t = t_sequence(views, n - m + 1)
    d = [Fraction(0)] * (n - m + 1)
    for k in range(n - m + 1):
        acc = Fraction(0)
        for j in range(k + 1):
            acc += t.term(k + 1 - j) * f.coeff(n - j)
        d[n - m - k] = acc
    return Polynomial(d)


def remainder_closed(f: Polynomial, g: Polynomial, q: Polynomial) -> Polynomial:
    """Remainder as one convolution of the negated tail with the quotient.

    r_k = a_k + sum of c_i * d_j over i + j = k with 0 <= i <= m-1,
    for k = 0 .. m-1. The quotient being exact makes everything from
    degree m upward cancel, so only the low m coefficients are formed.
    Passing a q that is not the true quotient of f by g produces garbage;
    divide_closed guards that pairing.
    """
    views = divisor_views(g)
    m = views.degree
    r = []
    for k in range(m):
        acc = f.coeff(k)
        for i in range(k + 1):
            ci = views.c(i)
            if ci != 0:
                acc += ci * q.coeff(k - i)
        r.append(acc)
    return Polynomial(r)


def divide_closed(f: Polynomial, g: Polynomial) -> DivisionResult:
    """Full division via the recurrence route, for any f and nonzero g."""
    if g.is_zero:
        raise ZeroDivisor("cannot divide by the zero polynomial")
    m = g.degree
    if f.is_zero or f.degree < m:
        return DivisionResult(quotient=Polynomial(), remainder=f)
    if m == 0:
        inv = Fraction(1) / g.lead
        return DivisionResult(quotient=f * inv, remainder=Polynomial())
    q = quotient_closed(f, g)
    r = remainder_closed(f, g, q)
    return DivisionResult(quotient=q, remainder=r)
