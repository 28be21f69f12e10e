"""Command-line front end: parse, divide, cross-check, print.

Four subcommands: divide (one method), verify (all methods, compared
exactly), delta (tail determinants), sequence (recurrence terms).
Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 parse error, 2 domain error, 3 cross-method mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import closedform
from .closedform import divide_closed, s_sequence, t_sequence
from .detengine import (
    DeltaPureSpec,
    delta_pure_closed,
    delta_pure_direct,
    divide_det_formula,
    divide_det_ratio,
)
from .polycore import (
    DivisionResult,
    Polynomial,
    PolyDivError,
    divisor_views,
    long_divide,
)

# Input guards. Exact arithmetic has no overflow, so the only protection
# against hostile input is refusing it early.
DEFAULT_MAX_DEGREE = 512
MAX_COEFF_BITS = 4096


class ParseError(PolyDivError):
    """Malformed polynomial text; carries a 1-based column when known."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column

    def __str__(self) -> str:
        base = super().__str__()
        if self.column is None:
            return base
        return f"column {self.column}: {base}"


class LimitExceeded(ParseError):
    """Input is well-formed but larger than the configured caps allow."""


class Mismatch(PolyDivError):
    """Two division methods produced different exact results."""


def _max_degree() -> int:
    raw = os.environ.get("POLYDIV_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise LimitExceeded(f"POLYDIV_MAX_DEGREE is not an integer: {raw!r}")


def _check_coefficient(value: Fraction, column: int | None = None) -> Fraction:
    bits = max(value.numerator.bit_length(), value.denominator.bit_length())
    if bits > MAX_COEFF_BITS:
        raise LimitExceeded(
            f"coefficient needs {bits} bits, cap is {MAX_COEFF_BITS}", column
        )
    return value


_RATIONAL_RE = re.compile(r"(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?")
_TERM_RE = re.compile(
    r"(?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?\s*)?(?P<var>x(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?"
)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_list(text: str) -> Polynomial:
    # Ascending coefficient-list syntax: "[1/2, -2, 0, 0, 3]".
    stripped = text.rstrip()
    if not stripped.endswith("]"):
        raise ParseError("unterminated coefficient list", column=len(text))
    open_at = text.index("[")
    inner = stripped[open_at + 1 : len(stripped) - 1]
    if not inner.strip():
        return Polynomial()
    entries = inner.split(",")
    if len(entries) - 1 > _max_degree():
        raise LimitExceeded(
            f"coefficient list implies degree {len(entries) - 1}, "
            f"cap is {_max_degree()}"
        )
    coeffs = []
    offset = open_at + 1
    for entry in entries:
        column = offset + (len(entry) - len(entry.lstrip())) + 1
        body = entry.strip()
        sign = 1
        if body.startswith(("+", "-")):
            sign = -1 if body[0] == "-" else 1
            body = body[1:].strip()
        match = _RATIONAL_RE.fullmatch(body)
        if not match:
            raise ParseError(f"bad list entry {entry.strip()!r}", column)
        den = int(match.group("den")) if match.group("den") else 1
        if den == 0:
            raise ParseError("zero denominator", column)
        value = Fraction(sign * int(match.group("num")), den)
        coeffs.append(_check_coefficient(value, column))
        offset += len(entry) + 1
    return Polynomial(coeffs)


def parse_polynomial(text: str) -> Polynomial:
    """Canonical polynomial from human syntax.

    Terms look like "3x^4", "-x", "1/2"; they are joined by + or - and
    duplicate exponents are summed. "[a0, a1, ...]" gives coefficients
    directly, ascending. The Unicode minus sign is accepted.
    """
    src = text.replace("−", "-")
    pos = _skip_ws(src, 0)
    if pos == len(src):
        raise ParseError("empty polynomial text", column=pos + 1)
    if src[pos] == "[":
        return _parse_list(src)

    powers: dict[int, Fraction] = {}
    first = True
    cap = _max_degree()
    while pos < len(src):
        sign = 1
        if src[pos] in "+-":
            sign = -1 if src[pos] == "-" else 1
            pos = _skip_ws(src, pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", column=pos + 1)
        match = _TERM_RE.match(src, pos)
        if match is None or match.end() == pos:
            raise ParseError("expected a term", column=pos + 1)
        column = pos + 1
        if match.group("num") is not None:
            den = int(match.group("den")) if match.group("den") else 1
            if den == 0:
                raise ParseError("zero denominator", column)
            coeff = Fraction(int(match.group("num")), den)
        else:
            coeff = Fraction(1)
        if match.group("var") is not None:
            exp = int(match.group("exp")) if match.group("exp") else 1
            if exp < 0:
                raise ParseError(f"negative exponent {exp}", column)
            if exp > cap:
                raise LimitExceeded(f"exponent {exp} exceeds degree cap {cap}", column)
        else:
            exp = 0
        _check_coefficient(coeff, column)
        powers[exp] = powers.get(exp, Fraction(0)) + sign * coeff
        first = False
        pos = _skip_ws(src, match.end())

    top = max(powers)
    coeffs = [powers.get(i, Fraction(0)) for i in range(top + 1)]
    for i, value in enumerate(coeffs):
        _check_coefficient(value)
    return Polynomial(coeffs)


def render_polynomial(p: Polynomial) -> str:
    """Human text, descending powers; parse_polynomial inverts this."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = "x" if i == 1 else f"x^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _coeff_strings(p: Polynomial) -> tuple[str, ...]:
    return tuple(str(c) for c in p.coeffs)


@dataclass(frozen=True)
class DivisionReport:
    """One division outcome, serialization-ready: every scalar is an
    exact "num/den" or "num" string, coefficient arrays ascending."""

    dividend: str
    divisor: str
    method: str
    quotient: tuple[str, ...]
    remainder: tuple[str, ...]
    agreement: dict[str, bool] | None = None

    def to_json(self) -> str:
        payload = {
            "dividend": self.dividend,
            "divisor": self.divisor,
            "method": self.method,
            "quotient": list(self.quotient),
            "remainder": list(self.remainder),
        }
        if self.agreement is not None:
            payload["agreement"] = self.agreement
        return json.dumps(payload)

    def to_text(self) -> str:
        lines = [
            f"quotient: {render_polynomial(Polynomial(self.quotient))}",
            f"remainder: {render_polynomial(Polynomial(self.remainder))}",
        ]
        if self.agreement is not None:
            flags = " ".join(
                f"{tag}={'yes' if ok else 'no'}" for tag, ok in self.agreement.items()
            )
            lines.append(f"agreement: {flags}")
        return "\n".join(lines)


# Dispatch table for the four division routes. Tests may swap an entry
# to prove the verify command actually notices a wrong method.
METHODS = {
    "longdiv": long_divide,
    "closed": divide_closed,
    "det-formula": divide_det_formula,
    "det-ratio": divide_det_ratio,
}

_DELTA_VARIANTS = ("pure-direct", "pure-closed", "pure-flipped")


def _build_report(
    dividend_text: str,
    divisor_text: str,
    method: str,
    f: Polynomial,
    g: Polynomial,
    result: DivisionResult,
    agreement: dict[str, bool] | None = None,
) -> DivisionReport:
    if not result.reconstructs(f, g):
        raise Mismatch(f"method {method} fails to reconstruct the dividend")
    return DivisionReport(
        dividend=dividend_text,
        divisor=divisor_text,
        method=method,
        quotient=_coeff_strings(result.quotient),
        remainder=_coeff_strings(result.remainder),
        agreement=agreement,
    )


def cmd_divide(dividend: str, divisor: str, method: str = "longdiv") -> DivisionReport:
    f = parse_polynomial(dividend)
    g = parse_polynomial(divisor)
    result = METHODS[method](f, g)
    return _build_report(dividend, divisor, method, f, g, result)


def _first_difference(a: Polynomial, b: Polynomial) -> tuple[int, Fraction, Fraction]:
    width = max(len(a.coeffs), len(b.coeffs))
    for i in range(width):
        if a.coeff(i) != b.coeff(i):
            return i, a.coeff(i), b.coeff(i)
    raise ValueError("polynomials are equal")


def cmd_verify(dividend: str, divisor: str) -> DivisionReport:
    """Run every method and demand exact agreement with long division."""
    f = parse_polynomial(dividend)
    g = parse_polynomial(divisor)
    reference = METHODS["longdiv"](f, g)
    agreement: dict[str, bool] = {}
    for tag, method in METHODS.items():
        result = method(f, g)
        agreement[tag] = result == reference
        if agreement[tag]:
            continue
        if result.quotient != reference.quotient:
            part, got, want = "quotient", result.quotient, reference.quotient
        else:
            part, got, want = "remainder", result.remainder, reference.remainder
        i, got_c, want_c = _first_difference(got, want)
        raise Mismatch(
            f"method {tag} disagrees with longdiv: {part} coefficient of "
            f"x^{i} is {got_c}, expected {want_c}"
        )
    return _build_report(dividend, divisor, "longdiv", f, g, reference, agreement)


def cmd_delta(divisor: str, k: int, variant: str) -> str:
    views = divisor_views(parse_polynomial(divisor))
    spec = DeltaPureSpec(views=views, k=k)
    if variant == "pure-direct":
        value = delta_pure_direct(spec)
    elif variant == "pure-closed":
        value = delta_pure_closed(spec)
    elif variant == "pure-flipped":
        value = delta_pure_closed(spec, flipped=True)
    else:
        raise ParseError(f"unknown delta variant {variant!r}")
    return str(value)


def cmd_sequence(divisor: str, kind: str, count: int) -> str:
    views = divisor_views(parse_polynomial(divisor))
    if kind == closedform.S_MONIC:
        seq = s_sequence(views, count)
    elif kind == closedform.T_GENERAL:
        seq = t_sequence(views, count)
    else:
        raise ParseError(f"unknown sequence kind {kind!r}")
    return ", ".join(str(term) for term in seq.terms)


def _handle_divide(args: argparse.Namespace) -> str:
    report = cmd_divide(args.dividend, args.divisor, args.method)
    return report.to_json() if args.format == "json" else report.to_text()


def _handle_verify(args: argparse.Namespace) -> str:
    report = cmd_verify(args.dividend, args.divisor)
    return report.to_json() if args.format == "json" else report.to_text()


def _handle_delta(args: argparse.Namespace) -> str:
    return cmd_delta(args.divisor, args.k, args.variant)


def _handle_sequence(args: argparse.Namespace) -> str:
    return cmd_sequence(args.divisor, args.kind, args.count)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydiv",
        description="Exact polynomial division, three independent ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    divide = sub.add_parser("divide", help="divide once with one method")
    divide.add_argument("--dividend", required=True)
    divide.add_argument("--divisor", required=True)
    divide.add_argument("--method", choices=tuple(METHODS), default="longdiv")
    divide.add_argument("--format", choices=("text", "json"), default="text")
    divide.set_defaults(handler=_handle_divide)

    verify = sub.add_parser("verify", help="run all methods and compare exactly")
    verify.add_argument("--dividend", required=True)
    verify.add_argument("--divisor", required=True)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(handler=_handle_verify)

    delta = sub.add_parser("delta", help="tail determinant of one divisor")
    delta.add_argument("--divisor", required=True)
    delta.add_argument("-k", type=int, required=True)
    delta.add_argument("--variant", choices=_DELTA_VARIANTS, default="pure-closed")
    delta.set_defaults(handler=_handle_delta)

    sequence = sub.add_parser("sequence", help="terms of a divisor recurrence")
    sequence.add_argument("--divisor", required=True)
    sequence.add_argument("--kind", choices=(closedform.S_MONIC, closedform.T_GENERAL), required=True)
    sequence.add_argument("-n", dest="count", type=int, required=True)
    sequence.set_defaults(handler=_handle_sequence)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        output = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except Mismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 3
    except PolyDivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(output)
    return 0


def run() -> None:
    sys.exit(main())
