"""Text format for polynomials: parse and print, round-trip safe.

Grammar, by example::

    u^3*v - 33*u^8*v^4
    27*x1^5 + 25*s5*x2^3 + 4*x3^2
    3/2*i*s10*u^2 - v

Terms are joined by + and -.  A term is a '*'-separated product of factors:
an integer or fraction, the coefficient symbols i, s2, s5, s10, and variables
with optional caret exponents.  Coefficients with several basis components
are printed as separate terms (one per basis symbol), so everything printed
stays inside this grammar.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Sequence

from .ring import BASIS_SYMBOLS, ExactScalar
from .poly import BivariatePoly, MultiPoly, grlex_key

_SYMBOL_VALUES = {
    "i": ExactScalar.basis_element(1),
    "s2": ExactScalar.basis_element(2),
    "s5": ExactScalar.basis_element(3),
    "s10": ExactScalar.basis_element(6),
}

_RATIONAL_RE = re.compile(r"^(\d+)(?:/(\d+))?$")
_VAR_RE = re.compile(r"^([A-Za-z]\w*?)(?:\^(\d+))?$")


def _split_terms(text: str):
    """Split on top-level + and -, yielding (sign, term_text) pairs."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms = []
    sign = 1
    token = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "+-":
            chunk = "".join(token).strip()
            if chunk:
                terms.append((sign, chunk))
            elif terms:
                raise ValueError(f"dangling operator in {text!r}")
            sign = 1 if ch == "+" else -1
            token = []
        else:
            token.append(ch)
        i += 1
    chunk = "".join(token).strip()
    if not chunk:
        raise ValueError(f"dangling operator in {text!r}")
    terms.append((sign, chunk))
    return terms


def parse_terms(text: str, variables: Sequence[str]) -> Dict[tuple, ExactScalar]:
    """Parse into exponent-vector -> coefficient over the given variables."""
    var_index = {name: k for k, name in enumerate(variables)}
    acc: Dict[tuple, ExactScalar] = {}
    for sign, term in _split_terms(text):
        coeff = ExactScalar.rational(sign)
        exponents = [0] * len(variables)
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {term!r}")
            m = _RATIONAL_RE.match(factor)
            if m:
                num, den = m.groups()
                coeff = coeff * Fraction(int(num), int(den) if den else 1)
                continue
            if factor in _SYMBOL_VALUES:
                coeff = coeff * _SYMBOL_VALUES[factor]
                continue
            m = _VAR_RE.match(factor)
            if m and m.group(1) in var_index:
                exponents[var_index[m.group(1)]] += int(m.group(2) or 1)
                continue
            raise ValueError(f"cannot parse factor {factor!r} in {term!r}")
        key = tuple(exponents)
        previous = acc.get(key)
        acc[key] = coeff if previous is None else previous + coeff
    return acc


def parse_bivariate(text: str) -> BivariatePoly:
    return BivariatePoly(parse_terms(text, ("u", "v")))


def parse_multi(text: str, weights: Sequence[int], variables: Sequence[str] = None) -> MultiPoly:
    if variables is None:
        variables = tuple(f"x{k + 1}" for k in range(len(weights)))
    return MultiPoly(len(weights), weights, parse_terms(text, variables))


def _monomial_text(exponent: Sequence[int], variables: Sequence[str]) -> str:
    pieces = []
    for e, name in zip(exponent, variables):
        if e == 1:
            pieces.append(name)
        elif e > 1:
            pieces.append(f"{name}^{e}")
    return "*".join(pieces)


def format_terms(terms: Dict[tuple, ExactScalar], variables: Sequence[str]) -> str:
    """Render terms in descending graded-lex order, one printed term per
    nonzero basis component of each coefficient."""
    printed = []
    for exponent in sorted(terms, key=grlex_key, reverse=True):
        coeff = terms[exponent]
        monomial = _monomial_text(exponent, variables)
        for coord, symbol in zip(coeff.coords, BASIS_SYMBOLS):
            if coord == 0:
                continue
            sign = "-" if coord < 0 else "+"
            mag = abs(coord)
            pieces = []
            if mag != 1 or (not symbol and not monomial):
                pieces.append(str(mag))
            if symbol:
                pieces.append(symbol)
            if monomial:
                pieces.append(monomial)
            if not pieces:
                pieces.append("1")
            printed.append((sign, "*".join(pieces)))
    if not printed:
        return "0"
    first_sign, first_body = printed[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in printed[1:]:
        out += f" {sign} {body}"
    return out


def format_bivariate(p: BivariatePoly) -> str:
    return format_terms(p.terms, ("u", "v"))


def format_multi(p: MultiPoly, variables: Sequence[str] = None) -> str:
    if variables is None:
        variables = tuple(f"x{k + 1}" for k in range(p.nvars))
    return format_terms(p.terms, variables)
