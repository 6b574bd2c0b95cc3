"""Exact arithmetic foundation: the ring Q[i, sqrt2, sqrt5], sparse exact
polynomials, exact linear algebra, and the polynomial text format."""

from .ring import ExactScalar, HALF, I, ONE, SQRT2, SQRT5, SQRT10, ZERO
from .poly import BivariatePoly, MultiPoly, grlex_key
from .linalg import ExactMatrix, in_span, nullspace_basis, rref
from .textform import (
    format_bivariate,
    format_multi,
    format_terms,
    parse_bivariate,
    parse_multi,
    parse_terms,
)

__all__ = [
    "ExactScalar",
    "BivariatePoly",
    "MultiPoly",
    "ExactMatrix",
    "ZERO",
    "ONE",
    "I",
    "SQRT2",
    "SQRT5",
    "SQRT10",
    "HALF",
    "grlex_key",
    "nullspace_basis",
    "rref",
    "in_span",
    "parse_bivariate",
    "parse_multi",
    "parse_terms",
    "format_bivariate",
    "format_multi",
    "format_terms",
]
