"""Sparse exact polynomials: bivariate in u, v and weighted multivariate.

Both classes map exponent tuples to nonzero ExactScalar coefficients and are
treated as immutable; every operation returns a fresh polynomial.  Terms are
ordered graded-lexicographically (total degree first, then lexicographic with
the earlier variable larger) wherever a deterministic order is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .ring import ExactScalar, ONE, ZERO

Exponent2 = Tuple[int, int]


def _coerce_scalar(c) -> ExactScalar:
    if isinstance(c, ExactScalar):
        return c
    return ExactScalar.rational(c)


def grlex_key(exponent: Sequence[int]):
    """Sort key for graded-lex order; larger key means larger monomial."""
    return (sum(exponent), tuple(exponent))


class BivariatePoly:
    """Polynomial in u, v over Q[i, sqrt2, sqrt5]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Exponent2, ExactScalar]):
        clean = {}
        for exp, coeff in terms.items():
            coeff = _coerce_scalar(coeff)
            if not coeff.is_zero():
                a, b = exp
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent {exp}")
                clean[(int(a), int(b))] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "BivariatePoly":
        return BivariatePoly({})

    @staticmethod
    def constant(c) -> "BivariatePoly":
        return BivariatePoly({(0, 0): _coerce_scalar(c)})

    @staticmethod
    def monomial(coeff, a: int, b: int) -> "BivariatePoly":
        return BivariatePoly({(a, b): _coerce_scalar(coeff)})

    @staticmethod
    def u() -> "BivariatePoly":
        return BivariatePoly({(1, 0): ONE})

    @staticmethod
    def v() -> "BivariatePoly":
        return BivariatePoly({(0, 1): ONE})

    @staticmethod
    def from_terms(terms: Iterable[Tuple[object, int, int]]) -> "BivariatePoly":
        acc: Dict[Exponent2, ExactScalar] = {}
        for coeff, a, b in terms:
            c = _coerce_scalar(coeff)
            acc[(a, b)] = acc.get((a, b), ZERO) + c
        return BivariatePoly(acc)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc[exp] = acc.get(exp, ZERO) + coeff
        return BivariatePoly(acc)

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc[exp] = acc.get(exp, ZERO) - coeff
        return BivariatePoly(acc)

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self.scale(other)
        acc: Dict[Exponent2, ExactScalar] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                exp = (a1 + a2, b1 + b2)
                acc[exp] = acc.get(exp, ZERO) + c1 * c2
        return BivariatePoly(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "BivariatePoly":
        c = _coerce_scalar(c)
        return BivariatePoly({e: coeff * c for e, coeff in self.terms.items()})

    def __pow__(self, n: int) -> "BivariatePoly":
        if n < 0:
            raise ValueError("negative power")
        result = BivariatePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(a + b for a, b in self.terms)

    def homogeneous_degree(self) -> Optional[int]:
        """Common total degree of all terms, or None if inhomogeneous."""
        degrees = {a + b for a, b in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.homogeneous_degree() is not None

    def sorted_terms(self):
        """Terms in descending graded-lex order (u larger than v)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_exponent(self) -> Exponent2:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    # -- substitution --------------------------------------------------------

    def substitute_linear(self, matrix) -> "BivariatePoly":
        """Evaluate p(a*u + b*v, c*u + d*v) for matrix rows ((a, b), (c, d))."""
        rows = getattr(matrix, "rows", matrix)
        (a, b), (c, d) = rows
        image_u = BivariatePoly({(1, 0): _coerce_scalar(a), (0, 1): _coerce_scalar(b)})
        image_v = BivariatePoly({(1, 0): _coerce_scalar(c), (0, 1): _coerce_scalar(d)})
        max_a = max((e[0] for e in self.terms), default=0)
        max_b = max((e[1] for e in self.terms), default=0)
        u_pows = [BivariatePoly.constant(1)]
        for _ in range(max_a):
            u_pows.append(u_pows[-1] * image_u)
        v_pows = [BivariatePoly.constant(1)]
        for _ in range(max_b):
            v_pows.append(v_pows[-1] * image_v)
        acc = BivariatePoly.zero()
        for (ea, eb), coeff in self.terms.items():
            acc = acc + (u_pows[ea] * v_pows[eb]).scale(coeff)
        return acc

    def __str__(self):
        from .textform import format_bivariate

        return format_bivariate(self)

    def __repr__(self):
        return f"BivariatePoly({self})"


class MultiPoly:
    """Polynomial in x1..xk with per-variable positive integer weights.

    The weights record the degrees of the bivariate generators that the
    variables stand for, so weighted-homogeneous relation candidates can be
    enumerated degree by degree.
    """

    __slots__ = ("nvars", "weights", "terms")

    def __init__(self, nvars: int, weights: Sequence[int], terms: Dict[tuple, ExactScalar]):
        weights = tuple(int(w) for w in weights)
        if len(weights) != nvars or any(w <= 0 for w in weights):
            raise ValueError("need one positive weight per variable")
        clean = {}
        for exp, coeff in terms.items():
            coeff = _coerce_scalar(coeff)
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp}")
            if not coeff.is_zero():
                clean[exp] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def binomial(nvars, weights, alpha, beta) -> "MultiPoly":
        """x^alpha - x^beta."""
        terms = {tuple(alpha): ONE}
        beta = tuple(beta)
        terms[beta] = terms.get(beta, ZERO) - ONE
        return MultiPoly(nvars, weights, terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc[exp] = acc.get(exp, ZERO) + coeff
        return MultiPoly(self.nvars, self.weights, acc)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc[exp] = acc.get(exp, ZERO) - coeff
        return MultiPoly(self.nvars, self.weights, acc)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, self.weights, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> "MultiPoly":
        c = _coerce_scalar(c)
        return MultiPoly(self.nvars, self.weights, {e: coeff * c for e, coeff in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree_of(self, exponent) -> int:
        return sum(e * w for e, w in zip(exponent, self.weights))

    def weighted_degree(self) -> Optional[int]:
        """Common weighted degree of all terms, or None if mixed."""
        degrees = {self.weighted_degree_of(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_weighted_homogeneous(self) -> bool:
        return self.is_zero() or self.weighted_degree() is not None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_exponent(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def substitute(self, generators: Sequence[BivariatePoly]) -> BivariatePoly:
        """Evaluate at x_i = generators[i]; exact."""
        if len(generators) != self.nvars:
            raise ValueError("generator count must match variable count")
        pow_cache = [{0: BivariatePoly.constant(1)} for _ in generators]

        def power(i, n):
            cache = pow_cache[i]
            if n not in cache:
                cache[n] = power(i, n - 1) * generators[i]
            return cache[n]

        acc = BivariatePoly.zero()
        for exp, coeff in self.terms.items():
            term = BivariatePoly.constant(coeff)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def __str__(self):
        from .textform import format_multi

        return format_multi(self)

    def __repr__(self):
        return f"MultiPoly({self})"
