"""Fundamental groups of the finite-pi1 links and their matrix generators.

Each three-fiber family determines the group through a single integer m
computed from b and the fiber parameters; m then splits into a cyclic
factor times a binary polyhedral group (or one of the U(2) groups D', T'
when the relevant prime power divides m).  Exact 2x2 generator matrices
over Q[i, sqrt2, sqrt5] are available for the binary polyhedral groups and
for the cyclic actions whose root of unity lies in the ring; everything
else carries order annotations only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .exactmath import ExactMatrix, ExactScalar, HALF, I, ONE, SQRT2, SQRT5
from .linkdata import Family, FamilyTag


class GroupError(ValueError):
    pass


class UnsupportedFamilyError(GroupError):
    """Raised for D' and T': no matrix representation is provided."""


class GroupFamily(enum.Enum):
    CYCLIC = "cyclic"
    BINARY_DIHEDRAL = "D*"
    BINARY_TETRAHEDRAL = "T*"
    BINARY_OCTAHEDRAL = "O*"
    BINARY_ICOSAHEDRAL = "I*"
    D_PRIME = "D'"
    T_PRIME = "T'"


@dataclass(frozen=True)
class GroupDescriptor:
    """Classified fundamental group: cyclic factor times a fixed group.

    params: (p, q) for CYCLIC; (p,) for BINARY_DIHEDRAL meaning D*_{4p};
    (k, p) for D_PRIME meaning D'_{2^{k+2} p}; (k,) for T_PRIME meaning
    T'_{8 * 3^k}; () for T*/O*/I*.  cyclic_factor m = 1 means no factor.
    order is the order of the whole group m * |G|.  extras surfaces the
    intermediate numbers of the m case analysis for auditability.
    """

    family: GroupFamily
    params: Tuple[int, ...]
    cyclic_factor: int
    order: int
    extras: Tuple[Tuple[str, int], ...] = field(default=())

    def binary_order(self) -> int:
        if self.family is GroupFamily.CYCLIC:
            return self.order
        return self.order // self.cyclic_factor

    def label(self) -> str:
        base = {
            GroupFamily.CYCLIC: lambda: f"Z/{self.params[0]}",
            GroupFamily.BINARY_DIHEDRAL: lambda: f"D*_{4 * self.params[0]}",
            GroupFamily.BINARY_TETRAHEDRAL: lambda: "T*",
            GroupFamily.BINARY_OCTAHEDRAL: lambda: "O*",
            GroupFamily.BINARY_ICOSAHEDRAL: lambda: "I*",
            GroupFamily.D_PRIME: lambda: f"D'_{(2 ** (self.params[0] + 2)) * self.params[1]}",
            GroupFamily.T_PRIME: lambda: f"T'_{8 * 3 ** self.params[0]}",
        }[self.family]()
        if self.family is not GroupFamily.CYCLIC and self.cyclic_factor > 1:
            return f"Z/{self.cyclic_factor} x {base}"
        return base

    def to_dict(self) -> dict:
        out = {
            "family": self.family.value,
            "m": self.cyclic_factor,
            "order": self.order,
            "label": self.label(),
        }
        if self.family is GroupFamily.CYCLIC:
            out["p"], out["q"] = self.params
        elif self.family is GroupFamily.BINARY_DIHEDRAL:
            out["binary_order"] = 4 * self.params[0]
        elif self.family is GroupFamily.D_PRIME:
            out["binary_order"] = (2 ** (self.params[0] + 2)) * self.params[1]
        elif self.family is GroupFamily.T_PRIME:
            out["binary_order"] = 8 * 3 ** self.params[0]
        else:
            out["binary_order"] = self.binary_order()
        for key, value in self.extras:
            out[key] = value
        return out


def _two_adic(n: int) -> Tuple[int, int]:
    """(v, odd) with n = 2^v * odd."""
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v, n


def _three_adic(n: int) -> Tuple[int, int]:
    v = 0
    while n % 3 == 0:
        n //= 3
        v += 1
    return v, n


def group_from_seifert(family: Family, b: int = None) -> GroupDescriptor:
    """Group of the link from its recognized family and central weight b.

    Dihedral m = (b-1)p - q, tetrahedral m = 6b - 3 - 2 q1 - 2 q2,
    octahedral m = 12b - 6 - 4 q1 - 3 q2, icosahedral
    m = 30b - 15 - 10 q1 - 6 q2.  Odd m (dihedral) and m coprime to 3
    (tetrahedral) give the plain product with the binary group; otherwise
    the 2- resp. 3-power moves into D' resp. T'.
    """
    if not family.is_finite:
        raise GroupError("fundamental group is not finite")
    if family.tag is FamilyTag.LENS:
        p, q = family.params
        return GroupDescriptor(GroupFamily.CYCLIC, (p, q), 1, p)
    if b is None:
        raise GroupError("b is required for the three-fiber families")
    if family.tag is FamilyTag.DIHEDRAL:
        p, q = family.params
        m = (b - 1) * p - q
        if m <= 0:
            raise GroupError(f"m = {m} is not positive; data is not a singularity link")
        if m % 2 == 1:
            return GroupDescriptor(
                GroupFamily.BINARY_DIHEDRAL, (p,), m, m * 4 * p, (("m_raw", m),)
            )
        v, m_odd = _two_adic(m)
        k = v - 1  # m = 2 m', m' = 2^k m'' with m'' odd
        extras = [("m_raw", m), ("two_power_k", k), ("m_odd", m_odd)]
        if k == 0:
            # D'_{4p} is abstractly the binary dihedral group D*_{4p}, but
            # its action on C^2 is a different U(2) embedding, so it stays
            # in the D' family (no matrices, no map synthesis).
            extras.append(("isomorphic_to_binary_dihedral_order", 4 * p))
        return GroupDescriptor(
            GroupFamily.D_PRIME,
            (k, p),
            m_odd,
            m_odd * (2 ** (k + 2)) * p,
            tuple(extras),
        )
    if family.tag is FamilyTag.TETRAHEDRAL:
        q1, q2 = family.params
        m = 6 * b - 3 - 2 * q1 - 2 * q2
        if m <= 0:
            raise GroupError(f"m = {m} is not positive; data is not a singularity link")
        k, m_rest = _three_adic(m)
        if k == 0:
            return GroupDescriptor(
                GroupFamily.BINARY_TETRAHEDRAL, (), m, m * 24, (("m_raw", m),)
            )
        return GroupDescriptor(
            GroupFamily.T_PRIME,
            (k,),
            m_rest,
            m_rest * 8 * 3 ** k,
            (("m_raw", m), ("three_power_k", k)),
        )
    if family.tag is FamilyTag.OCTAHEDRAL:
        q1, q2 = family.params
        m = 12 * b - 6 - 4 * q1 - 3 * q2
        if m <= 0:
            raise GroupError(f"m = {m} is not positive; data is not a singularity link")
        return GroupDescriptor(GroupFamily.BINARY_OCTAHEDRAL, (), m, m * 48)
    if family.tag is FamilyTag.ICOSAHEDRAL:
        q1, q2 = family.params
        m = 30 * b - 15 - 10 * q1 - 6 * q2
        if m <= 0:
            raise GroupError(f"m = {m} is not positive; data is not a singularity link")
        return GroupDescriptor(GroupFamily.BINARY_ICOSAHEDRAL, (), m, m * 120)
    raise GroupError(f"unhandled family {family.tag}")


# -- exact generator matrices ---------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """2x2 generators; matrices is None when only order annotations exist."""

    matrices: Optional[Tuple[ExactMatrix, ...]]
    descriptions: Tuple[str, ...]
    exact: bool

    def __iter__(self):
        if self.matrices is None:
            raise GroupError("generator set carries order annotations only")
        return iter(self.matrices)


def root_of_unity(n: int) -> Optional[ExactScalar]:
    """Exact primitive n-th root of unity, for n dividing 8; None otherwise.

    The only roots of unity inside Q(i, sqrt2, sqrt5) are the eighth roots:
    zeta_3 would need sqrt(3), which the ring does not contain.
    """
    if n == 1:
        return ONE
    if n == 2:
        return -ONE
    if n == 4:
        return I
    if n == 8:
        return HALF * SQRT2 * (ONE + I)
    return None


def _diag(a: ExactScalar, d: ExactScalar) -> ExactMatrix:
    zero = ExactScalar.rational(0)
    return ExactMatrix(((a, zero), (zero, d)))


_J = ExactMatrix(((ExactScalar.rational(0), ONE), (-ONE, ExactScalar.rational(0))))

# omega = (1 + i + j + k)/2 as a unit quaternion; shared by T*, O*, I*
_OMEGA = ExactMatrix(
    (
        (HALF * (ONE + I), HALF * (ONE + I)),
        (HALF * (-ONE + I), HALF * (ONE - I)),
    )
)

_T_SECOND = ExactMatrix(
    (
        (HALF * (ONE + I), HALF * (ONE - I)),
        (HALF * (-ONE - I), HALF * (ONE - I)),
    )
)

# (j + k)/sqrt2
_O_SECOND = ExactMatrix(
    (
        (ExactScalar.rational(0), HALF * SQRT2 * (ONE + I)),
        (HALF * SQRT2 * (-ONE + I), ExactScalar.rational(0)),
    )
)

# (phi + i/phi + j)/2 with phi the golden ratio: a unit icosian
_PHI_DIAG = (ONE + SQRT5) / 4 + I * ((SQRT5 - ONE) / 4)
_I_SECOND = ExactMatrix(
    (
        (_PHI_DIAG, HALF),
        (-HALF, _PHI_DIAG.conjugate()),
    )
)


def generator_matrices(descriptor: GroupDescriptor) -> GeneratorSet:
    """Exact generators when all entries lie in Q[i, sqrt2, sqrt5].

    Cyclic (p, q) uses diag(zeta_p, zeta_p^q); the binary dihedral group
    D*_{4n} uses diag(zeta_2n, zeta_2n^-1) and the antidiagonal j; T*, O*,
    I* use the fixed unit-quaternion pairs.  A cyclic product factor adds
    diag(zeta_m, zeta_m).  Whenever a needed root of unity is outside the
    ring the set degrades to order annotations (exact = False).
    """
    family = descriptor.family
    if family in (GroupFamily.D_PRIME, GroupFamily.T_PRIME):
        raise UnsupportedFamilyError(
            f"{descriptor.label()} has no matrix representation here"
        )
    matrices = []
    descriptions = []
    exact = True
    if family is GroupFamily.CYCLIC:
        p, q = descriptor.params
        descriptions.append(f"diag(zeta_{p}, zeta_{p}^{q})")
        zeta = root_of_unity(p)
        if zeta is None:
            exact = False
        else:
            matrices.append(_diag(zeta, _power(zeta, q)))
    elif family is GroupFamily.BINARY_DIHEDRAL:
        n = descriptor.params[0]
        descriptions.append(f"diag(zeta_{2 * n}, zeta_{2 * n}^-1)")
        descriptions.append("antidiag(1, -1)")
        zeta = root_of_unity(2 * n)
        if zeta is None:
            exact = False
        else:
            matrices.append(_diag(zeta, _power(zeta, 2 * n - 1)))
        matrices.append(_J)
    elif family is GroupFamily.BINARY_TETRAHEDRAL:
        matrices.extend([_OMEGA, _T_SECOND])
        descriptions.extend(["(1+i+j+k)/2", "(1+i+j-k)/2"])
    elif family is GroupFamily.BINARY_OCTAHEDRAL:
        matrices.extend([_OMEGA, _O_SECOND])
        descriptions.extend(["(1+i+j+k)/2", "(j+k)/sqrt2"])
    elif family is GroupFamily.BINARY_ICOSAHEDRAL:
        matrices.extend([_OMEGA, _I_SECOND])
        descriptions.extend(["(1+i+j+k)/2", "(phi + i/phi + j)/2"])
    else:
        raise GroupError(f"unhandled family {family}")
    m = descriptor.cyclic_factor
    if m > 1:
        descriptions.append(f"diag(zeta_{m}, zeta_{m})")
        zeta = root_of_unity(m)
        if zeta is None:
            exact = False
        else:
            matrices.append(_diag(zeta, zeta))
    if not exact:
        return GeneratorSet(None, tuple(descriptions), False)
    return GeneratorSet(tuple(matrices), tuple(descriptions), True)


def _power(scalar: ExactScalar, n: int) -> ExactScalar:
    out = ONE
    for _ in range(n):
        out = out * scalar
    return out


def matrix_determinant(m: ExactMatrix) -> ExactScalar:
    (a, b), (c, d) = m.rows
    return a * d - b * c


def has_unit_determinant(m: ExactMatrix) -> bool:
    det = matrix_determinant(m)
    return det * det.conjugate() == ONE


def group_closure_order(generators, cap: int = 500) -> int:
    """Size of the multiplicative closure of exact 2x2 matrices.

    Work-queue closure under products with everything seen so far; raises
    if the closure exceeds cap, which signals wrong generators rather than
    a big group.
    """
    if isinstance(generators, GeneratorSet):
        if not generators.exact:
            raise GroupError("closure needs exact matrices")
        generators = generators.matrices
    gens = list(generators)
    if not gens:
        return 0
    seen = {g for g in gens}
    queue = list(seen)
    while queue:
        current = queue.pop()
        for other in gens:
            for product in (current * other, other * current):
                if product not in seen:
                    seen.add(product)
                    queue.append(product)
                    if len(seen) > cap:
                        raise GroupError(
                            f"closure exceeded cap {cap}: generators look wrong"
                        )
    return len(seen)
