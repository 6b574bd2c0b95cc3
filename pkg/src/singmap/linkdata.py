"""Links of surface singularities: Seifert invariants and plumbing graphs.

Seifert data is kept in normal form {b; (p1,q1)..(pk,qk)} with gcd(p,q) = 1
and 1 <= q < p; the central plumbing weight is -b.  Lens spaces are stored
as the bare pair (p, q).  Negative continued fractions translate between
fiber pairs and bamboo weights, and the orbifold Euler characteristic and
rational Euler number decide which links have finite fundamental group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple


class LinkError(ValueError):
    """Invalid or non-normal-form link description."""


@dataclass(frozen=True)
class LensData:
    """Lens space L(p, q): cyclic quotient link; (1, 0) is the 3-sphere."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise LinkError(f"lens p must be positive, got {self.p}")
        if self.p == 1:
            if self.q != 0:
                raise LinkError("lens (1, q) requires q = 0")
        elif not (1 <= self.q < self.p):
            raise LinkError(f"lens q must satisfy 1 <= q < p, got ({self.p}, {self.q})")
        elif gcd(self.p, self.q) != 1:
            raise LinkError(f"lens pair ({self.p}, {self.q}) is not coprime")


@dataclass(frozen=True)
class SeifertData:
    """Normalized Seifert invariants over the sphere: {b; (p_i, q_i)}."""

    b: int
    fibers: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for p, q in self.fibers:
            if p < 2 or not (1 <= q < p):
                raise LinkError(f"fiber ({p}, {q}) is not in normal form")
            if gcd(p, q) != 1:
                raise LinkError(f"fiber ({p}, {q}) is not coprime")

    @staticmethod
    def normalized(b: int, fibers: Sequence[Tuple[int, int]]) -> "SeifertData":
        """Drop non-singular fibers (p = 1) and sort the rest ascending."""
        kept = []
        for p, q in fibers:
            if p < 1 or q < 0:
                raise LinkError(f"bad fiber ({p}, {q})")
            if p == 1:
                continue
            kept.append((int(p), int(q)))
        return SeifertData(int(b), tuple(sorted(kept)))


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted tree: vertex self-intersections and unordered edges."""

    weights: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.weights)
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise LinkError(f"bad edge ({i}, {j})")

    @staticmethod
    def build(weights: Sequence[int], edges: Sequence[Tuple[int, int]]) -> "PlumbingGraph":
        canon = tuple(sorted(tuple(sorted((int(i), int(j)))) for i, j in edges))
        return PlumbingGraph(tuple(int(w) for w in weights), canon)

    @property
    def size(self) -> int:
        return len(self.weights)

    def neighbors(self, i: int) -> List[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def valences(self) -> List[int]:
        val = [0] * self.size
        for a, b in self.edges:
            val[a] += 1
            val[b] += 1
        return val

    def is_connected(self) -> bool:
        if self.size == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in self.neighbors(i):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.size

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.size - 1

    def intersection_matrix(self) -> List[List[int]]:
        """Symmetric matrix: diagonal e_i, entry 1 per edge."""
        m = [[0] * self.size for _ in range(self.size)]
        for i, w in enumerate(self.weights):
            m[i][i] = w
        for a, b in self.edges:
            m[a][b] += 1
            m[b][a] += 1
        return m


# -- Hirzebruch-Jung continued fractions ------------------------------------


def hj_expand(p: int, q: int) -> List[int]:
    """Expansion p/q = a1 - 1/(a2 - 1/(... - 1/ak)) with every a_i >= 2.

    The smooth case p = 1 (with q = 0) yields the empty expansion.
    """
    if p < 1:
        raise LinkError(f"p must be positive, got {p}")
    if p == 1:
        if q != 0:
            raise LinkError("p = 1 requires q = 0")
        return []
    if not (1 <= q < p):
        raise LinkError(f"need 1 <= q < p, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise LinkError(f"({p}, {q}) is not coprime")
    out = []
    while q > 0:
        a = -(-p // q)  # ceil division
        out.append(a)
        p, q = q, a * q - p
    return out


def hj_value(cf: Sequence[int]) -> Tuple[int, int]:
    """Evaluate a negative continued fraction back to the pair (p, q)."""
    if any(a < 2 for a in cf):
        raise LinkError(f"all entries must be >= 2, got {list(cf)}")
    p, q = 1, 0
    for a in reversed(cf):
        p, q = a * p - q, p
    return p, q


# -- Seifert <-> plumbing -----------------------------------------------------


def seifert_to_plumbing(link) -> PlumbingGraph:
    """Star-shaped graph with central weight -b, or a bamboo for lens data."""
    if isinstance(link, LensData):
        chain = hj_expand(link.p, link.q)
        if not chain:
            # smooth point: the 3-sphere as a single (-1)-vertex
            return PlumbingGraph.build([-1], [])
        weights = [-a for a in chain]
        edges = [(i, i + 1) for i in range(len(chain) - 1)]
        return PlumbingGraph.build(weights, edges)
    weights = [-link.b]
    edges = []
    for p, q in link.fibers:
        chain = hj_expand(p, q)
        previous = 0
        for a in chain:
            weights.append(-a)
            edges.append((previous, len(weights) - 1))
            previous = len(weights) - 1
    return PlumbingGraph.build(weights, edges)


def negdef_check(graph: PlumbingGraph) -> bool:
    """Exact negative-definiteness of the intersection matrix.

    Sylvester on -M with fraction-free (Bareiss) elimination: all leading
    principal minors of -M must be positive.
    """
    if not graph.is_connected():
        raise LinkError("graph must be connected")
    n = graph.size
    m = graph.intersection_matrix()
    work = [[-m[i][j] for j in range(n)] for i in range(n)]
    previous_pivot = 1
    for k in range(n):
        # Bareiss pivot equals the (k+1)-st leading principal minor of -M
        if work[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // previous_pivot
        previous_pivot = work[k][k]
    return True


# -- Euler invariants and finiteness ------------------------------------------


def euler_invariants(link) -> Tuple[Fraction, Fraction]:
    """(orbifold Euler characteristic, rational Euler number).

    chi = 2 - k + sum 1/p_i and e = -b + sum q_i/p_i; lens data uses the
    convention (1, 0)(p, q), i.e. b = 0 and a single fiber.
    """
    if isinstance(link, LensData):
        chi = Fraction(2) - 1 + Fraction(1, link.p)
        e = Fraction(link.q, link.p)
        return chi, e
    chi = Fraction(2) - len(link.fibers)
    e = Fraction(-link.b)
    for p, q in link.fibers:
        chi += Fraction(1, p)
        e += Fraction(q, p)
    return chi, e


class FamilyTag(enum.Enum):
    LENS = "lens"
    DIHEDRAL = "dihedral"
    TETRAHEDRAL = "tetrahedral"
    OCTAHEDRAL = "octahedral"
    ICOSAHEDRAL = "icosahedral"
    NOT_FINITE = "not-finite"


@dataclass(frozen=True)
class Family:
    """Recognized finite-pi1 family with its fiber parameters.

    params: (p, q) for LENS and DIHEDRAL, (q1, q2) for the three polyhedral
    families, () for NOT_FINITE.
    """

    tag: FamilyTag
    params: Tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.tag is not FamilyTag.NOT_FINITE


def _chain_to_lens(chain: Sequence[int]) -> Tuple[int, int]:
    """Canonical (p, q) of a bamboo, reading from the end giving smaller q."""
    if not chain:
        return (1, 0)
    p1, q1 = hj_value(list(chain))
    p2, q2 = hj_value(list(reversed(chain)))
    assert p1 == p2
    return (p1, min(q1, q2))


def seifert_to_lens(link: SeifertData) -> LensData:
    """Collapse Seifert data with at most two singular fibers to a lens space."""
    if len(link.fibers) > 2:
        raise LinkError("only 0, 1 or 2 singular fibers give a lens space")
    if link.b < 2:
        raise LinkError(f"central weight -b with b = {link.b} is not in normal form")
    chain: List[int] = []
    if len(link.fibers) >= 1:
        chain.extend(reversed(hj_expand(*link.fibers[0])))
    chain.append(link.b)
    if len(link.fibers) == 2:
        chain.extend(hj_expand(*link.fibers[1]))
    return LensData(*_chain_to_lens(chain))


def finite_pi1_family(link) -> Family:
    """Match normalized link data against the finite-fundamental-group
    families; NOT_FINITE when chi <= 0, e = 0, or the fiber pattern fits no
    family."""
    if isinstance(link, LensData):
        return Family(FamilyTag.LENS, (link.p, link.q))
    chi, e = euler_invariants(link)
    if chi <= 0 or e == 0:
        return Family(FamilyTag.NOT_FINITE)
    fibers = tuple(sorted(link.fibers))
    if len(fibers) > 3:
        return Family(FamilyTag.NOT_FINITE)
    if len(fibers) <= 2:
        lens = seifert_to_lens(link)
        return Family(FamilyTag.LENS, (lens.p, lens.q))
    (p1, q1), (p2, q2), (p3, q3) = fibers
    if (p1, q1) != (2, 1):
        return Family(FamilyTag.NOT_FINITE)
    if p2 == 2:
        return Family(FamilyTag.DIHEDRAL, (p3, q3))
    if p2 == 3 and p3 == 3:
        return Family(FamilyTag.TETRAHEDRAL, (q2, q3))
    if p2 == 3 and p3 == 4:
        return Family(FamilyTag.OCTAHEDRAL, (q2, q3))
    if p2 == 3 and p3 == 5:
        return Family(FamilyTag.ICOSAHEDRAL, (q2, q3))
    return Family(FamilyTag.NOT_FINITE)


# -- plumbing graph -> link ----------------------------------------------------


def _walk_chain(graph: PlumbingGraph, start: int, forbidden: int) -> List[int]:
    """Vertex indices along a leg, starting at `start`, away from `forbidden`."""
    chain = [start]
    previous, current = forbidden, start
    while True:
        nxt = [j for j in graph.neighbors(current) if j != previous]
        if not nxt:
            return chain
        if len(nxt) > 1:
            raise LinkError("branching inside a leg")
        previous, current = current, nxt[0]
        chain.append(current)


def graph_to_link(graph: PlumbingGraph):
    """Recognize a normal-form bamboo or 3-legged star; reject anything else.

    Bamboos give LensData (q canonicalized to the smaller of the two
    orientations); stars give SeifertData.
    """
    if not graph.is_tree():
        raise LinkError("plumbing graph must be a connected tree")
    if graph.size == 1 and graph.weights[0] == -1:
        return LensData(1, 0)
    valences = graph.valences()
    if any(v > 3 for v in valences):
        raise LinkError("vertex of valence > 3: not a bamboo or 3-legged star")
    centers = [i for i, v in enumerate(valences) if v == 3]
    if len(centers) > 1:
        raise LinkError("more than one branching vertex")
    if not centers:
        if any(w > -2 for w in graph.weights):
            raise LinkError("bamboo weight above -2: not in normal form")
        ends = [i for i, v in enumerate(valences) if v <= 1]
        order = _walk_chain(graph, ends[0], -1) if graph.size > 1 else [0]
        chain = [-graph.weights[i] for i in order]
        return LensData(*_chain_to_lens(chain))
    center = centers[0]
    b = -graph.weights[center]
    if b < 2:
        raise LinkError(f"central weight {graph.weights[center]} is not in normal form")
    fibers = []
    for first in graph.neighbors(center):
        leg = _walk_chain(graph, first, center)
        weights = [-graph.weights[i] for i in leg]
        if any(a < 2 for a in weights):
            raise LinkError("leg weight above -2: not in normal form")
        fibers.append(hj_value(weights))
    return SeifertData.normalized(b, fibers)
