"""Tests for Seifert data, plumbing graphs, continued fractions and the
finiteness criterion."""

from fractions import Fraction
from math import gcd

import pytest

from singmap.linkdata import (
    Family,
    FamilyTag,
    LensData,
    LinkError,
    PlumbingGraph,
    SeifertData,
    euler_invariants,
    finite_pi1_family,
    graph_to_link,
    hj_expand,
    hj_value,
    negdef_check,
    seifert_to_lens,
    seifert_to_plumbing,
)


class TestHirzebruchJung:
    def test_examples(self):
        assert hj_expand(5, 2) == [3, 2]
        assert hj_expand(7, 1) == [7]
        assert hj_expand(1, 0) == []

    @pytest.mark.parametrize("n", range(1, 9))
    def test_chain_of_twos(self, n):
        assert hj_expand(n + 1, n) == [2] * n

    def test_values(self):
        assert hj_value([3, 2]) == (5, 2)
        assert hj_value([2]) == (2, 1)
        assert hj_value([2, 2, 2]) == (4, 3)

    def test_round_trip_small(self):
        for p in range(2, 40):
            for q in range(1, p):
                if gcd(p, q) == 1:
                    assert hj_value(hj_expand(p, q)) == (p, q)

    def test_rejects_non_coprime(self):
        with pytest.raises(LinkError):
            hj_expand(6, 2)
        with pytest.raises(LinkError):
            hj_expand(1, 1)

    def test_rejects_entries_below_two(self):
        with pytest.raises(LinkError):
            hj_value([2, 1, 2])


class TestSeifertToPlumbing:
    def test_d4_star(self):
        link = SeifertData.normalized(2, [(2, 1), (2, 1), (2, 1)])
        graph = seifert_to_plumbing(link)
        assert graph.weights == (-2, -2, -2, -2)
        assert sorted(graph.valences()) == [1, 1, 1, 3]

    def test_lens_bamboo(self):
        graph = seifert_to_plumbing(LensData(5, 2))
        assert graph.weights == (-3, -2)
        assert graph.edges == ((0, 1),)

    def test_e8_graph(self):
        link = SeifertData.normalized(2, [(2, 1), (3, 2), (5, 4)])
        graph = seifert_to_plumbing(link)
        assert graph.weights == (-2,) * 8
        assert graph.is_tree()
        assert graph.valences().count(3) == 1  # one central vertex, legs 1/2/4

    def test_smooth_point(self):
        graph = seifert_to_plumbing(LensData(1, 0))
        assert graph.weights == (-1,)
        assert graph.edges == ()

    def test_fibers_with_p1_dropped(self):
        link = SeifertData.normalized(3, [(1, 0), (2, 1), (1, 0)])
        assert link.fibers == ((2, 1),)

    def test_normal_form_enforced(self):
        with pytest.raises(LinkError):
            SeifertData.normalized(2, [(4, 2)])
        with pytest.raises(LinkError):
            SeifertData.normalized(2, [(3, 3)])

    def test_output_always_normal_form(self):
        for b in range(2, 6):
            for p, q in [(2, 1), (5, 2), (7, 6), (5, 3)]:
                graph = seifert_to_plumbing(
                    SeifertData.normalized(b, [(2, 1), (2, 1), (p, q)])
                )
                assert all(w <= -2 for w in graph.weights)


class TestNegativeDefinite:
    def test_e8_is_negative_definite(self):
        link = SeifertData.normalized(2, [(2, 1), (3, 2), (5, 4)])
        assert negdef_check(seifert_to_plumbing(link))

    def test_zero_vertex(self):
        assert not negdef_check(PlumbingGraph.build([0], []))

    def test_b1_star_fails(self):
        # e(L) = -1 + 3/2 > 0
        link = SeifertData.normalized(1, [(2, 1), (2, 1), (2, 1)])
        graph = seifert_to_plumbing(link)
        assert not negdef_check(graph)
        _, e = euler_invariants(link)
        assert e > 0

    def test_matches_euler_sign_exhaustively(self):
        # all three-fiber stars with b <= 5, p_i <= 7, singular or not
        pairs = [
            (p, q) for p in range(2, 8) for q in range(1, p) if gcd(p, q) == 1
        ]
        checked = 0
        for b in range(2, 6):
            for f1 in [(2, 1)]:
                for f2 in pairs:
                    for f3 in pairs:
                        link = SeifertData.normalized(b, [f1, f2, f3])
                        _, e = euler_invariants(link)
                        graph = seifert_to_plumbing(link)
                        assert negdef_check(graph) == (e < 0), link
                        checked += 1
        assert checked == 4 * len(pairs) ** 2


class TestEulerInvariants:
    def test_icosahedral_values(self):
        link = SeifertData.normalized(2, [(2, 1), (3, 1), (5, 1)])
        chi, e = euler_invariants(link)
        assert chi == Fraction(1, 30)
        assert e == Fraction(-29, 30)

    def test_no_fibers(self):
        link = SeifertData.normalized(2, [])
        assert euler_invariants(link) == (Fraction(2), Fraction(-2))

    def test_boundary_case_e_zero(self):
        link = SeifertData.normalized(1, [(2, 1), (2, 1)])
        _, e = euler_invariants(link)
        assert e == 0
        assert finite_pi1_family(link).tag is FamilyTag.NOT_FINITE


class TestFamilyRecognition:
    def test_icosahedral(self):
        link = SeifertData.normalized(2, [(2, 1), (3, 1), (5, 1)])
        assert finite_pi1_family(link) == Family(FamilyTag.ICOSAHEDRAL, (1, 1))

    def test_lens(self):
        assert finite_pi1_family(LensData(7, 3)) == Family(FamilyTag.LENS, (7, 3))

    def test_not_finite_2_3_7(self):
        link = SeifertData.normalized(2, [(2, 1), (3, 1), (7, 1)])
        chi, _ = euler_invariants(link)
        assert chi == Fraction(-1, 42)
        assert not finite_pi1_family(link).is_finite

    def test_dihedral_all_twos(self):
        link = SeifertData.normalized(3, [(2, 1), (2, 1), (2, 1)])
        assert finite_pi1_family(link) == Family(FamilyTag.DIHEDRAL, (2, 1))

    def test_two_fiber_data_reduces_to_lens(self):
        link = SeifertData.normalized(2, [(2, 1), (3, 1)])
        family = finite_pi1_family(link)
        assert family.tag is FamilyTag.LENS
        lens = seifert_to_lens(link)
        assert (lens.p, lens.q) == family.params
        # chain [2, 2, 3] evaluates to 7/5 read one way, 7/3 the other
        assert lens == LensData(7, 3)

    def test_four_fibers_not_finite(self):
        link = SeifertData.normalized(2, [(2, 1), (2, 1), (2, 1), (2, 1)])
        assert not finite_pi1_family(link).is_finite


class TestGraphInput:
    def test_bamboo_round_trip(self):
        graph = seifert_to_plumbing(LensData(7, 3))
        recovered = graph_to_link(graph)
        assert isinstance(recovered, LensData)
        assert recovered.p == 7
        assert recovered.q in (3, 5)  # 3 * 5 = 15 = 1 mod 7
        assert recovered.q == min(3, 5)

    def test_star_round_trip(self):
        link = SeifertData.normalized(3, [(2, 1), (3, 1), (5, 2)])
        recovered = graph_to_link(seifert_to_plumbing(link))
        assert recovered == link

    def test_single_minus_one_is_sphere(self):
        assert graph_to_link(PlumbingGraph.build([-1], [])) == LensData(1, 0)

    def test_reject_four_legs(self):
        graph = PlumbingGraph.build(
            [-2, -2, -2, -2, -2],
            [(0, 1), (0, 2), (0, 3), (0, 4)],
        )
        with pytest.raises(LinkError):
            graph_to_link(graph)

    def test_reject_disconnected(self):
        graph = PlumbingGraph.build([-2, -2], [])
        with pytest.raises(LinkError):
            graph_to_link(graph)

    def test_reject_weight_above_minus_two(self):
        graph = PlumbingGraph.build([-2, -1], [(0, 1)])
        with pytest.raises(LinkError):
            graph_to_link(graph)

    def test_star_round_trip_exhaustive(self):
        from singmap.suites import family_sweep

        for link, _, _ in family_sweep(5, 7):
            if isinstance(link, LensData):
                continue
            assert graph_to_link(seifert_to_plumbing(link)) == link
