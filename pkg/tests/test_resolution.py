"""Tests for Laufer's algorithm, rationality, multiplicity and the
closed-form tables."""

import pytest

from singmap.linkdata import (
    Family,
    FamilyTag,
    LensData,
    LinkError,
    PlumbingGraph,
    SeifertData,
    seifert_to_plumbing,
)
from singmap.resolution import (
    closed_form_multiplicity,
    fundamental_cycle,
    multiplicity_and_embdim,
    rationality_and_genus,
)
from singmap.suites import family_sweep


def star(b, fibers):
    return seifert_to_plumbing(SeifertData.normalized(b, fibers))


class TestFundamentalCycle:
    def test_a2_chain(self):
        graph = PlumbingGraph.build([-2, -2], [(0, 1)])
        assert fundamental_cycle(graph).multiplicities == (1, 1)

    def test_single_minus_three(self):
        graph = PlumbingGraph.build([-3], [])
        assert fundamental_cycle(graph).multiplicities == (1,)

    def test_e8_cycle(self):
        graph = star(2, [(2, 1), (3, 2), (5, 4)])
        cycle = fundamental_cycle(graph)
        assert max(cycle.multiplicities) == 6
        assert cycle.self_intersection(graph) == -2
        # the classical E8 highest-root multiplicities as a multiset
        assert sorted(cycle.multiplicities) == [2, 2, 3, 3, 4, 4, 5, 6]

    def test_rejects_non_negative_definite(self):
        graph = PlumbingGraph.build([0], [])
        with pytest.raises(LinkError):
            fundamental_cycle(graph)

    def test_everywhere_at_least_one(self):
        for link, _, _ in family_sweep(4, 5):
            graph = seifert_to_plumbing(link)
            cycle = fundamental_cycle(graph)
            assert all(z >= 1 for z in cycle.multiplicities)

    def test_tie_break_independence(self):
        for link, _, _ in family_sweep(5, 7):
            graph = seifert_to_plumbing(link)
            low = fundamental_cycle(graph, tie_break="lowest")
            high = fundamental_cycle(graph, tie_break="highest")
            assert low == high, link


class TestRationality:
    def test_an_chain(self):
        for n in range(1, 8):
            graph = PlumbingGraph.build([-2] * n, [(i, i + 1) for i in range(n - 1)])
            cycle = fundamental_cycle(graph)
            p_a, rational = rationality_and_genus(graph, cycle)
            assert p_a == 0 and rational

    def test_e8(self):
        graph = star(2, [(2, 1), (3, 2), (5, 4)])
        p_a, rational = rationality_and_genus(graph, fundamental_cycle(graph))
        assert p_a == 0 and rational

    def test_single_minus_three(self):
        graph = PlumbingGraph.build([-3], [])
        p_a, rational = rationality_and_genus(graph, fundamental_cycle(graph))
        assert p_a == 0 and rational


class TestMultiplicityReport:
    def test_lens_5_2(self):
        report = multiplicity_and_embdim(seifert_to_plumbing(LensData(5, 2)))
        assert report.multiplicity == 3
        assert report.embedding_dimension == 4
        assert report.rational

    def test_e8_is_hypersurface(self):
        report = multiplicity_and_embdim(star(2, [(2, 1), (3, 2), (5, 4)]))
        assert report.multiplicity == 2
        assert report.embedding_dimension == 3

    def test_smooth_point(self):
        report = multiplicity_and_embdim(seifert_to_plumbing(LensData(1, 0)))
        assert report.multiplicity == 1
        assert report.embedding_dimension == 2

    def test_serialization_keys(self):
        report = multiplicity_and_embdim(seifert_to_plumbing(LensData(3, 2)))
        data = report.to_dict()
        assert set(data) == {
            "rational",
            "multiplicity",
            "embedding_dimension",
            "fundamental_cycle",
            "arithmetic_genus",
        }


class TestClosedForms:
    def test_tetrahedral_e6(self):
        family = Family(FamilyTag.TETRAHEDRAL, (2, 2))
        assert closed_form_multiplicity(family, 2) == 2

    def test_icosahedral_b3(self):
        family = Family(FamilyTag.ICOSAHEDRAL, (1, 1))
        assert closed_form_multiplicity(family, 3) == 7

    def test_dihedral_b3(self):
        family = Family(FamilyTag.DIHEDRAL, (2, 1))
        assert closed_form_multiplicity(family, 3) == 3

    def test_dihedral_b2_leading_twos(self):
        # (5, 3) expands to [2, 3]: one leading 2
        family = Family(FamilyTag.DIHEDRAL, (5, 3))
        assert closed_form_multiplicity(family, 2) == 3

    def test_lens_rows(self):
        assert closed_form_multiplicity(Family(FamilyTag.LENS, (5, 2))) == 3
        assert closed_form_multiplicity(Family(FamilyTag.LENS, (1, 0))) == 1
        assert closed_form_multiplicity(Family(FamilyTag.LENS, (7, 1))) == 7

    def test_rejects_unknown_parameters(self):
        with pytest.raises(ValueError):
            closed_form_multiplicity(Family(FamilyTag.OCTAHEDRAL, (2, 2)), 2)
        with pytest.raises(ValueError):
            closed_form_multiplicity(Family(FamilyTag.TETRAHEDRAL, (1, 1)), None)

    def test_matches_laufer_on_sweep(self):
        for link, family, b in family_sweep(4, 6):
            graph = seifert_to_plumbing(link)
            report = multiplicity_and_embdim(graph)
            assert report.rational
            assert report.multiplicity == max(
                1, closed_form_multiplicity(family, b)
            ), (link, family)
