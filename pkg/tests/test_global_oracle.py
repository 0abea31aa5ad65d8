import pytest
from hypothesis import given

from rlocal.errors import ContractViolation
from rlocal.global_oracle import (
    GEQ,
    INCOMPARABLE,
    LEQ,
    OPPOSITE_CORNER_PAIRS,
    Separation,
    bottleneck_check_global,
    clique_pair_bottleneck,
    compare,
    corner_tstar,
    corners_global,
    cross_global,
    enumerate_relevant_tstars,
    enumerate_separations,
    global_links,
    is_tight,
    nested_set_global,
    separation,
    splitting_stars,
    tree_decomposition,
    tstar,
)

from .conftest import PROPERTY_SETTINGS, connected_graphs


@pytest.fixture
def c6_pair(c6):
    s = separation(c6, {"0", "1", "2", "3"}, {"3", "4", "5", "0"})
    t = separation(c6, {"1", "2", "3", "4"}, {"4", "5", "0", "1"})
    return s, t


class TestSeparations:
    def test_p3(self, p3):
        assert enumerate_separations(p3, 1) == [Separation.of({"a", "b"}, {"b", "c"})]

    def test_bowtie_has_one_tight_separation(self, bowtie):
        found = enumerate_separations(bowtie, 2)
        assert len(found) == 1
        assert found[0].separator == {"v"}

    def test_c6_pairs(self, c6):
        found = enumerate_separations(c6, 2)
        assert len(found) == 9
        assert all(s.order == 2 for s in found)

    def test_not_a_separation(self, p3):
        with pytest.raises(ContractViolation):
            separation(p3, {"a"}, {"c"})

    def test_tightness(self, p3):
        assert is_tight(p3, Separation.of({"a", "b"}, {"b", "c"}))
        assert not is_tight(p3, Separation.of({"a", "b", "c"}, {"b"}))

    def test_canonical_is_an_orientation(self, c6_pair):
        s, _ = c6_pair
        assert s.inverse().canonical() == s.canonical()
        assert s.canonical() in s.orientations()


class TestOrder:
    def test_nested_pair(self, c6):
        s = separation(c6, {"0", "1", "2"}, {"2", "3", "4", "5", "0"})
        t = separation(c6, {"0", "1", "2", "3"}, {"3", "4", "5", "0"})
        assert compare(s, t) == GEQ
        assert compare(t, s) == LEQ
        assert not cross_global(s, t)

    def test_crossing_pair(self, c6_pair):
        s, t = c6_pair
        assert compare(s, t) == INCOMPARABLE
        assert cross_global(s, t)
        assert cross_global(s, t, method="links")

    def test_unknown_method(self, c6_pair):
        with pytest.raises(ValueError):
            cross_global(*c6_pair, method="magic")

    def test_links(self, c6_pair):
        links = global_links(*c6_pair)
        assert links.centre == frozenset()
        assert links.x_links == (frozenset({"3"}), frozenset({"0"}))
        assert links.y_links == (frozenset({"1"}), frozenset({"4"}))


class TestCorners:
    def test_corner(self, c6_pair):
        corners = corners_global(*c6_pair)
        assert corners[(1, 1)] == Separation.of({"1", "2", "3"}, {"0", "1", "3", "4", "5"})
        assert set(corners) == {(1, 1), (1, 2), (2, 1), (2, 2)}

    def test_corners_need_crossing(self, c6):
        s = separation(c6, {"0", "1", "2"}, {"2", "3", "4", "5", "0"})
        t = separation(c6, {"0", "1", "2", "3"}, {"3", "4", "5", "0"})
        with pytest.raises(ContractViolation):
            corners_global(s, t)

    def test_corner_tstar(self, c6, c6_pair):
        sigma = corner_tstar(c6, *c6_pair)
        assert sigma.union == {"0", "3", "4"}
        assert sigma.centre == frozenset()
        assert sigma.link(2, 3) == {"4"}

    def test_tstar_needs_distinct_constituents(self, c6, c6_pair):
        s, t = c6_pair
        with pytest.raises(ContractViolation):
            tstar(c6, (s, s, t))


class TestBottlenecks:
    def test_tstar_base_must_be_tight(self, p3):
        with pytest.raises(ContractViolation):
            enumerate_relevant_tstars(p3, 1, Separation.of({"a", "b", "c"}, {"b"}))

    def test_single_cut_vertex_is_a_bottleneck(self, p3):
        s = Separation.of({"a", "b"}, {"b", "c"})
        assert bottleneck_check_global(p3, [s], 1)
        assert not bottleneck_check_global(p3, [], 1)
        assert not bottleneck_check_global(p3, [s], 2)

    def test_clique_pair(self, bowtie):
        beta = clique_pair_bottleneck(bowtie, {"a1", "a2"}, {"b1", "b2"})
        assert beta.order == 1
        assert [s.separator for s in beta.separations] == [frozenset({"v"})]

    def test_clique_pair_needs_cliques(self, c6):
        with pytest.raises(ContractViolation):
            clique_pair_bottleneck(c6, {"0", "2"}, {"3", "4"})

    def test_nested_set_p3(self, p3):
        assert nested_set_global(p3, 1).union == [Separation.of({"a", "b"}, {"b", "c"})]


class TestTreeDecomposition:
    def test_p3(self, p3):
        s = Separation.of({"a", "b"}, {"b", "c"})
        d = tree_decomposition(p3, [s])
        assert d.report.ok
        assert sorted(part.key() for part in d.parts.values()) == [
            (("a", "b"), (("a", "b"),)),
            (("b", "c"), (("b", "c"),)),
        ]
        assert len(d.edges) == 1

    def test_empty_nested_set(self, k4):
        d = tree_decomposition(k4, [])
        assert len(d.parts) == 1
        assert d.report.ok

    def test_splitting_stars_of_a_single_separation(self):
        s = Separation.of({"a", "b"}, {"b", "c"})
        assert splitting_stars([s]) == [frozenset({s}), frozenset({s.inverse()})]


class TestSeparationProperties:
    @given(connected_graphs(max_vertices=7))
    @PROPERTY_SETTINGS
    def test_crossing_via_links_agrees(self, g):
        found = enumerate_separations(g, 2)
        for i, s in enumerate(found):
            for t in found[i + 1:]:
                assert cross_global(s, t) == cross_global(s, t, method="links")

    @given(connected_graphs(max_vertices=7))
    @PROPERTY_SETTINGS
    def test_opposite_corners_add_up(self, g):
        found = enumerate_separations(g, 2)
        for i, s in enumerate(found):
            for t in found[i + 1:]:
                if not cross_global(s, t):
                    continue
                corners = corners_global(s, t)
                for a, b in OPPOSITE_CORNER_PAIRS:
                    assert corners[a].order + corners[b].order == s.order + t.order
                    assert corners[a].is_separation_of(g)
