import pytest
from hypothesis import given

from rlocal.errors import CapExceededError
from rlocal.global_oracle import Separation
from rlocal.graph_core import componental_cuts
from rlocal.local_separations import (
    LocalSeparation,
    enumerate_tight_local_separations,
    induce_local,
    is_local_separation,
    is_local_separator,
    is_rtomic,
    is_tight_local,
    is_tight_local_separator,
    local_components,
    local_separations_at,
    local_x_paths,
    r_toms,
    x_arcs,
)

from .conftest import PROPERTY_SETTINGS, connected_graphs

HEXAGON = ("0", "1", "2", "3", "4", "5")


class TestLocalComponents:
    def test_cut_vertex_without_cycles(self, p3):
        components = local_components(p3, 0, {"b"})
        assert components.classes == (frozenset({("a", "b")}), frozenset({("b", "c")}))
        assert components.tight == (True, True)

    def test_long_cycle_is_invisible(self, c6):
        assert len(local_components(c6, 4, {"0"})) == 2
        assert len(local_components(c6, 6, {"0"})) == 1

    def test_triangles_join_everything_in_k4(self, k4):
        assert len(local_components(k4, 3, {"u", "v"})) == 1

    def test_ring_adhesion(self, ring6):
        components = local_components(ring6, 3, {"a0"})
        assert len(components) == 2
        assert all(len(cls) == 3 for cls in components.classes)

    def test_separator_predicates(self, c6):
        assert is_local_separator(c6, 4, {"0"})
        assert is_tight_local_separator(c6, 4, {"0"})
        assert not is_local_separator(c6, 6, {"0"})


class TestRToms:
    def test_x_arcs(self):
        assert x_arcs(HEXAGON, {"0", "3"}) == [("0", "1", "2", "3"), ("3", "4", "5", "0")]
        assert x_arcs(HEXAGON, {"0"}) == []

    def test_local_x_paths(self, c6):
        assert len(local_x_paths(c6, 6, {"0", "3"})) == 4
        assert local_x_paths(c6, 4, {"0", "3"}) == []
        assert local_x_paths(c6, 4, {"0", "1"}) == [("0", "1"), ("1", "0")]

    def test_atoms(self, c6):
        assert r_toms(c6, 4, {"0", "3"}).atoms == (frozenset({"0"}), frozenset({"3"}))
        assert is_rtomic(c6, 6, {"0", "3"})
        assert is_rtomic(c6, 4, {"0", "1"})


class TestLocalSeparations:
    def test_p3(self, p3):
        assert enumerate_tight_local_separations(p3, 0, 1) == [
            LocalSeparation.of([("a", "b")], ["b"], [("b", "c")])
        ]

    def test_c6_below_and_above_its_length(self, c6):
        assert len(enumerate_tight_local_separations(c6, 4, 1)) == 6
        assert enumerate_tight_local_separations(c6, 6, 1) == []
        assert len(enumerate_tight_local_separations(c6, 6, 2)) == 9

    def test_k4_has_none(self, k4):
        assert enumerate_tight_local_separations(k4, 3, 2) == []

    def test_ring6(self, ring6):
        found = enumerate_tight_local_separations(ring6, 3, 1)
        assert [sorted(s.X) for s in found] == [[f"a{i}"] for i in range(6)]

    def test_canonical_orientation_holds_smallest_edge(self, c6):
        for s in local_separations_at(c6, 6, {"0", "2"}):
            assert min(s.boundary) in s.E1
            assert s.inverse().canonical() == s

    def test_split_class_is_rejected(self, c6):
        s = LocalSeparation.of([("0", "1"), ("2", "3")], ["0", "2"], [("1", "2"), ("0", "5")])
        assert not is_local_separation(c6, 6, s)
        assert is_local_separation(c6, 4, s)

    def test_induced_from_global(self, c6):
        s = induce_local(c6, Separation.of({"0", "1", "2"}, {"2", "3", "4", "5", "0"}))
        assert s == LocalSeparation.of([("0", "1"), ("1", "2")], ["0", "2"], [("2", "3"), ("0", "5")])
        assert is_tight_local(c6, 6, s)

    def test_json_form(self, p3):
        s = enumerate_tight_local_separations(p3, 0, 1)[0]
        assert s.to_json() == {"X": ["b"], "E1": [["a", "b"]], "E2": [["b", "c"]]}
        assert LocalSeparation.from_json(s.to_json()) == s

    def test_candidate_cap(self, c6):
        with pytest.raises(CapExceededError) as info:
            enumerate_tight_local_separations(c6, 4, 2, cap=3)
        assert info.value.cap_name == "candidates"


class TestLocalSeparationProperties:
    @given(connected_graphs())
    @PROPERTY_SETTINGS
    def test_local_components_refine_componental_cuts(self, g):
        X = set(g.vertices[:2])
        cuts = [cut for _, cut in componental_cuts(g, X)]
        for cls in local_components(g, 4, X).classes:
            assert any(cls <= cut for cut in cuts)

    @given(connected_graphs())
    @PROPERTY_SETTINGS
    def test_tight_local_separations_bipartition_the_boundary(self, g):
        for s in enumerate_tight_local_separations(g, 3, 2):
            assert not s.E1 & s.E2
            assert s.boundary == g.boundary(s.X)
            assert is_local_separation(g, 3, s)
            assert is_tight_local(g, 3, s)
