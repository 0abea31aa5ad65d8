import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from rlocal.errors import ContractViolation
from rlocal.global_oracle import Separation, tree_decomposition
from rlocal.graph_core import (
    Part,
    contract,
    decompositions_isomorphic,
    short_cycles_generate_cycle_space,
    validate_decomposition,
)
from rlocal.decomposition import (
    GlobalView,
    LocalView,
    build_decomposition,
    canonicity_check,
    cutouts,
    decompose,
    decomposition_to_dot,
    decomposition_to_json,
    dumps,
    image,
    labels_above,
    part,
    restricted_right_side,
    view_for,
)
from rlocal.local_separations import LocalSeparation

from .conftest import PROPERTY_SETTINGS, connected_graphs


def _label_key(s):
    return s.canonical().sort_key()


def _shape(d):
    return nx.Graph((e.u, e.v) for e in d.edges)


def _ring_rotation():
    phi = {}
    for i in range(6):
        for name in ("a", "p", "q"):
            phi[f"{name}{i}"] = f"{name}{(i + 1) % 6}"
    return phi


@pytest.fixture
def p3_separation():
    return LocalSeparation.of([("a", "b")], ["b"], [("b", "c")])


class TestCutouts:
    def test_views(self, p3, p3_separation):
        assert isinstance(view_for(p3, [p3_separation], 0), LocalView)
        assert isinstance(view_for(p3, [Separation.of({"a", "b"}, {"b", "c"})]), GlobalView)
        with pytest.raises(ValueError):
            view_for(p3, [p3_separation])

    def test_restricted_right_side(self, p3, p3_separation):
        assert restricted_right_side(p3, [p3_separation], p3_separation, 0) == {("b", "c")}

    def test_p3(self, p3, p3_separation):
        found = {c.members: c for c in cutouts(p3, [p3_separation], 0)}
        assert set(found) == {frozenset({p3_separation}), frozenset({p3_separation.inverse()})}
        home = found[frozenset({p3_separation})]
        assert part(p3, home, [p3_separation], 0) == Part.induced(p3, {"b", "c"})

    def test_ring_cutouts_are_the_copies(self, ring6):
        N = decompose(ring6, 3, 1).labels
        found = cutouts(ring6, N, 3)
        assert len(found) == 6
        assert all(len(c.members) == 2 for c in found)


class TestBuildDecomposition:
    def test_p3_is_an_edge(self, p3, p3_separation):
        d = build_decomposition(p3, [p3_separation], 0)
        assert d.report.ok
        assert sorted(p.key() for p in d.parts.values()) == [
            (("a", "b"), (("a", "b"),)),
            (("b", "c"), (("b", "c"),)),
        ]
        assert len(d.edges) == 1

    def test_empty_nested_set(self, k4):
        d = build_decomposition(k4, [], 3)
        assert list(d.parts.values()) == [Part.induced(k4, k4.vertices)]
        assert d.edges == []

    def test_oracle_mode_matches_tree_decomposition(self, p3):
        s = Separation.of({"a", "b"}, {"b", "c"})
        assert decompositions_isomorphic(
            tree_decomposition(p3, [s]), build_decomposition(p3, [s]), label_key=_label_key
        )


class TestDecompose:
    def test_ring6(self, ring6):
        d = decompose(ring6, 3, 1)
        assert d.report.ok
        assert nx.is_isomorphic(_shape(d), nx.cycle_graph(6))
        for p in d.parts.values():
            assert len(p.vertices) == 4 and len(p.edges) == 6
        assert sorted(sorted(s.X) for s in d.labels) == [[f"a{i}"] for i in range(6)]

    def test_hexagon_gives_its_line_graph(self, c6):
        d = decompose(c6, 4, 1)
        assert d.report.ok
        assert nx.is_isomorphic(_shape(d), nx.cycle_graph(6))
        assert sorted(p.key() for p in d.parts.values()) == sorted(
            Part.induced(c6, e).key() for e in c6.edges
        )

    def test_k4_is_one_node(self, k4):
        d = decompose(k4, 3, 2)
        assert len(d.parts) == 1
        assert d.edges == []

    def test_meta(self, p3):
        d = decompose(p3, 0, 1)
        assert d.meta == {"r": 0, "k": 1, "beyond_guarantee": False, "levels": {1: 1}}

    def test_refinement_to_level_zero(self, ring6):
        d = decompose(ring6, 3, 1)
        coarse = contract(d, labels_above(d, 0))
        assert decompositions_isomorphic(coarse, decompose(ring6, 3, 0), label_key=_label_key)


class TestDecomposeProperties:
    @given(connected_graphs(max_vertices=7), st.sampled_from([0, 3, 4]), st.integers(min_value=1, max_value=2))
    @settings(PROPERTY_SETTINGS, max_examples=25)
    def test_decomposition_is_valid(self, g, r, k):
        d = decompose(g, r, k)
        assert d.report.ok, d.report.message
        if short_cycles_generate_cycle_space(g, r):
            assert validate_decomposition(g, d, require_tree=True).ok


class TestCanonicity:
    def test_every_automorphism_of_the_ring(self, ring6):
        d = decompose(ring6, 3, 1)
        checked = 0
        for phi in GraphMatcher(ring6.nx_graph, ring6.nx_graph).isomorphisms_iter():
            assert canonicity_check(ring6, d, phi)
            checked += 1
        assert checked == 12 * 2 ** 6

    def test_rotation_of_the_ring(self, ring6):
        d = decompose(ring6, 3, 1)
        assert canonicity_check(ring6, d, _ring_rotation())

    def test_swap_inside_a_copy(self, ring6):
        d = decompose(ring6, 3, 1)
        phi = {v: v for v in ring6.vertices}
        phi.update({"p0": "q0", "q0": "p0"})
        assert canonicity_check(ring6, d, phi)

    def test_not_an_automorphism(self, ring6):
        d = decompose(ring6, 3, 1)
        phi = {v: v for v in ring6.vertices}
        phi.update({"a0": "p0", "p0": "a0"})
        with pytest.raises(ContractViolation):
            canonicity_check(ring6, d, phi)

    def test_image(self, p3_separation):
        phi = {"a": "c", "b": "b", "c": "a"}
        assert image(p3_separation, phi) == p3_separation.inverse()
        assert image(Separation.of({"a", "b"}, {"b", "c"}), phi) == Separation.of({"b", "c"}, {"a", "b"})
        with pytest.raises(TypeError):
            image("b", phi)


class TestExport:
    def test_json(self, p3):
        data = decomposition_to_json(decompose(p3, 0, 1))
        assert len(data["nodes"]) == 2
        assert data["edges"][0]["separation"] == {"X": ["b"], "E1": [["a", "b"]], "E2": [["b", "c"]]}
        assert data["validation"]["ok"]

    def test_dumps_is_deterministic(self, ring6):
        assert dumps(decompose(ring6, 3, 1)) == dumps(decompose(ring6, 3, 1))

    def test_dot(self, ring6):
        text = decomposition_to_dot(decompose(ring6, 3, 1))
        assert text.startswith("graph H {")
        assert text.count(" -- ") == 6
        assert text.rstrip().endswith("}")
