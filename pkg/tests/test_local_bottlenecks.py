import logging
import math
from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlocal.errors import ContractViolation
from rlocal.global_oracle import gfp, satisfies_rule
from rlocal.local_bottlenecks import (
    displacement_lower_bound,
    enumerate_relevant_local_tstars,
    f,
    gfp_bottleneck,
    guarantee_bound,
    local_bottleneck_check,
    local_tstar,
    minimal_bottlenecks,
    nested_set_local,
    partner_pairs_local,
    relevant_local_tstar_check,
    within_guarantee,
)
from rlocal.local_separations import LocalSeparation, enumerate_tight_local_separations, local_separations_at

from .conftest import PROPERTY_SETTINGS, connected_graphs


@pytest.fixture
def p3_separation():
    return LocalSeparation.of([("a", "b")], ["b"], [("b", "c")])


@pytest.fixture
def hexagon_tstar(c6):
    s = local_separations_at(c6, 6, {"0", "3"})[0]
    second = LocalSeparation.of([], ["3", "4"], [("2", "3"), ("4", "5")])
    third = LocalSeparation.of([("4", "5"), ("0", "5")], ["0", "4"], [("0", "1"), ("3", "4")])
    return s, local_tstar(c6, 6, (s, second, third))


class TestGuarantee:
    def test_f(self):
        assert [f(k) for k in range(1, 5)] == [0, 0, 4, 6]

    def test_bound(self):
        assert guarantee_bound(6, 3) == 3
        assert guarantee_bound(math.inf, 3) == math.inf
        assert guarantee_bound(6, 0) == 2

    def test_within(self):
        assert within_guarantee(1, 6, 3)
        assert within_guarantee(3, 6, 3) is False
        assert within_guarantee(5, math.inf, 3)
        assert within_guarantee(1, 5, 0)
        assert within_guarantee(2, 5, 0) is False
        assert within_guarantee(2, math.inf, 0) is False

    def test_displacement_lower_bound(self, c6, ring6, k4, p3):
        assert displacement_lower_bound(c6, 4) == 6
        assert displacement_lower_bound(ring6, 3) == 6
        assert displacement_lower_bound(k4, 3) == math.inf
        assert displacement_lower_bound(p3, 0) == math.inf


class TestLocalTStars:
    def test_structure(self, hexagon_tstar):
        _, sigma = hexagon_tstar
        assert sigma.union == {"0", "3", "4"}
        assert sigma.centre == frozenset()
        assert sigma.link(2, 3) == {"4"}
        assert sigma.based_at(2).constituents[0] == sigma.constituents[2]

    def test_relevant(self, c6, hexagon_tstar):
        s, sigma = hexagon_tstar
        assert relevant_local_tstar_check(c6, 6, sigma, s)

    def test_base_must_be_a_constituent(self, c6, hexagon_tstar):
        _, sigma = hexagon_tstar
        with pytest.raises(ContractViolation):
            relevant_local_tstar_check(c6, 6, sigma, local_separations_at(c6, 6, {"1", "4"})[0])

    def test_constituents_must_be_distinct(self, c6, hexagon_tstar):
        s, _ = hexagon_tstar
        with pytest.raises(ContractViolation):
            local_tstar(c6, 6, (s, s, s))

    def test_sides_must_cover_the_boundary(self, c6, hexagon_tstar):
        s, sigma = hexagon_tstar
        second = sigma.constituents[1]
        short = LocalSeparation.of([("4", "5")], ["0", "4"], [("0", "1"), ("3", "4"), ("0", "5")])
        with pytest.raises(ContractViolation):
            local_tstar(c6, 6, (s, second, short))

    def test_enumeration_needs_a_tight_base(self, p3, p3_separation):
        loose = LocalSeparation.of([], ["b"], [("a", "b"), ("b", "c")])
        with pytest.raises(ContractViolation):
            enumerate_relevant_local_tstars(p3, 0, 1, loose)
        with pytest.raises(ContractViolation):
            enumerate_relevant_local_tstars(p3, 0, 0, p3_separation)

    def test_enumerated_tstars_are_valid(self, c6):
        base = local_separations_at(c6, 6, {"0", "3"})[0]
        for sigma in enumerate_relevant_local_tstars(c6, 6, 3, base):
            assert local_tstar(c6, 6, sigma.constituents) == sigma
            assert sigma.constituents[0].canonical() == base


class TestBottlenecks:
    def test_single_cut_vertex(self, p3, p3_separation):
        assert local_bottleneck_check(p3, 0, [p3_separation], 1)
        assert not local_bottleneck_check(p3, 0, [], 1)
        assert not local_bottleneck_check(p3, 0, [p3_separation], 2)

    def test_gfp(self, p3, p3_separation):
        assert gfp_bottleneck(p3, 0, 1, [p3_separation]) == {p3_separation}
        assert gfp_bottleneck(p3, 0, 1, [p3_separation], forbidden=[p3_separation]) == frozenset()

    def test_minimal_bottlenecks_of_the_ring(self, ring6):
        found = minimal_bottlenecks(ring6, 3, 1)
        assert not found.partial
        assert len(found) == 6
        assert all(len(b.separations) == 1 and b.order == 1 for b in found)

    def test_branch_cap(self, ring6, caplog):
        with caplog.at_level(logging.WARNING):
            found = minimal_bottlenecks(ring6, 3, 1, cap=2)
        assert found.partial
        assert "branch cap" in caplog.text

    def test_splits_of_k23_are_not_a_bottleneck(self, k23):
        # the T-star based at the split of x has constituents at {u,x} and {w,x}, neither of them a split
        splits = {s.canonical() for s in local_separations_at(k23, 4, {"u", "w"})}
        assert len(splits) == 3
        assert local_bottleneck_check(k23, 4, splits, 2) is False
        assert gfp_bottleneck(k23, 4, 2, splits) == frozenset()
        assert len(minimal_bottlenecks(k23, 4, 2)) == 0
        assert nested_set_local(k23, 4, 2).union == []

    def test_union_of_ring_bottlenecks(self, ring6):
        found = list(minimal_bottlenecks(ring6, 3, 1))
        for b1, b2 in combinations(found, 2):
            assert local_bottleneck_check(ring6, 3, b1.separations | b2.separations, 1)


def _subsets(items):
    return chain.from_iterable(combinations(items, n) for n in range(1, len(items) + 1))


class TestBottleneckProperties:
    @given(connected_graphs(max_vertices=6), st.sampled_from([0, 3, 4]), st.integers(min_value=1, max_value=2))
    @settings(PROPERTY_SETTINGS, max_examples=30)
    def test_gfp_is_the_union_of_all_bottlenecks(self, g, r, k):
        S = list(dict.fromkeys(
            s.canonical() for s in enumerate_tight_local_separations(g, r, k) if s.order == k
        ))[:8]
        pairs = partner_pairs_local(g, r, k, S)
        union = set()
        for subset in _subsets(S):
            if satisfies_rule(frozenset(subset), pairs):
                union.update(subset)
        assert gfp(S, pairs) == union
        assert gfp_bottleneck(g, r, k, S, pairs=pairs) == union

    @given(connected_graphs(max_vertices=6), st.sampled_from([0, 3, 4]), st.integers(min_value=1, max_value=2))
    @settings(PROPERTY_SETTINGS, max_examples=30)
    def test_bottlenecks_are_closed_under_union(self, g, r, k):
        found = minimal_bottlenecks(g, r, k)
        for b in found:
            assert local_bottleneck_check(g, r, b.separations, k)
        for b1, b2 in combinations(list(found)[:6], 2):
            assert local_bottleneck_check(g, r, b1.separations | b2.separations, k)


class TestNestedSet:
    def test_ring6(self, ring6):
        nested = nested_set_local(ring6, 3, 1)
        assert not nested.beyond_guarantee
        assert [sorted(s.X) for s in nested.union] == [[f"a{i}"] for i in range(6)]
        assert nested.up_to(0) == []

    def test_beyond_guarantee_warns(self, c6, caplog):
        with caplog.at_level(logging.WARNING):
            nested = nested_set_local(c6, 4, 3)
        assert nested.beyond_guarantee
        assert "beyond" in caplog.text
        assert len(nested.levels[1]) == 6
        assert nested.levels[2] == [] and nested.levels[3] == []

    def test_known_displacement_overrides_the_bound(self, c6):
        assert not nested_set_local(c6, 4, 3, delta=math.inf).beyond_guarantee

    def test_json(self, p3, p3_separation):
        data = nested_set_local(p3, 0, 1).to_json()
        assert data == {
            "r": 0,
            "kmax": 1,
            "beyond_guarantee": False,
            "levels": {"1": [p3_separation.to_json()]},
        }
