"""Verification suites run by ``rlocal verify``."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from networkx.algorithms.isomorphism import GraphMatcher

from ..covering import verify_main_ii, verify_main_iii
from ..decomposition import build_decomposition, canonicity_check, decompose, labels_above
from ..global_oracle import cross_global, enumerate_separations, nested_set_global, tree_decomposition
from ..graph_core import Graph, contract, decompositions_isomorphic, short_cycles_generate_cycle_space
from ..local_bottlenecks import nested_set_local
from ..local_separations import enumerate_tight_local_separations, induce_local
from ..local_structure import cross_local
from .config import RunConfig

logger = logging.getLogger(__name__)

MAX_AUTOMORPHISMS = 200


@dataclass
class SuiteResult:
    ok: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"ok": self.ok, "details": self.details}


def correspondence(g: Graph, config: RunConfig) -> SuiteResult:
    """Global objects and their r-local counterparts agree when short cycles generate the cycle space."""
    r, k = config.r, config.kmax
    if not short_cycles_generate_cycle_space(g, r):
        return SuiteResult(False, {"reason": f"cycles of length <= {r} do not generate the cycle space"})
    global_tight = enumerate_separations(g, k, cap=config.caps.candidates)
    induced = {s: induce_local(g, s).canonical() for s in global_tight}
    local_tight = set(enumerate_tight_local_separations(g, r, k, cap=config.caps.candidates))
    failures = []
    if set(induced.values()) != local_tight or len(induced) != len(local_tight):
        failures.append("tight separations")
    for s, t in combinations(global_tight, 2):
        if cross_global(s, t) != cross_local(g, r, induced[s], induced[t]):
            failures.append(f"crossing of {s} and {t}")
    N = nested_set_global(g, k, cap=config.caps.tstars).union
    N_r = nested_set_local(g, r, k, tstar_cap=config.caps.tstars).union
    if {induce_local(g, s).canonical() for s in N} != set(N_r):
        failures.append("nested sets")
    tree = tree_decomposition(g, N)
    local = build_decomposition(g, N_r, r)
    if not decompositions_isomorphic(
        tree, local,
        label_key=lambda s: induce_local(g, s).canonical().sort_key(),
        other_label_key=lambda s: s.canonical().sort_key(),
    ):
        failures.append("decompositions")
    return SuiteResult(not failures, {"failures": failures, "tight": len(local_tight), "nested": len(N_r)})


def refinement(g: Graph, config: RunConfig) -> SuiteResult:
    r, k = config.r, config.kmax
    d = decompose(g, r, k, tstar_cap=config.caps.tstars)
    failures = []
    for level in range(0, k):
        coarse = decompose(g, r, level, tstar_cap=config.caps.tstars)
        if not decompositions_isomorphic(
            contract(d, labels_above(d, level)), coarse, label_key=lambda s: s.canonical().sort_key()
        ):
            failures.append(level)
    return SuiteResult(not failures, {"failed_levels": failures})


def canonicity(g: Graph, config: RunConfig) -> SuiteResult:
    d = decompose(g, config.r, config.kmax, tstar_cap=config.caps.tstars)
    failures, checked = [], 0
    for phi in GraphMatcher(g.nx_graph, g.nx_graph).isomorphisms_iter():
        if checked >= MAX_AUTOMORPHISMS:
            break
        checked += 1
        if not canonicity_check(g, d, phi):
            failures.append(dict(sorted(phi.items())))
    return SuiteResult(not failures, {"automorphisms": checked, "failures": failures[:5]})


def main_ii(g: Graph, config: RunConfig) -> SuiteResult:
    report = verify_main_ii(g, config.r, config.kmax, config.window_radius, window_cap=config.caps.window_nodes)
    return SuiteResult(report.ok, report.to_json())


def main_iii(g: Graph, config: RunConfig) -> SuiteResult:
    report = verify_main_iii(g, config.r, config.kmax, config.window_radius, window_cap=config.caps.window_nodes)
    return SuiteResult(report.ok, report.to_json())


SUITES = {
    "correspondence": correspondence,
    "refinement": refinement,
    "canonicity": canonicity,
    "main-ii": main_ii,
    "main-iii": main_iii,
}
