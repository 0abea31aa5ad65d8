"""Windowed checks that folding the cover's decomposition recovers the decomposition of G."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from ..errors import LiftError, WindowInsufficientError
from ..graph_core import Graph, GraphDecomposition, decompositions_isomorphic, validate_decomposition
from ..local_bottlenecks import nested_set_local
from ..local_separations import LocalSeparation, is_tight_local
from ..local_structure import cross_local
from ..decomposition import build_decomposition
from .deck import deck_orbits, fold_tree_decomposition
from .lifting import lift_local_separation
from .window import DEFAULT_WINDOW_NODES, CoverWindow, build_cover_window

logger = logging.getLogger(__name__)

ISOMORPHIC = "isomorphic"
MISMATCH = "mismatch"
INSUFFICIENT = "window-insufficient"


@dataclass
class CoverReport:
    status: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == ISOMORPHIC

    def to_json(self) -> dict:
        return {"status": self.status, "ok": self.ok, "details": self.details}


def lift_nested_set(w: CoverWindow, N) -> list[LocalSeparation]:
    """Every lift of every separation of N whose separator lies in the certified ball."""
    lifted = set()
    for s in N:
        for anchor in w.lifts(min(s.X), w.certified_radius):
            try:
                lifted.add(lift_local_separation(w, s, anchor).canonical())
            except LiftError as exc:
                logger.debug("skipping lift of %s at %s: %s", s, anchor, exc)
    return sorted(lifted, key=LocalSeparation.sort_key)


def _label_key(s):
    return s.canonical().sort_key()


def verify_main_iii(
    g: Graph, r: int, kmax: int, R: int, window_cap: int = DEFAULT_WINDOW_NODES
) -> CoverReport:
    """Fold the window's decomposition by deck orbits and compare with the decomposition of G."""
    nested = nested_set_local(g, r, kmax)
    d = build_decomposition(g, nested.union, r)
    w = build_cover_window(g, r, R, cap=window_cap)
    if not w.certified:
        return CoverReport(INSUFFICIENT, {"certified_radius": w.certified_radius, "requested": R})
    lifted = lift_nested_set(w, nested.union)
    t_hat = build_decomposition(w.graph, lifted, r)
    try:
        folded = fold_tree_decomposition(w, t_hat, deck_orbits(w))
    except WindowInsufficientError as exc:
        return CoverReport(INSUFFICIENT, {"reason": str(exc)})
    details = {
        "window_nodes": len(w.graph),
        "lifted": len(lifted),
        "folded_nodes": len(folded.parts),
        "folded_edges": len(folded.edges),
        "nodes": len(d.parts),
        "edges": len(d.edges),
    }
    if decompositions_isomorphic(folded, d, label_key=_label_key):
        return CoverReport(ISOMORPHIC, details)
    details["folded"] = _dump(folded)
    details["expected"] = _dump(d)
    return CoverReport(MISMATCH, details)


def verify_main_ii(
    g: Graph, r: int, kmax: int, R: int, window_cap: int = DEFAULT_WINDOW_NODES
) -> CoverReport:
    """The lifted nested set is nested and tight, and its cutouts decompose the window as a tree."""
    nested = nested_set_local(g, r, kmax)
    w = build_cover_window(g, r, R, cap=window_cap)
    if not w.certified:
        return CoverReport(INSUFFICIENT, {"certified_radius": w.certified_radius, "requested": R})
    lifted = lift_nested_set(w, nested.union)
    crossing = [(str(s), str(t)) for s, t in combinations(lifted, 2) if cross_local(w.graph, r, s, t)]
    loose = [str(s) for s in lifted if not is_tight_local(w.graph, r, s)]
    t_hat = build_decomposition(w.graph, lifted, r)
    report = validate_decomposition(w.graph, t_hat, require_tree=True)
    details = {"lifted": len(lifted), "crossing": crossing, "not_tight": loose, "tree": report.to_json()}
    ok = not crossing and not loose and report.ok
    return CoverReport(ISOMORPHIC if ok else MISMATCH, details)


def _dump(d: GraphDecomposition) -> dict:
    return {
        "nodes": {node: part.to_json() for node, part in sorted(d.parts.items())},
        "edges": [[e.u, e.v, str(e.label)] for e in d.edges],
    }


def check_clique_lifts(w: CoverWindow) -> CoverReport:
    """Cliques of the certified ball project bijectively onto cliques of G, and every maximal clique of G lifts."""
    g = w.g
    radius = w.certified_radius
    bad, images = [], set()
    for clique in nx.find_cliques(w.graph.nx_graph):
        if any(w.depth[n] > radius for n in clique):
            continue
        image = frozenset(w.projection[n] for n in clique)
        if len(image) != len(clique) or any(not g.has_edge(u, v) for u, v in combinations(sorted(image), 2)):
            bad.append(sorted(clique))
            continue
        images.add(image)
    unlifted = [sorted(c) for c in nx.find_cliques(g.nx_graph) if not any(frozenset(c) <= i for i in images)]
    details = {"not_injective": bad, "unlifted": sorted(unlifted)}
    if not w.certified:
        return CoverReport(INSUFFICIENT, details)
    return CoverReport(ISOMORPHIC if not bad and not unlifted else MISMATCH, details)
