"""Tree-decompositions from nested sets of separations via splitting stars."""

from __future__ import annotations

import logging

import networkx as nx

from ..graph_core import Graph
from ..graph_core.decomposition_graph import (
    DecompositionEdge,
    GraphDecomposition,
    Part,
    node_id,
    validate_decomposition,
)
from .separations import Separation, geq

logger = logging.getLogger(__name__)


def strictly_greater(s: Separation, t: Separation) -> bool:
    return s != t and geq(s, t)


def oriented(N) -> list[Separation]:
    return sorted({o for s in N for o in s.orientations()}, key=Separation.sort_key)


def splitting_stars(N) -> list[frozenset[Separation]]:
    """Classes of the relation s1 > s2* with no orientation of N strictly between."""
    orientations = oriented(N)
    classes = nx.utils.UnionFind(orientations)
    for s1 in orientations:
        for s2 in orientations:
            t = s2.inverse()
            if s1 == s2 or not strictly_greater(s1, t):
                continue
            if any(strictly_greater(s1, s) and strictly_greater(s, t) for s in orientations):
                continue
            classes.union(s1, s2)
    return sorted(
        (frozenset(c) for c in classes.to_sets()),
        key=lambda c: min(s.sort_key() for s in c),
    )


def interior(g: Graph, star) -> Part:
    vertices = frozenset(g.vertices)
    for s in star:
        vertices &= s.B
    return Part.induced(g, vertices)


def tree_decomposition(g: Graph, N) -> GraphDecomposition:
    """Candidate tree-decomposition of N with its validation report attached."""
    N = sorted({s.canonical() for s in N}, key=Separation.sort_key)
    if not N:
        d = GraphDecomposition(parts={node_id([]): Part.induced(g, g.vertices)}, edges=[], members={node_id([]): ()})
        d.report = validate_decomposition(g, d, require_tree=True)
        return d
    stars = splitting_stars(N)
    parts, members, home = {}, {}, {}
    for star in stars:
        name = node_id([str(s) for s in star])
        parts[name] = interior(g, star)
        members[name] = tuple(sorted(star, key=Separation.sort_key))
        for s in star:
            home[s] = name
    edges = [
        DecompositionEdge(f"e{i}", home[s], home[s.inverse()], s) for i, s in enumerate(N)
    ]
    d = GraphDecomposition(parts=parts, edges=edges, members=members)
    d.report = validate_decomposition(g, d, require_tree=True)
    if not d.report.ok:
        logger.warning("candidate tree-decomposition fails %s at %s", d.report.axiom, d.report.witness)
    return d
