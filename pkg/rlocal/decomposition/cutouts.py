"""Cutouts of a nested set and their parts.

Works for r-local separations and, in oracle mode, for ordinary separations.
Both are read through a small view giving X(s), L(s), R(s) and the strict order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import networkx as nx

from ..global_oracle import Separation, strictly_greater
from ..graph_core import Edge, Graph, Part, node_id
from ..local_separations import LocalSeparation
from ..local_structure import local_geq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalView:
    g: Graph
    r: int

    def X(self, s: LocalSeparation) -> frozenset[str]:
        return s.X

    def L(self, s: LocalSeparation) -> frozenset[Edge]:
        return s.E1

    def R(self, s: LocalSeparation) -> frozenset[Edge]:
        return s.E2

    def greater(self, s: LocalSeparation, t: LocalSeparation) -> bool:
        """s ≻ t; only called on separations whose separators meet."""
        return s != t and local_geq(self.g, self.r, s, t)


@dataclass(frozen=True)
class GlobalView:
    g: Graph

    def X(self, s: Separation) -> frozenset[str]:
        return s.separator

    def L(self, s: Separation) -> frozenset[Edge]:
        return self.g.edges_between(s.small, s.separator)

    def R(self, s: Separation) -> frozenset[Edge]:
        return self.g.edges_between(s.separator, s.large)

    def greater(self, s: Separation, t: Separation) -> bool:
        return strictly_greater(s, t)


def view_for(g: Graph, N, r: int | None = None):
    """Local view when r is given, oracle view for ordinary separations otherwise."""
    if r is None:
        if any(isinstance(s, LocalSeparation) for s in N):
            raise ValueError("r-local separations need a value of r")
        return GlobalView(g)
    return LocalView(g, r)


@dataclass(frozen=True)
class Cutout:
    members: frozenset

    @cached_property
    def id(self) -> str:
        return node_id([str(s) for s in self.members])

    def sorted_members(self) -> list:
        return sorted(self.members, key=lambda s: s.sort_key())

    def __contains__(self, s):
        return s in self.members


@dataclass
class CutoutStructure:
    """Everything the cutout relations are computed from, built once per N."""

    view: object
    N: list
    orientations: list = field(default_factory=list)
    restricted: dict = field(default_factory=dict)
    separator_union: frozenset[str] = frozenset()
    components: list[frozenset[str]] = field(default_factory=list)


def _orientations(N) -> list:
    return sorted({o for s in N for o in s.orientations()}, key=lambda s: s.sort_key())


def _restricted(view, orientations, s) -> frozenset[Edge]:
    X = view.X(s)
    removed = frozenset().union(
        *(view.R(t) for t in orientations if view.X(t) & X and view.greater(s, t))
    )
    return view.R(s) - removed


def restricted_right_side(g: Graph, N, s, r: int | None = None) -> frozenset[Edge]:
    """R_N(s): R(s) without R(s') for every s' below s whose separator meets X(s)."""
    view = view_for(g, N, r)
    return _restricted(view, _orientations(N), s)


def _structure(g: Graph, N, r: int | None) -> CutoutStructure:
    view = view_for(g, N, r)
    orientations = _orientations(N)
    separator_union = frozenset().union(*(view.X(s) for s in orientations))
    return CutoutStructure(
        view=view,
        N=list(N),
        orientations=orientations,
        restricted={s: _restricted(view, orientations, s) for s in orientations},
        separator_union=separator_union,
        components=g.components_without(separator_union) if orientations else [],
    )


def _vertex_related(view, orientations, s1, s2) -> bool:
    t = s2.inverse()
    shared = view.X(s1) & view.X(s2)
    if not shared or not view.greater(s1, t):
        return False
    for v in shared:
        if not any(
            v in view.X(s) and view.greater(s1, s) and view.greater(s, t) for s in orientations
        ):
            return True
    return False


def _crossing_edges(g: Graph, view, orientations, separator_union) -> frozenset[Edge]:
    separators = {view.X(s) for s in orientations}
    return frozenset(
        (u, v)
        for u, v in g.induced_edges(separator_union)
        if not any(u in X and v in X for X in separators)
    )


def _cutouts(g: Graph, structure: CutoutStructure) -> list[Cutout]:
    view, orientations = structure.view, structure.orientations
    restricted = structure.restricted
    classes = nx.utils.UnionFind(orientations)
    for s1, s2 in combinations(orientations, 2):
        if _vertex_related(view, orientations, s1, s2) or _vertex_related(view, orientations, s2, s1):
            classes.union(s1, s2)
    for K in structure.components:
        touching = [s for s in orientations if g.boundary(K) & restricted[s]]
        for s in touching[1:]:
            classes.union(touching[0], s)
    for e in _crossing_edges(g, view, orientations, structure.separator_union):
        holding = [s for s in orientations if e in restricted[s]]
        for s in holding[1:]:
            classes.union(holding[0], s)
    found = [Cutout(frozenset(c)) for c in classes.to_sets()]
    return sorted(found, key=lambda c: min(s.sort_key() for s in c.members))


def cutouts(g: Graph, N, r: int | None = None) -> list[Cutout]:
    """Classes of the closure of the vertex, component and crossing-edge relations."""
    return _cutouts(g, _structure(g, N, r))


def _part(g: Graph, structure: CutoutStructure, cutout: Cutout) -> Part:
    view, restricted = structure.view, structure.restricted
    part = Part.empty()
    right = frozenset().union(*(restricted[s] for s in cutout.members))
    for s in cutout.members:
        part = part.union(Part.induced(g, view.X(s)))
    for K in structure.components:
        if g.boundary(K) & right:
            part = part.union(Part.induced(g, K))
    vertices = frozenset(v for e in right for v in e)
    return part.union(Part(vertices, right))


def part(g: Graph, cutout: Cutout, N, r: int | None = None) -> Part:
    return _part(g, _structure(g, N, r), cutout)
