"""r-local components and r-toms at a vertex set."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from ..graph_core import Edge, Graph, make_edge, short_cycles


def x_arcs(cycle, X) -> list[tuple[str, ...]]:
    """Arcs of a cycle between cyclically consecutive vertices of X, in cycle direction."""
    n = len(cycle)
    positions = [i for i, v in enumerate(cycle) if v in X]
    if len(positions) < 2:
        return []
    ends = positions[1:] + [positions[0] + n]
    return [tuple(cycle[i % n] for i in range(a, b + 1)) for a, b in zip(positions, ends)]


def local_x_paths(g: Graph, r: int, X) -> list[tuple[str, ...]]:
    """All r-local X-paths, each listed in both directions."""
    X = frozenset(X)
    paths = set()
    for x in X:
        for y in g.neighbours(x) & X:
            paths.add((x, y))
    for cycle in short_cycles(g, r).meeting(X):
        for arc in x_arcs(cycle, X):
            paths.add(arc)
            paths.add(arc[::-1])
    return sorted(paths)


@dataclass(frozen=True)
class LocalComponents:
    X: frozenset[str]
    classes: tuple[frozenset[Edge], ...]
    tight: tuple[bool, ...]

    @cached_property
    def index(self) -> dict[Edge, int]:
        return {e: i for i, cls in enumerate(self.classes) for e in cls}

    @property
    def tight_classes(self) -> list[frozenset[Edge]]:
        return [cls for cls, tight in zip(self.classes, self.tight) if tight]

    def ends_in_X(self, cls) -> frozenset[str]:
        return frozenset(v for e in cls for v in e if v in self.X)

    def __len__(self):
        return len(self.classes)


def local_components(g: Graph, r: int, X) -> LocalComponents:
    """Classes of the closure of the r-local X-walk relation on the boundary of X."""
    X = frozenset(X)
    boundary = sorted(g.boundary(X))
    classes = nx.utils.UnionFind(boundary)
    for cycle in short_cycles(g, r).meeting(X):
        n = len(cycle)
        positions = [i for i, v in enumerate(cycle) if v in X]
        if len(positions) == n:
            continue
        if len(positions) == 1:
            p = positions[0]
            classes.union(make_edge(cycle[p - 1], cycle[p]), make_edge(cycle[p], cycle[(p + 1) % n]))
            continue
        for arc in x_arcs(cycle, X):
            if len(arc) > 2:
                classes.union(make_edge(arc[0], arc[1]), make_edge(arc[-2], arc[-1]))
    ordered = sorted((frozenset(c) for c in classes.to_sets()), key=min)
    tight = tuple(X <= frozenset(v for e in cls for v in e) for cls in ordered)
    return LocalComponents(X=X, classes=tuple(ordered), tight=tight)


def is_local_separator(g: Graph, r: int, X) -> bool:
    return len(local_components(g, r, X)) >= 2


def is_tight_local_separator(g: Graph, r: int, X) -> bool:
    return sum(local_components(g, r, X).tight) >= 2


@dataclass(frozen=True)
class RTomPartition:
    X: frozenset[str]
    atoms: tuple[frozenset[str], ...]

    @property
    def is_rtomic(self) -> bool:
        return len(self.atoms) == 1


def r_toms(g: Graph, r: int, X) -> RTomPartition:
    """Atoms of X under linkage by r-local X-paths."""
    X = frozenset(X)
    linked = nx.Graph()
    linked.add_nodes_from(X)
    linked.add_edges_from((p[0], p[-1]) for p in local_x_paths(g, r, X))
    atoms = sorted((frozenset(c) for c in nx.connected_components(linked)), key=min)
    return RTomPartition(X=X, atoms=tuple(atoms))


def is_rtomic(g: Graph, r: int, X) -> bool:
    return r_toms(g, r, X).is_rtomic
