"""Finite windows of the r-local cover G_r around a basepoint.

A window is grown like a coset table: every live node lies over a vertex of G
and has at most one neighbour over each neighbour of that vertex.  Nodes are
defined breadth-first up to the build radius, and every short cycle is scanned
as a relator from every node.  A relator lift that fails to close forces a
coincidence, which is processed with Stallings folding so that the table stays
locally injective.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from sympy import Matrix, Rational, eye

from ..errors import CapExceededError
from ..graph_core import Graph, make_edge, short_cycles

logger = logging.getLogger(__name__)

DEFAULT_WINDOW_NODES = 20_000


class _Table:
    """Live nodes, their projections and the partial neighbour table."""

    def __init__(self, g: Graph, basepoint: str, cap: int):
        self.g = g
        self.cap = cap
        self.p: list[int] = [0]
        self.proj: list[str] = [basepoint]
        self.nbr: list[dict[str, int]] = [{}]
        self.merges = 0

    def live(self) -> list[int]:
        return [n for n in range(len(self.p)) if self.p[n] == n]

    def rep(self, n: int) -> int:
        while self.p[n] != n:
            self.p[n] = self.p[self.p[n]]
            n = self.p[n]
        return n

    def define(self, n: int, w: str) -> int:
        if len(self.p) - self.merges >= self.cap:
            raise CapExceededError("window_nodes", self.cap, partial=self)
        m = len(self.p)
        self.p.append(m)
        self.proj.append(w)
        self.nbr.append({self.proj[n]: n})
        self.nbr[n][w] = m
        return m

    def connect(self, a: int, b: int):
        a, b = self.rep(a), self.rep(b)
        pa, pb = self.proj[a], self.proj[b]
        existing = self.nbr[a].get(pb)
        if existing is not None and self.rep(existing) != b:
            self.coincidence(existing, b)
            return
        existing = self.nbr[b].get(pa)
        if existing is not None and self.rep(existing) != a:
            self.coincidence(existing, a)
            return
        self.nbr[a][pb] = b
        self.nbr[b][pa] = a

    def coincidence(self, a: int, b: int):
        """Identify a and b and fold every pair of equally labelled neighbours."""
        queue = deque([(a, b)])
        while queue:
            a, b = (self.rep(x) for x in queue.popleft())
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.p[b] = a
            self.merges += 1
            for w, c in self.nbr[b].items():
                c = self.rep(c)
                mine = self.nbr[a].get(w)
                if mine is None:
                    self.nbr[a][w] = c
                elif self.rep(mine) != c:
                    queue.append((mine, c))
                back = self.nbr[c]
                back[self.proj[a]] = a
            self.nbr[b] = {}
        for n in self.live():
            self.nbr[n] = {w: self.rep(m) for w, m in self.nbr[n].items()}

    def walk(self, start: int, cycle, direction: int):
        """Follow the relator from start as far as the table allows; returns the nodes visited."""
        n = len(cycle)
        nodes = [self.rep(start)]
        for step in range(1, n + 1):
            w = cycle[(direction * step) % n]
            nxt = self.nbr[nodes[-1]].get(w)
            if nxt is None:
                break
            nodes.append(self.rep(nxt))
        return nodes

    def scan(self, start: int, cycle) -> bool:
        """Scan one relator from start; returns True when the table changed."""
        n = len(cycle)
        forward = self.walk(start, cycle, 1)
        if len(forward) == n + 1:
            if forward[-1] != forward[0]:
                self.coincidence(forward[0], forward[-1])
                return True
            return False
        backward = self.walk(start, cycle, -1)
        # forward[i] lies over cycle[i], backward[j] over cycle[-j]
        reach_f, reach_b = len(forward) - 1, n - (len(backward) - 1)
        if reach_f + 1 == reach_b:
            self.connect(forward[-1], backward[-1])
            return True
        if reach_b <= reach_f:
            left, right = forward[reach_b], backward[n - reach_b]
            if left != right:
                self.coincidence(left, right)
                return True
        return False

    def depths(self) -> dict[int, int]:
        root = self.rep(0)
        depth = {root: 0}
        queue = deque([root])
        while queue:
            n = queue.popleft()
            for w in sorted(self.nbr[n]):
                m = self.rep(self.nbr[n][w])
                if m not in depth:
                    depth[m] = depth[n] + 1
                    queue.append(m)
        return depth


def _relators(g: Graph, r: int) -> dict[str, list[tuple[str, ...]]]:
    """Every short cycle rotated to start at each of its vertices."""
    by_start: dict[str, list[tuple[str, ...]]] = {}
    for cycle in short_cycles(g, r):
        for i in range(len(cycle)):
            rotated = cycle[i:] + cycle[:i]
            by_start.setdefault(rotated[0], []).append(rotated)
    return by_start


def _close(table: _Table, relators) -> None:
    changed = True
    while changed:
        changed = False
        for n in table.live():
            if table.p[n] != n:
                continue
            for cycle in relators.get(table.proj[n], ()):
                if table.p[n] != n:
                    break
                changed |= table.scan(n, cycle)


@dataclass
class CoverWindow:
    """A finite piece of G_r: projection, depths and the certified radius."""

    g: Graph
    r: int
    graph: Graph
    projection: dict[str, str]
    depth: dict[str, int]
    basepoint: str
    build_radius: int
    requested_radius: int
    clean_radius: int
    complete: bool = False
    labels: dict[str, tuple] = field(default_factory=dict, repr=False)

    @property
    def certified(self) -> bool:
        return self.clean_radius >= self.requested_radius

    @property
    def certified_radius(self) -> int:
        return min(self.requested_radius, self.clean_radius)

    @cached_property
    def fibres(self) -> dict[str, list[str]]:
        fibres: dict[str, list[str]] = {v: [] for v in self.g.vertices}
        for node in sorted(self.graph.vertices, key=lambda n: (self.depth[n], n)):
            fibres[self.projection[node]].append(node)
        return fibres

    def lifts(self, v: str, radius: int | None = None) -> list[str]:
        lifts = self.fibres.get(v, [])
        if radius is None:
            return list(lifts)
        return [n for n in lifts if self.depth[n] <= radius]

    def is_interior(self, node: str) -> bool:
        return self.depth[node] < self.build_radius

    def neighbour_over(self, node: str, w: str) -> str | None:
        for m in self.graph.neighbours(node):
            if self.projection[m] == w:
                return m
        return None

    def project_edge(self, e):
        return make_edge(self.projection[e[0]], self.projection[e[1]])

    def distinct_in_cover(self, a: str, b: str) -> bool:
        """Whether two window nodes are provably different vertices of G_r."""
        return self.projection[a] != self.projection[b] or self.labels[a] != self.labels[b]

    def fibre_annotations(self) -> list[dict]:
        return [
            {"vertex": n, "fibre": self.projection[n], "depth": self.depth[n]}
            for n in sorted(self.graph.vertices, key=lambda n: (self.depth[n], n))
        ]


def homology_functionals(g: Graph, r: int) -> Matrix:
    """Rows span the functionals on edge space vanishing on every cycle of length <= r."""
    index = {e: i for i, e in enumerate(g.edges)}
    rows = []
    for cycle in short_cycles(g, r):
        row = [0] * len(g.edges)
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            row[index[make_edge(u, v)]] += 1 if u < v else -1
        rows.append(row)
    if not rows:
        return eye(len(g.edges))
    basis = Matrix(rows).nullspace()
    if not basis:
        return Matrix.zeros(0, len(g.edges))
    return Matrix.hstack(*basis).T


def _homology_labels(g: Graph, r: int, table: _Table, depth: dict[int, int]) -> dict[int, tuple]:
    """Image of the tree path from the basepoint under the functionals."""
    L = homology_functionals(g, r)
    index = {e: i for i, e in enumerate(g.edges)}
    columns = {e: tuple(L[:, i]) for e, i in index.items()}
    root = table.rep(0)
    labels = {root: tuple(Rational(0) for _ in range(L.rows))}
    for n in sorted(depth, key=depth.get):
        for w in sorted(table.nbr[n]):
            m = table.rep(table.nbr[n][w])
            if m in labels or depth[m] != depth[n] + 1:
                continue
            u = table.proj[n]
            sign = 1 if u < w else -1
            col = columns[make_edge(u, w)]
            labels[m] = tuple(a + sign * c for a, c in zip(labels[n], col))
    return labels


def _grow(g: Graph, r: int, basepoint: str, build_radius: int, cap: int) -> _Table:
    table = _Table(g, basepoint, cap)
    relators = _relators(g, r)
    _close(table, relators)
    while True:
        depth = table.depths()
        incomplete = [
            n for n, d in depth.items()
            if d < build_radius and len(table.nbr[n]) < g.degree(table.proj[n])
        ]
        if not incomplete:
            return table
        layer = min(depth[n] for n in incomplete)
        for n in sorted(n for n in incomplete if depth[n] == layer):
            n = table.rep(n)
            for w in sorted(g.neighbours(table.proj[n]) - set(table.nbr[n])):
                table.define(n, w)
        _close(table, relators)


def build_cover_window(
    g: Graph, r: int, R: int, basepoint: str | None = None, cap: int = DEFAULT_WINDOW_NODES
) -> CoverWindow:
    """Grow a window of G_r to depth R + r and certify the ball of radius R."""
    g.require_connected()
    if R < 1:
        raise ValueError("window radius must be at least 1")
    basepoint = basepoint or g.vertices[0]
    build_radius = R + r
    table = _grow(g, r, basepoint, build_radius, cap)
    depth = table.depths()

    names: dict[int, str] = {}
    counters: dict[str, int] = {}
    for n in sorted(depth, key=lambda n: (depth[n], n)):
        v = table.proj[n]
        names[n] = f"{v}@{counters.get(v, 0)}"
        counters[v] = counters.get(v, 0) + 1
    edges = {
        tuple(sorted((names[n], names[table.rep(m)]))) for n in depth for m in table.nbr[n].values()
    }
    complete = all(len(table.nbr[n]) == g.degree(table.proj[n]) for n in depth)

    labels = _homology_labels(g, r, table, depth)
    clean_radius = max(build_radius, max(depth.values())) if complete else build_radius - 1
    seen: dict[tuple, int] = {}
    for n in sorted(depth, key=lambda n: (depth[n], n)):
        key = (table.proj[n], labels[n])
        if key in seen:
            clean_radius = min(clean_radius, depth[n] - 1)
            break
        seen[key] = n

    window = CoverWindow(
        g=g,
        r=r,
        graph=Graph.from_edges(edges, vertices=names.values()),
        projection={names[n]: table.proj[n] for n in depth},
        depth={names[n]: d for n, d in depth.items()},
        basepoint=names[table.rep(0)],
        build_radius=build_radius,
        requested_radius=R,
        clean_radius=clean_radius,
        complete=complete,
        labels={names[n]: labels[n] for n in depth},
    )
    logger.info(
        "window of %d nodes after %d coincidences; certified radius %d%s",
        len(depth),
        table.merges,
        window.certified_radius,
        "" if window.certified else " (uncertified)",
    )
    return window
