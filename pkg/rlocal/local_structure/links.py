"""Coupling, links, crossing, the local order and corners of r-local separations."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..errors import ContractViolation
from ..graph_core import Edge, Graph, make_edge, short_cycles
from ..local_separations import LocalSeparation, is_rtomic, local_x_paths

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coupling:
    coupled: bool
    shared: str | None = None
    cycle: tuple[str, ...] | None = None

    def __bool__(self):
        return self.coupled


def alternates(cycle, X, Y) -> bool:
    """Whether the cycle visits x, y, x', y' in this cyclic order."""
    marks = [("X" if v in X else "Y") for v in cycle if v in X or v in Y]
    runs = [m for i, m in enumerate(marks) if i == 0 or m != marks[i - 1]]
    if len(runs) > 1 and runs[0] == runs[-1]:
        runs.pop()
    return len(runs) >= 4


def r_coupled(g: Graph, r: int, X, Y) -> Coupling:
    X, Y = frozenset(X), frozenset(Y)
    shared = X & Y
    if shared:
        return Coupling(True, shared=min(shared))
    for cycle in short_cycles(g, r).meeting(X):
        if alternates(cycle, X, Y):
            return Coupling(True, cycle=cycle)
    return Coupling(False)


@dataclass(frozen=True)
class LinkReport:
    """Links between s = {E1, X, E2} and t = {F1, Y, F2}.

    ``x_links[j]`` is the X-link for F_{j+1}, ``y_links[i]`` the Y-link for E_{i+1},
    ``centre_edges[i][j]`` the edge set E_{i+1} ∩ F_{j+1} ∩ ∂(X ∩ Y).
    """

    x_links: tuple[frozenset[str], frozenset[str]]
    y_links: tuple[frozenset[str], frozenset[str]]
    centre: frozenset[str]
    centre_edges: tuple[tuple[frozenset[Edge], frozenset[Edge]], tuple[frozenset[Edge], frozenset[Edge]]]

    @property
    def x_link_for_F1(self):
        return self.x_links[0]

    @property
    def x_link_for_F2(self):
        return self.x_links[1]

    @property
    def y_link_for_E1(self):
        return self.y_links[0]

    @property
    def y_link_for_E2(self):
        return self.y_links[1]


def _first_entries(paths: dict[str, list[tuple[str, ...]]], Y: frozenset[str], start: str) -> set[Edge]:
    """First edges into Y over walks from start made of r-local X-paths with no repeated X vertex."""
    entries: set[Edge] = set()
    stack = [(start, frozenset([start]))]
    seen = set()
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        here, visited = state
        for path in paths.get(here, ()):
            if path[-1] in visited:
                continue
            entry = next((i for i in range(1, len(path)) if path[i] in Y), None)
            if entry is not None:
                entries.add(make_edge(path[entry - 1], path[entry]))
            else:
                stack.append((path[-1], visited | {path[-1]}))
    return entries


def _one_sided_links(g: Graph, r: int, X, Y, F1, F2) -> tuple[frozenset[str], frozenset[str]]:
    paths: dict[str, list[tuple[str, ...]]] = {}
    for p in local_x_paths(g, r, X):
        paths.setdefault(p[0], []).append(p)
    link1, link2 = set(), set()
    for x in sorted(X - Y):
        entries = _first_entries(paths, Y, x)
        if entries & F1:
            link1.add(x)
        if entries & F2:
            link2.add(x)
    return frozenset(link1), frozenset(link2)


def _require_rtomic(g: Graph, r: int, *separations: LocalSeparation):
    for s in separations:
        if not is_rtomic(g, r, s.X):
            raise ContractViolation(f"separator {sorted(s.X)} is not {r}-tomic")


@lru_cache(maxsize=1 << 16)
def links(g: Graph, r: int, s: LocalSeparation, t: LocalSeparation) -> LinkReport:
    _require_rtomic(g, r, s, t)
    X, Y = s.X, t.X
    centre = X & Y
    centre_boundary = g.boundary(centre)
    E, F = (s.E1, s.E2), (t.E1, t.E2)
    return LinkReport(
        x_links=_one_sided_links(g, r, X, Y, t.E1, t.E2),
        y_links=_one_sided_links(g, r, Y, X, s.E1, s.E2),
        centre=centre,
        centre_edges=tuple(
            tuple(E[i] & F[j] & centre_boundary for j in range(2)) for i in range(2)
        ),
    )


def cross_local(g: Graph, r: int, s: LocalSeparation, t: LocalSeparation) -> bool:
    _require_rtomic(g, r, s, t)
    if not r_coupled(g, r, s.X, t.X):
        return False
    report = links(g, r, s, t)
    return all(
        report.x_links[j] or report.y_links[i] or report.centre_edges[i][j]
        for i, j in product(range(2), repeat=2)
    )


def local_geq(g: Graph, r: int, s: LocalSeparation, t: LocalSeparation) -> bool:
    """s ⪰ t for separations with coupled r-tomic separators."""
    if not r_coupled(g, r, s.X, t.X):
        raise ContractViolation(f"{s} and {t} are not {r}-coupled")
    report = links(g, r, s, t)
    return not (report.x_links[1] or report.y_links[0] or report.centre_edges[0][1])


def local_corner(g: Graph, r: int, s: LocalSeparation, t: LocalSeparation, i: int, j: int) -> LocalSeparation:
    """The corner for E_i and F_j."""
    if not r_coupled(g, r, s.X, t.X):
        raise ContractViolation(f"{s} and {t} are not {r}-coupled")
    report = links(g, r, s, t)
    L = report.y_links[i - 1] | report.x_links[j - 1] | report.centre
    E_other = (s.E1, s.E2)[2 - i]
    F_other = (t.E1, t.E2)[2 - j]
    boundary = g.boundary(L)
    outer = boundary & (E_other | F_other)
    return LocalSeparation(boundary - outer, L, outer)
