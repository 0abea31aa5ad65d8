"""Short cycles, induced cycles and the binary cycle space."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import networkx as nx

from ..errors import CapExceededError
from .graph import Edge, Graph, make_edge

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 10 ** 6


def canonical_cycle(cycle) -> tuple[str, ...]:
    """Rotate to the smallest vertex and pick the direction with the smaller second vertex."""
    cycle = tuple(cycle)
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    reflected = (rotated[0],) + rotated[1:][::-1]
    return min(rotated, reflected)


def cycle_edges(cycle) -> tuple[Edge, ...]:
    return tuple(make_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


@dataclass(frozen=True)
class ShortCycleSet:
    r: int
    cycles: tuple[tuple[str, ...], ...]

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)

    @cached_property
    def edge_sets(self) -> tuple[frozenset[Edge], ...]:
        return tuple(frozenset(cycle_edges(c)) for c in self.cycles)

    @cached_property
    def by_vertex(self) -> dict[str, tuple[int, ...]]:
        index: dict[str, list[int]] = {}
        for i, cycle in enumerate(self.cycles):
            for v in cycle:
                index.setdefault(v, []).append(i)
        return {v: tuple(ids) for v, ids in index.items()}

    def meeting(self, X) -> list[tuple[str, ...]]:
        ids = sorted({i for x in X for i in self.by_vertex.get(x, ())})
        return [self.cycles[i] for i in ids]


def short_cycles(g: Graph, r: int, cap: int = DEFAULT_CYCLE_CAP) -> ShortCycleSet:
    """All simple cycles of length at most r, each listed once in canonical form."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return _short_cycles(g, r, cap)


@lru_cache(maxsize=128)
def _short_cycles(g: Graph, r: int, cap: int) -> ShortCycleSet:
    found: list[tuple[str, ...]] = []
    for start in g.vertices:
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            for w in g.adjacency[v]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    found.append(path)
                    if len(found) > cap:
                        raise CapExceededError("cycles", cap)
                elif w > start and w not in path and len(path) < r:
                    stack.append((w, path + (w,)))
    result = ShortCycleSet(r=r, cycles=tuple(sorted(canonical_cycle(c) for c in found)))
    logger.debug("found %d cycles of length <= %d", len(result), r)
    return result


def min_induced_cycle_longer_than(g: Graph, r: int):
    """Minimum length of an induced cycle longer than r, or infinity."""
    best = math.inf
    for cycle in nx.chordless_cycles(g.nx_graph):
        if r < len(cycle) < best:
            best = len(cycle)
    return best


def gf2_rank(rows: list[int], n_cols: int) -> int:
    work = rows[:]
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def cycle_space_dimension(g: Graph) -> int:
    return len(g.edges) - len(g.vertices) + nx.number_connected_components(g.nx_graph)


def short_cycles_generate_cycle_space(g: Graph, r: int) -> bool:
    index = {e: i for i, e in enumerate(g.edges)}
    rows = [sum(1 << index[e] for e in edges) for edges in short_cycles(g, r).edge_sets]
    return gf2_rank(rows, len(g.edges)) == cycle_space_dimension(g)
