"""Displacement of the r-local cover measured inside a certified window."""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass

from ..graph_core import Graph, short_cycles_generate_cycle_space
from ..local_bottlenecks import displacement_lower_bound
from .window import DEFAULT_WINDOW_NODES, CoverWindow, build_cover_window

logger = logging.getLogger(__name__)

EXACT = "exact"
LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class Displacement:
    value: float
    mode: str
    witness: tuple[str, str] | None = None

    def to_json(self) -> dict:
        value = "inf" if self.value == math.inf else int(self.value)
        return {"value": value, "mode": self.mode, "witness": list(self.witness) if self.witness else None}


def _nearest_other_lift(w: CoverWindow, start: str, radius: int):
    """BFS inside the ball of the given radius; returns (distance, node) of the closest fibre-mate."""
    fibre = w.projection[start]
    dist = {start: 0}
    queue = deque([start])
    while queue:
        n = queue.popleft()
        if n != start and w.projection[n] == fibre and w.distinct_in_cover(n, start):
            return dist[n], n
        for m in sorted(w.graph.neighbours(n)):
            if m not in dist and w.depth[m] <= radius:
                dist[m] = dist[n] + 1
                queue.append(m)
    return None


def displacement_in_window(w: CoverWindow) -> Displacement:
    g, r = w.g, w.r
    if short_cycles_generate_cycle_space(g, r):
        return Displacement(math.inf, EXACT)
    bound = displacement_lower_bound(g, r)
    if not w.certified:
        return Displacement(bound, LOWER_BOUND)
    radius = w.clean_radius
    best, witness = math.inf, None
    unresolved = math.inf
    for v in g.vertices:
        start = w.lifts(v)[0]
        found = _nearest_other_lift(w, start, radius)
        if found is not None and w.depth[start] + found[0] <= radius:
            if found[0] < best:
                best, witness = found[0], (start, found[1])
        elif not w.complete:
            unresolved = min(unresolved, radius - w.depth[start] + 1)
    if best < math.inf and best <= unresolved:
        return Displacement(best, EXACT, witness)
    if best == math.inf and w.complete:
        return Displacement(math.inf, EXACT)
    return Displacement(max(bound, min(best, unresolved)), LOWER_BOUND)


def displacement(g: Graph, r: int, R: int, cap: int = DEFAULT_WINDOW_NODES) -> Displacement:
    """Delta_r(G), exact when a certified window of radius R witnesses it."""
    if short_cycles_generate_cycle_space(g, r):
        return Displacement(math.inf, EXACT)
    result = displacement_in_window(build_cover_window(g, r, R, cap=cap))
    logger.info("displacement %s (%s)", result.value, result.mode)
    return result
