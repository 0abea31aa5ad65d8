"""Displacement guarantee arithmetic."""

from __future__ import annotations

import math

from ..graph_core import Graph, min_induced_cycle_longer_than, short_cycles_generate_cycle_space


def f(k: int) -> int:
    return 3 * k // 2 if k >= 3 else 0


def guarantee_bound(delta, r: int):
    """K(G,r) = delta / r + 1; infinite displacement gives an infinite bound."""
    if r == 0:
        return 2
    if delta == math.inf:
        return math.inf
    return delta / r + 1


def within_guarantee(k: int, delta, r: int) -> bool:
    """k < K(G,r); for r > 0 this is (k - 1) * r < delta."""
    return k < guarantee_bound(delta, r)


def displacement_lower_bound(g: Graph, r: int):
    """Least length a closed walk not generated by cycles of length <= r can have.

    Infinite when those cycles generate the whole cycle space, since then every
    closed walk lifts to a closed walk.
    """
    if short_cycles_generate_cycle_space(g, r):
        return math.inf
    return min_induced_cycle_longer_than(g, r)
