"""Rings of glued copies of a part, with a lower bound on their displacement."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..errors import ContractViolation
from ..graph_core import Graph, glue_ring, short_cycles_generate_cycle_space


@dataclass(frozen=True)
class RingGraph:
    graph: Graph
    displacement_bound: int


def ring_generator(n: int, part: Graph, a: str, b: str, r: int | None = None) -> RingGraph:
    """n copies of part glued in a cycle, b of each copy identified with a of the next.

    The bound is n times the distance from a to b in part; it holds for every r
    at which the cycles of length <= r generate the cycle space of part.
    """
    a, b = str(a), str(b)
    if n < 2:
        raise ContractViolation("a ring needs at least two copies")
    if a == b or a not in part.vertices or b not in part.vertices:
        raise ContractViolation("adhesion vertices must be two distinct vertices of the part")
    if not part.is_connected():
        raise ContractViolation("part must be connected")
    if r is not None and not short_cycles_generate_cycle_space(part, r):
        raise ContractViolation(f"cycles of length <= {r} do not generate the cycle space of the part")
    distance = nx.shortest_path_length(part.nx_graph, a, b)
    return RingGraph(glue_ring(n, part, a, b), n * distance)
