from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

import networkx as nx

from ..errors import DisconnectedGraphError, EmptyGraphError, GraphParseError

Edge = tuple[str, str]


def make_edge(u, v) -> Edge:
    u, v = str(u), str(v)
    return (u, v) if u < v else (v, u)


def sorted_edges(edges: Iterable[Edge]) -> list[Edge]:
    return sorted(edges)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with string vertex identifiers.

    Vertices and edges are kept sorted so that every derived listing is
    deterministic.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    adjacency: Mapping[str, frozenset[str]] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        edge_set = set()
        vertex_set = {str(v) for v in vertices}
        for u, v in edges:
            if str(u) == str(v):
                raise GraphParseError(0, f"loop edge at {u}")
            edge_set.add(make_edge(u, v))
            vertex_set.update((str(u), str(v)))
        adjacency = {v: set() for v in vertex_set}
        for u, v in edge_set:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(
            vertices=tuple(sorted(vertex_set)),
            edges=tuple(sorted(edge_set)),
            adjacency={v: frozenset(nbrs) for v, nbrs in adjacency.items()},
        )

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __len__(self):
        return len(self.vertices)

    def neighbours(self, v) -> frozenset[str]:
        return self.adjacency[v]

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency.get(u, ())

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_connected(self.nx_graph)

    def require_connected(self):
        if not self.is_connected():
            raise DisconnectedGraphError("operation requires a connected graph")

    def boundary(self, X) -> frozenset[Edge]:
        """All edges with precisely one end in X."""
        X = set(X)
        return frozenset(
            make_edge(x, y) for x in X for y in self.adjacency[x] if y not in X
        )

    def edges_between(self, A, B) -> frozenset[Edge]:
        B = set(B)
        return frozenset(make_edge(a, b) for a in A for b in self.adjacency[a] if b in B)

    def induced_edges(self, X) -> frozenset[Edge]:
        X = set(X)
        return frozenset(make_edge(x, y) for x in X for y in self.adjacency[x] if y in X)

    def neighbourhood(self, K) -> frozenset[str]:
        K = set(K)
        return frozenset(y for x in K for y in self.adjacency[x] if y not in K)

    def components_without(self, X) -> list[frozenset[str]]:
        """Components of G - X, sorted by their smallest vertex."""
        rest = self.nx_graph.subgraph(v for v in self.vertices if v not in set(X))
        return sorted((frozenset(c) for c in nx.connected_components(rest)), key=min)

    def induced_subgraph(self, X) -> "Graph":
        return Graph.from_edges(self.induced_edges(X), vertices=X)

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            vertices=(mapping[v] for v in self.vertices),
        )


def load_graph(text: str) -> Graph:
    """Parse an edge list, one "u v" pair per line, '#' starting a comment."""
    edges = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(line_number, f"expected 'u v', got {raw.strip()!r}")
        u, v = tokens
        if u == v:
            raise GraphParseError(line_number, f"loop edge at {u}")
        edges.append((u, v))
    if not edges:
        raise EmptyGraphError("input contains no edges")
    return Graph.from_edges(edges)


def load_source(source: str) -> Graph:
    """Read a graph from a path or a ``fixture:NAME`` pseudo-path."""
    if source.startswith("fixture:"):
        from .fixtures import fixture

        return fixture(source.split(":", 1)[1])
    return load_graph(Path(source).read_text(encoding="utf-8"))


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)
