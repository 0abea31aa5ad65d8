"""Decomposition graphs: a multigraph whose nodes carry parts of a host graph."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable

import networkx as nx
from networkx.algorithms.isomorphism import categorical_multiedge_match, categorical_node_match

from ..errors import ContractViolation
from .graph import Edge, Graph


def node_id(member_keys) -> str:
    digest = hashlib.sha1("\n".join(sorted(member_keys)).encode("utf-8")).hexdigest()
    return f"n{digest[:10]}"


@dataclass(frozen=True)
class Part:
    vertices: frozenset[str]
    edges: frozenset[Edge]

    @classmethod
    def induced(cls, g: Graph, X) -> "Part":
        X = frozenset(X)
        return cls(X, g.induced_edges(X))

    @classmethod
    def empty(cls) -> "Part":
        return cls(frozenset(), frozenset())

    def union(self, other: "Part") -> "Part":
        return Part(self.vertices | other.vertices, self.edges | other.edges)

    def key(self):
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))

    def to_json(self) -> dict:
        vertices, edges = self.key()
        return {"vertices": list(vertices), "edges": [list(e) for e in edges]}


@dataclass(frozen=True)
class DecompositionEdge:
    id: str
    u: str
    v: str
    label: Any


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    witness: Any = None
    message: str = ""

    def to_json(self) -> dict:
        witness = self.witness
        if isinstance(witness, (set, frozenset, tuple)):
            witness = sorted(witness) if isinstance(witness, (set, frozenset)) else list(witness)
        return {"ok": self.ok, "axiom": self.axiom, "witness": witness, "message": self.message}


@dataclass
class GraphDecomposition:
    """Nodes map to parts, edges carry separation labels; loops and parallel edges allowed."""

    parts: dict[str, Part]
    edges: list[DecompositionEdge]
    members: dict[str, tuple] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)
    report: ValidationReport | None = None

    @cached_property
    def multigraph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for node, part in self.parts.items():
            graph.add_node(node, part=part.key())
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=edge.id, label=edge.label)
        return graph

    @property
    def labels(self) -> list:
        return [edge.label for edge in self.edges]

    def hosting(self, v: str) -> list[str]:
        return [node for node, part in self.parts.items() if v in part.vertices]


def validate_decomposition(g: Graph, d: GraphDecomposition, require_tree: bool = False) -> ValidationReport:
    """Check parts lie in g, (H1) coverage, (H2) connectivity and optionally tree shape."""
    for node, part in d.parts.items():
        stray = [e for e in part.edges if not g.has_edge(*e) or not set(e) <= part.vertices]
        if not part.vertices <= set(g.vertices) or stray:
            return ValidationReport(False, "parts", node, f"part of {node} is not a subgraph")
    covered_vertices = frozenset().union(*(p.vertices for p in d.parts.values()))
    missing = sorted(set(g.vertices) - covered_vertices)
    if missing:
        return ValidationReport(False, "H1", missing[0], f"vertex {missing[0]} lies in no part")
    covered_edges = frozenset().union(*(p.edges for p in d.parts.values()))
    missing_edges = sorted(set(g.edges) - covered_edges)
    if missing_edges:
        return ValidationReport(False, "H1", missing_edges[0], f"edge {missing_edges[0]} lies in no part")
    H = d.multigraph
    for v in g.vertices:
        hosts = d.hosting(v)
        if not nx.is_connected(H.subgraph(hosts)):
            return ValidationReport(False, "H2", v, f"nodes hosting {v} are not connected")
    if require_tree and not nx.is_tree(H):
        return ValidationReport(False, "tree", None, "decomposition graph is not a tree")
    return ValidationReport(True)


def contract(d: GraphDecomposition, labels) -> GraphDecomposition:
    """Contract every edge whose label is in ``labels``; parts of a branch set are united."""
    labels = set(labels)
    known = set(d.labels)
    unknown = labels - known
    if unknown:
        raise ContractViolation(f"unknown contraction labels: {sorted(map(str, unknown))}")
    branch = nx.Graph()
    branch.add_nodes_from(d.parts)
    branch.add_edges_from((e.u, e.v) for e in d.edges if e.label in labels)
    rename = {}
    parts: dict[str, Part] = {}
    members: dict[str, tuple] = {}
    for group in sorted(nx.connected_components(branch), key=min):
        group_members = tuple(m for node in sorted(group) for m in d.members.get(node, ()))
        new = node_id([str(m) for m in group_members] or sorted(group))
        part = Part.empty()
        for node in group:
            part = part.union(d.parts[node])
            rename[node] = new
        parts[new] = part
        members[new] = group_members
    edges = [
        DecompositionEdge(e.id, rename[e.u], rename[e.v], e.label) for e in d.edges if e.label not in labels
    ]
    return GraphDecomposition(parts=dict(sorted(parts.items())), edges=edges, members=members, meta=dict(d.meta))


def decompositions_isomorphic(
    d1: GraphDecomposition,
    d2: GraphDecomposition,
    label_key: Callable[[Any], Hashable] | None = None,
    other_label_key: Callable[[Any], Hashable] | None = None,
) -> bool:
    """Multigraph isomorphism preserving parts, and edge labels when a key is given."""

    def labelled(d, key):
        graph = nx.MultiGraph()
        for node, part in d.parts.items():
            graph.add_node(node, part=part.key())
        for edge in d.edges:
            graph.add_edge(edge.u, edge.v, label=key(edge.label) if key else None)
        return graph

    other_label_key = other_label_key or label_key
    return nx.is_isomorphic(
        labelled(d1, label_key),
        labelled(d2, other_label_key),
        node_match=categorical_node_match("part", None),
        edge_match=categorical_multiedge_match("label", None),
    )
