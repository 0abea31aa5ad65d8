"""The graph-decomposition H(N) of a nested set and the end-to-end decomposition."""

from __future__ import annotations

import logging
from typing import Mapping

from ..errors import ContractViolation
from ..global_oracle import Separation
from ..graph_core import (
    DecompositionEdge,
    Graph,
    GraphDecomposition,
    Part,
    make_edge,
    node_id,
    validate_decomposition,
)
from ..local_bottlenecks import nested_set_local
from ..local_separations import DEFAULT_CANDIDATE_CAP, LocalSeparation
from ..global_oracle.tstars import DEFAULT_TSTAR_CAP
from .cutouts import _cutouts, _part, _structure

logger = logging.getLogger(__name__)


def build_decomposition(g: Graph, N, r: int | None = None) -> GraphDecomposition:
    """Nodes are the cutouts of N, each separation joins the cutouts of its two orientations."""
    N = sorted({s.canonical() for s in N}, key=lambda s: s.sort_key())
    if not N:
        d = GraphDecomposition(parts={node_id([]): Part.induced(g, g.vertices)}, edges=[], members={node_id([]): ()})
        d.report = validate_decomposition(g, d)
        return d
    structure = _structure(g, N, r)
    parts, members, home = {}, {}, {}
    for cutout in _cutouts(g, structure):
        parts[cutout.id] = _part(g, structure, cutout)
        members[cutout.id] = tuple(cutout.sorted_members())
        for s in cutout.members:
            home[s] = cutout.id
    edges = [DecompositionEdge(f"e{i}", home[s.inverse()], home[s], s) for i, s in enumerate(N)]
    d = GraphDecomposition(parts=parts, edges=edges, members=members)
    d.report = validate_decomposition(g, d)
    if not d.report.ok:
        logger.warning("decomposition fails %s at %s", d.report.axiom, d.report.witness)
    return d


def decompose(
    g: Graph,
    r: int,
    kmax: int,
    delta=None,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    tstar_cap: int = DEFAULT_TSTAR_CAP,
) -> GraphDecomposition:
    """H_r^{<=kmax}(G): the decomposition of the nested set of tight r-local separations."""
    nested = nested_set_local(g, r, kmax, delta=delta, candidate_cap=candidate_cap, tstar_cap=tstar_cap)
    d = build_decomposition(g, nested.union, r)
    d.meta = {
        "r": r,
        "k": kmax,
        "beyond_guarantee": nested.beyond_guarantee,
        "levels": {k: len(level) for k, level in sorted(nested.levels.items())},
    }
    logger.info(
        "decomposition with %d nodes and %d edges (r=%d, k=%d)", len(d.parts), len(d.edges), r, kmax
    )
    return d


def labels_above(d: GraphDecomposition, level: int) -> list:
    """Edge labels of order greater than level, for refinement by contraction."""
    return [label for label in d.labels if label.order > level]


def _require_automorphism(g: Graph, phi: Mapping[str, str]):
    if set(phi) != set(g.vertices) or set(phi.values()) != set(g.vertices):
        raise ContractViolation("map is not a bijection of the vertex set")
    if {make_edge(phi[u], phi[v]) for u, v in g.edges} != g.edge_set:
        raise ContractViolation("map does not preserve the edge set")


def image(s, phi: Mapping[str, str]):
    """The image of a (local) separation under a vertex map."""
    if isinstance(s, LocalSeparation):
        return LocalSeparation(
            frozenset(make_edge(phi[u], phi[v]) for u, v in s.E1),
            frozenset(phi[x] for x in s.X),
            frozenset(make_edge(phi[u], phi[v]) for u, v in s.E2),
        )
    if isinstance(s, Separation):
        return Separation(frozenset(phi[v] for v in s.A), frozenset(phi[v] for v in s.B))
    raise TypeError(f"cannot map {type(s).__name__}")


def _image_part(part: Part, phi) -> Part:
    return Part(frozenset(phi[v] for v in part.vertices), frozenset(make_edge(phi[u], phi[v]) for u, v in part.edges))


def canonicity_check(g: Graph, d: GraphDecomposition, phi: Mapping[str, str]) -> bool:
    """Whether phi carries labels to labels and induces an automorphism of H commuting with parts."""
    phi = {str(u): str(v) for u, v in phi.items()}
    _require_automorphism(g, phi)
    labels = {label.canonical() for label in d.labels}
    if {image(label, phi).canonical() for label in labels} != labels:
        return False
    by_members = {frozenset(m): node for node, m in d.members.items()}
    node_map = {}
    for node, members in d.members.items():
        target = by_members.get(frozenset(image(s, phi) for s in members))
        if target is None:
            return False
        node_map[node] = target
    if any(_image_part(d.parts[node], phi) != d.parts[target] for node, target in node_map.items()):
        return False
    ours = sorted((_node_pair(e.u, e.v), e.label.canonical().sort_key()) for e in d.edges)
    theirs = sorted(
        (_node_pair(node_map[e.u], node_map[e.v]), image(e.label, phi).canonical().sort_key()) for e in d.edges
    )
    return ours == theirs


def _node_pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)
