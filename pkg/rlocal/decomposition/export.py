"""JSON and DOT renderings of a graph-decomposition."""

from __future__ import annotations

import json

from ..graph_core import GraphDecomposition


def decomposition_to_json(d: GraphDecomposition) -> dict:
    return {
        "nodes": [{"id": node, "part": part.to_json()} for node, part in sorted(d.parts.items())],
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "separation": e.label.to_json()} for e in d.edges
        ],
        "meta": dict(d.meta),
        "validation": d.report.to_json() if d.report else None,
    }


def dumps(d: GraphDecomposition) -> str:
    return json.dumps(decomposition_to_json(d), indent=2, sort_keys=True)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def decomposition_to_dot(d: GraphDecomposition) -> str:
    """Undirected DOT graph; node labels list the part, edge labels the separator."""
    lines = ["graph H {"]
    for node, part in sorted(d.parts.items()):
        vertices = ",".join(sorted(part.vertices))
        edges = " ".join(f"{u}-{v}" for u, v in sorted(part.edges))
        lines.append(f"\t{_quote(node)} [label={_quote(vertices)}, tooltip={_quote(edges)}];")
    for e in d.edges:
        separator = ",".join(e.label.to_json()["X"])
        lines.append(f"\t{_quote(e.u)} -- {_quote(e.v)} [label={_quote(separator)}, id={_quote(e.id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
