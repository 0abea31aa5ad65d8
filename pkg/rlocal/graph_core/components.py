from __future__ import annotations

from .graph import Edge, Graph


def componental_cuts(g: Graph, X) -> list[tuple[frozenset[str], frozenset[Edge]]]:
    """Components C of G - X paired with E(C, X); the cuts partition the boundary of X."""
    g.require_connected()
    X = frozenset(X)
    return [(component, g.edges_between(component, X)) for component in g.components_without(X)]


def tight_components(g: Graph, X) -> list[frozenset[str]]:
    X = frozenset(X)
    return [K for K in g.components_without(X) if g.neighbourhood(K) == X]
