"""Lifts of r-local separations into a cover window and their projections."""

from __future__ import annotations

from ..errors import LiftError
from ..graph_core import make_edge
from ..local_separations import LocalSeparation, local_x_paths
from .window import CoverWindow


def _lift_path(w: CoverWindow, start: str, path) -> str:
    node = start
    for v in path[1:]:
        nxt = w.neighbour_over(node, v)
        if nxt is None:
            raise LiftError(f"lift of {'-'.join(path)} leaves the window at {node}")
        node = nxt
    return node


def lift_separator(w: CoverWindow, X, anchor: str) -> dict[str, str]:
    """The lift of X reached from anchor along lifted r-local X-paths, as a map vertex -> lift."""
    X = frozenset(X)
    if w.projection.get(anchor) not in X:
        raise LiftError(f"anchor {anchor} does not lie over the separator")
    paths: dict[str, list] = {}
    for p in local_x_paths(w.g, w.r, X):
        paths.setdefault(p[0], []).append(p)
    lifted = {w.projection[anchor]: anchor}
    stack = [anchor]
    while stack:
        node = stack.pop()
        if w.depth[node] > w.certified_radius:
            raise LiftError(f"lift {node} lies outside the certified radius {w.certified_radius}")
        for path in paths.get(w.projection[node], ()):
            end = _lift_path(w, node, path)
            known = lifted.get(path[-1])
            if known is None:
                lifted[path[-1]] = end
                stack.append(end)
            elif known != end:
                raise LiftError(f"{path[-1]} has two lifts {known} and {end}; separator is not 1-sheeted")
    if set(lifted) != X:
        raise LiftError(f"separator {sorted(X)} is not linked by {w.r}-local paths")
    return lifted


def lift_local_separation(w: CoverWindow, s: LocalSeparation, anchor: str) -> LocalSeparation:
    """The lift of s at the separator lift through anchor; sides are preimages of the sides of s."""
    lifted = lift_separator(w, s.X, anchor)
    X_hat = frozenset(lifted.values())
    E1, E2 = set(), set()
    for x_hat in X_hat:
        for y_hat in w.graph.neighbours(x_hat):
            if y_hat in X_hat:
                continue
            e = w.project_edge((x_hat, y_hat))
            if e in s.E1:
                E1.add(make_edge(x_hat, y_hat))
            elif e in s.E2:
                E2.add(make_edge(x_hat, y_hat))
            else:
                raise LiftError(f"boundary edge {x_hat}-{y_hat} projects into the separator {sorted(s.X)}")
    return LocalSeparation(frozenset(E1), X_hat, frozenset(E2))


def project_local_separation(w: CoverWindow, s_hat: LocalSeparation) -> LocalSeparation:
    """p(s_hat); requires the separator to project injectively and to be the lift of its image."""
    X = frozenset(w.projection[x] for x in s_hat.X)
    if len(X) != len(s_hat.X):
        raise LiftError(f"separator {sorted(s_hat.X)} does not project injectively")
    s = LocalSeparation(
        frozenset(w.project_edge(e) for e in s_hat.E1),
        X,
        frozenset(w.project_edge(e) for e in s_hat.E2),
    )
    anchor = min(s_hat.X)
    if lift_separator(w, X, anchor) != {w.projection[x]: x for x in s_hat.X}:
        raise LiftError(f"separator {sorted(s_hat.X)} is not the lift of its projection")
    return s
