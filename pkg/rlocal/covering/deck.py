"""Deck transformations of a window and folding of its decompositions by deck orbits."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from ..errors import WindowInsufficientError
from ..graph_core import DecompositionEdge, GraphDecomposition, Part, make_edge, node_id
from ..local_separations import LocalSeparation
from .lifting import project_local_separation
from .window import CoverWindow

logger = logging.getLogger(__name__)


def deck_map(w: CoverWindow, target: str) -> dict[str, str]:
    """Partial deck transformation sending the basepoint to target, by simultaneous path lifting.

    Nodes whose image would leave the window are left out.
    """
    if w.projection[target] != w.projection[w.basepoint]:
        raise ValueError(f"{target} does not lie over the basepoint")
    image = {w.basepoint: target}
    queue = deque([w.basepoint])
    while queue:
        n = queue.popleft()
        for m in sorted(w.graph.neighbours(n)):
            if m in image:
                continue
            mapped = w.neighbour_over(image[n], w.projection[m])
            if mapped is not None:
                image[m] = mapped
                queue.append(m)
    return image


def deck_defects(w: CoverWindow, image: dict[str, str]) -> list[str]:
    """Ways in which image fails to be an isomorphism on the clean ball; empty for a deck map."""
    radius = w.clean_radius
    defects = []
    inverse: dict[str, str] = {}
    for a, b in sorted(image.items()):
        if b in inverse:
            defects.append(f"{inverse[b]} and {a} both map to {b}")
        else:
            inverse[b] = a

    def inside(*nodes):
        return all(w.depth[n] <= radius for n in nodes)

    for a, b in w.graph.edges:
        if a in image and b in image and inside(a, b, image[a], image[b]):
            if not w.graph.has_edge(image[a], image[b]):
                defects.append(f"edge {a}-{b} maps to the non-edge {image[a]}-{image[b]}")
        if a in inverse and b in inverse and inside(a, b, inverse[a], inverse[b]):
            if not w.graph.has_edge(inverse[a], inverse[b]):
                defects.append(f"non-edge {inverse[a]}-{inverse[b]} maps to the edge {a}-{b}")
    return defects


@dataclass
class DeckOrbitMap:
    """Orbits are the fibres of p; generators are deck maps at lifts of the basepoint."""

    window: CoverWindow
    generators: dict[str, dict[str, str]] = field(default_factory=dict)

    def vertex_orbit(self, node: str) -> str:
        return self.window.projection[node]

    def edge_orbit(self, e):
        return self.window.project_edge(e)

    def translates(self, s_hat: LocalSeparation, radius: int) -> list[LocalSeparation | None]:
        """Image of s_hat under every generator; None where the image leaves the window or the radius."""
        return [_translate(self.window, image, s_hat, radius) for _, image in sorted(self.generators.items())]


def _translate(w: CoverWindow, image: dict[str, str], s_hat: LocalSeparation, radius: int):
    if any(x not in image or w.depth[image[x]] > radius for x in s_hat.X):
        return None
    sides = []
    for side in (s_hat.E1, s_hat.E2):
        mapped = set()
        for u, v in side:
            if u not in image or v not in image or not w.graph.has_edge(image[u], image[v]):
                return None
            mapped.add(make_edge(image[u], image[v]))
        sides.append(frozenset(mapped))
    return LocalSeparation(sides[0], frozenset(image[x] for x in s_hat.X), sides[1])


def deck_orbits(w: CoverWindow) -> DeckOrbitMap:
    generators = {}
    for target in w.lifts(w.projection[w.basepoint], w.certified_radius):
        image = deck_map(w, target)
        defects = deck_defects(w, image)
        if defects:
            raise WindowInsufficientError(f"deck map to {target} is not an isomorphism: {defects[0]}")
        generators[target] = image
    return DeckOrbitMap(w, generators)


def check_deck_invariant(w: CoverWindow, t_hat: GraphDecomposition, orbits: DeckOrbitMap) -> None:
    """Every translate of an edge label that stays in the certified ball is again an edge label."""
    radius = w.certified_radius
    labels = {e.label.canonical() for e in t_hat.edges}
    for s_hat in sorted(labels, key=LocalSeparation.sort_key):
        if any(w.depth[x] > radius for x in s_hat.X):
            continue
        for moved in orbits.translates(s_hat, radius):
            if moved is not None and moved.canonical() not in labels:
                raise WindowInsufficientError(f"labels are not closed under the deck action: {moved} is missing")


def _project_part(w: CoverWindow, part: Part) -> Part:
    return Part(
        frozenset(w.projection[v] for v in part.vertices),
        frozenset(w.project_edge(e) for e in part.edges),
    )


def fold_tree_decomposition(
    w: CoverWindow, t_hat: GraphDecomposition, orbits: DeckOrbitMap, radius: int | None = None
) -> GraphDecomposition:
    """Orbit graph of a decomposition of the window; nodes whose part leaves the radius are dropped."""
    check_deck_invariant(w, t_hat, orbits)
    radius = w.certified_radius if radius is None else radius
    kept = {
        node for node, part in t_hat.parts.items()
        if all(w.depth[v] <= radius for v in part.vertices)
    }
    orbit_of, parts, members = {}, {}, {}
    for node in sorted(kept):
        projected = tuple(
            sorted({project_local_separation(w, s) for s in t_hat.members[node]}, key=lambda s: s.sort_key())
        )
        orbit = node_id([str(s) for s in projected])
        part = _project_part(w, t_hat.parts[node])
        if orbit in parts and parts[orbit] != part:
            raise WindowInsufficientError(f"nodes of orbit {orbit} carry different parts; enlarge the window")
        orbit_of[node] = orbit
        parts[orbit] = part
        members[orbit] = projected
    folded: dict = {}
    for e in t_hat.edges:
        if e.u not in kept or e.v not in kept:
            continue
        s = project_local_separation(w, e.label)
        label = s.canonical()
        u, v = orbit_of[e.u], orbit_of[e.v]
        if s != label:
            u, v = v, u
        if label in folded and folded[label] != (u, v):
            raise WindowInsufficientError(f"orbit of {label} joins different nodes; enlarge the window")
        folded[label] = (u, v)
    edges = [
        DecompositionEdge(f"e{i}", u, v, label)
        for i, (label, (u, v)) in enumerate(sorted(folded.items(), key=lambda item: item[0].sort_key()))
    ]
    logger.debug("folded %d window nodes into %d orbits", len(kept), len(parts))
    return GraphDecomposition(parts=dict(sorted(parts.items())), edges=edges, members=members)
