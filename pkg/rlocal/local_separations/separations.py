"""r-local separations {E1, X, E2} and their enumeration."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product

from ..errors import CapExceededError
from ..global_oracle import Separation
from ..graph_core import Edge, Graph, make_edge
from .components import LocalComponents, local_components

logger = logging.getLogger(__name__)

DEFAULT_CANDIDATE_CAP = 10 ** 7
MAX_CLASSES = 24


def _edges_key(edges) -> tuple[Edge, ...]:
    return tuple(sorted(edges))


@dataclass(frozen=True)
class LocalSeparation:
    """An oriented r-local separation (E1, X, E2); E1 is its left side L, E2 its right side R."""

    E1: frozenset[Edge]
    X: frozenset[str]
    E2: frozenset[Edge]

    @classmethod
    def of(cls, E1, X, E2) -> "LocalSeparation":
        return cls(
            frozenset(make_edge(*e) for e in E1),
            frozenset(str(x) for x in X),
            frozenset(make_edge(*e) for e in E2),
        )

    @classmethod
    def from_json(cls, data: dict) -> "LocalSeparation":
        return cls.of(data["E1"], data["X"], data["E2"])

    @property
    def order(self) -> int:
        return len(self.X)

    @property
    def boundary(self) -> frozenset[Edge]:
        return self.E1 | self.E2

    def inverse(self) -> "LocalSeparation":
        return LocalSeparation(self.E2, self.X, self.E1)

    def orientations(self) -> tuple["LocalSeparation", "LocalSeparation"]:
        return (self, self.inverse())

    def canonical(self) -> "LocalSeparation":
        """The orientation whose E1 holds the smallest boundary edge."""
        if self.E2 and (not self.E1 or min(self.E2) < min(self.E1)):
            return self.inverse()
        return self

    def sort_key(self):
        return (self.order, tuple(sorted(self.X)), _edges_key(self.E1), _edges_key(self.E2))

    def to_json(self) -> dict:
        return {
            "X": sorted(self.X),
            "E1": [list(e) for e in _edges_key(self.E1)],
            "E2": [list(e) for e in _edges_key(self.E2)],
        }

    def __str__(self):
        side = lambda edges: " ".join(f"{u}-{v}" for u, v in _edges_key(edges))
        return f"({side(self.E1)} | {','.join(sorted(self.X))} | {side(self.E2)})"


def is_local_separation(g: Graph, r: int, s: LocalSeparation) -> bool:
    if s.E1 & s.E2 or s.boundary != g.boundary(s.X):
        return False
    return all(cls <= s.E1 or cls <= s.E2 for cls in local_components(g, r, s.X).classes)


def is_tight_local(g: Graph, r: int, s: LocalSeparation, components: LocalComponents | None = None) -> bool:
    components = components or local_components(g, r, s.X)
    tight = components.tight_classes
    return any(cls <= s.E1 for cls in tight) and any(cls <= s.E2 for cls in tight)


def induce_local(g: Graph, s: Separation) -> LocalSeparation:
    """The r-local separation with sides E(A \\ X, X) and E(B \\ X, X)."""
    X = s.separator
    return LocalSeparation(g.edges_between(s.small, X), X, g.edges_between(s.large, X))


def local_separations_at(g: Graph, r: int, X, tight_only: bool = True) -> list[LocalSeparation]:
    """Every r-local separation with separator X, in canonical orientation."""
    X = frozenset(X)
    components = local_components(g, r, X)
    if tight_only and sum(components.tight) < 2:
        return []
    classes = components.classes
    if len(classes) > MAX_CLASSES:
        raise CapExceededError("candidates", 2 ** MAX_CLASSES)
    found = []
    if not classes:
        return [] if tight_only else [LocalSeparation(frozenset(), X, frozenset())]
    first, rest = classes[0], classes[1:]
    for sides in product((1, 2), repeat=len(rest)):
        E1 = first.union(*(c for c, side in zip(rest, sides) if side == 1))
        E2 = frozenset().union(*(c for c, side in zip(rest, sides) if side == 2))
        s = LocalSeparation(E1, X, E2)
        if tight_only and not is_tight_local(g, r, s, components):
            continue
        found.append(s.canonical())
    return sorted(found, key=LocalSeparation.sort_key)


def enumerate_tight_local_separations(
    g: Graph, r: int, k: int, cap: int = DEFAULT_CANDIDATE_CAP
) -> list[LocalSeparation]:
    """All tight r-local separations of order 1..k, canonical and sorted."""
    g.require_connected()
    found: list[LocalSeparation] = []
    candidates = 0
    for size in range(1, k + 1):
        for X in combinations(g.vertices, size):
            candidates += 1
            if candidates > cap:
                raise CapExceededError("candidates", cap, partial=found)
            found.extend(local_separations_at(g, r, X))
    logger.debug("enumerated %d tight %d-local separations of order <= %d", len(found), r, k)
    return sorted(found, key=LocalSeparation.sort_key)
