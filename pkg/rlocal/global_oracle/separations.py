"""Separations of a graph, their order relation, links and corners."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product

from ..errors import CapExceededError, ContractViolation
from ..graph_core import Graph

logger = logging.getLogger(__name__)

GEQ = "geq"
LEQ = "leq"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


def _key(vertices) -> tuple[str, ...]:
    return tuple(sorted(vertices))


@dataclass(frozen=True)
class Separation:
    """An oriented separation (A, B); the unoriented form is its canonical orientation."""

    A: frozenset[str]
    B: frozenset[str]

    @classmethod
    def of(cls, A, B) -> "Separation":
        return cls(frozenset(str(v) for v in A), frozenset(str(v) for v in B))

    @property
    def separator(self) -> frozenset[str]:
        return self.A & self.B

    @property
    def order(self) -> int:
        return len(self.separator)

    @property
    def small(self) -> frozenset[str]:
        """A \\ B."""
        return self.A - self.B

    @property
    def large(self) -> frozenset[str]:
        """B \\ A."""
        return self.B - self.A

    def inverse(self) -> "Separation":
        return Separation(self.B, self.A)

    def is_proper(self) -> bool:
        return bool(self.small) and bool(self.large)

    def sort_key(self):
        return (self.order, _key(self.separator), _key(self.A), _key(self.B))

    def canonical(self) -> "Separation":
        return min(self, self.inverse(), key=lambda s: (_key(s.A), _key(s.B)))

    def orientations(self) -> tuple["Separation", "Separation"]:
        return (self, self.inverse())

    def is_separation_of(self, g: Graph) -> bool:
        if self.A | self.B != frozenset(g.vertices):
            return False
        return not g.edges_between(self.small, self.large)

    def to_json(self) -> dict:
        return {"A": list(_key(self.A)), "B": list(_key(self.B)), "X": list(_key(self.separator))}

    def __str__(self):
        return f"({','.join(_key(self.A))} | {','.join(_key(self.B))})"


def separation(g: Graph, A, B) -> Separation:
    s = Separation.of(A, B)
    if not s.is_separation_of(g):
        raise ContractViolation(f"{s} is not a separation")
    return s


def is_tight(g: Graph, s: Separation) -> bool:
    X = s.separator
    if not X:
        return False
    components = g.components_without(X)
    tight_in = lambda side: any(K <= side and g.neighbourhood(K) == X for K in components)
    return tight_in(s.small) and tight_in(s.large)


def geq(s: Separation, t: Separation) -> bool:
    return s.A <= t.A and s.B >= t.B


def compare(s: Separation, t: Separation) -> str:
    if s == t:
        return EQUAL
    if geq(s, t):
        return GEQ
    if geq(t, s):
        return LEQ
    return INCOMPARABLE


def is_nested(s: Separation, t: Separation) -> bool:
    return any(geq(a, b) for a in s.orientations() for b in t.orientations())


@dataclass(frozen=True)
class GlobalLinks:
    """Links between {A1, A2} with separator X and {C1, C2} with separator Y.

    ``x_links[i]`` is the X-link for C_{i+1}, ``y_links[i]`` the Y-link for A_{i+1}.
    """

    x_links: tuple[frozenset[str], frozenset[str]]
    y_links: tuple[frozenset[str], frozenset[str]]
    centre: frozenset[str]


def global_links(s: Separation, t: Separation) -> GlobalLinks:
    A, C = (s.A, s.B), (t.A, t.B)
    X, Y = s.separator, t.separator
    return GlobalLinks(
        x_links=(X - C[1], X - C[0]),
        y_links=(Y - A[1], Y - A[0]),
        centre=X & Y,
    )


def _crosses_via_links(s: Separation, t: Separation) -> bool:
    links = global_links(s, t)
    A, C = (s.A, s.B), (t.A, t.B)
    for i, j in product(range(2), repeat=2):
        strict = (A[i] - A[1 - i]) & (C[j] - C[1 - j])
        if not (links.y_links[i] or links.x_links[j] or strict):
            return False
    return True


def cross_global(s: Separation, t: Separation, method: str = "direct") -> bool:
    if method == "direct":
        return not is_nested(s, t)
    if method == "links":
        return _crosses_via_links(s, t)
    raise ValueError(f"unknown crossing method {method!r}")


def corners_global(s: Separation, t: Separation) -> dict[tuple[int, int], Separation]:
    """The four corners keyed by (i, j): the corner (A_i ∩ C_j, A_{3-i} ∪ C_{3-j})."""
    if not cross_global(s, t):
        raise ContractViolation(f"corners need crossing separations, got {s} and {t}")
    A, C = (s.A, s.B), (t.A, t.B)
    return {
        (i + 1, j + 1): Separation(A[i] & C[j], A[1 - i] | C[1 - j])
        for i, j in product(range(2), repeat=2)
    }


def opposite(corner: tuple[int, int]) -> tuple[int, int]:
    return (3 - corner[0], 3 - corner[1])


OPPOSITE_CORNER_PAIRS = (((1, 1), (2, 2)), ((1, 2), (2, 1)))


def separations_at(g: Graph, X, tight_only: bool = True) -> list[Separation]:
    """Every separation with separator X, one per unoriented separation."""
    X = frozenset(X)
    components = g.components_without(X)
    if tight_only:
        components_tight = [g.neighbourhood(K) == X for K in components]
        if sum(components_tight) < 2:
            return []
    found = set()
    for sides in product((0, 1), repeat=len(components)):
        small = frozenset().union(*(K for K, side in zip(components, sides) if side == 0))
        s = Separation(small | X, frozenset(g.vertices) - small)
        if tight_only and not is_tight(g, s):
            continue
        found.add(s.canonical())
    return sorted(found, key=Separation.sort_key)


def enumerate_separations(g: Graph, k: int, tight_only: bool = True, cap: int = 10 ** 7) -> list[Separation]:
    """All (tight) separations of order 1..k, canonical and sorted."""
    g.require_connected()
    found: list[Separation] = []
    candidates = 0
    for size in range(1, k + 1):
        for X in combinations(g.vertices, size):
            candidates += 1
            if candidates > cap:
                raise CapExceededError("candidates", cap, partial=found)
            found.extend(separations_at(g, X, tight_only=tight_only))
    logger.debug("enumerated %d separations of order <= %d", len(found), k)
    return sorted(set(found), key=Separation.sort_key)


def distinguishes(s: Separation, Y, Z) -> bool:
    Y, Z = frozenset(Y), frozenset(Z)
    for a in s.orientations():
        if Y <= a.A and Y & a.small and Z <= a.B and Z & a.large:
            return True
    return False
