"""Local T-stars: construction, relevance and enumeration by base."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product

from ..errors import CapExceededError, ContractViolation
from ..global_oracle.tstars import DEFAULT_TSTAR_CAP, splits_of
from ..graph_core import Graph
from ..local_separations import (
    LocalComponents,
    LocalSeparation,
    is_local_separation,
    is_rtomic,
    is_tight_local,
    local_components,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalTStar:
    """Three oriented local separations (E_i, X_i, F_i) whose E_i cover the boundary of X."""

    constituents: tuple[LocalSeparation, LocalSeparation, LocalSeparation]

    @property
    def separators(self) -> tuple[frozenset[str], ...]:
        return tuple(s.X for s in self.constituents)

    @property
    def union(self) -> frozenset[str]:
        return frozenset().union(*self.separators)

    @property
    def centre(self) -> frozenset[str]:
        X1, X2, X3 = self.separators
        return X1 & X2 & X3

    def link(self, i: int, j: int) -> frozenset[str]:
        X = self.separators
        return (X[i - 1] & X[j - 1]) - self.centre

    def based_at(self, position: int) -> "LocalTStar":
        rest = [s for i, s in enumerate(self.constituents) if i != position]
        return LocalTStar((self.constituents[position], *rest))

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.constituents]


def local_tstar(g: Graph, r: int, constituents) -> LocalTStar:
    """Build a local T-star, checking distinctness and the three axioms."""
    constituents = tuple(constituents)
    if len(constituents) != 3 or len(set(constituents)) != 3:
        raise ContractViolation("a local T-star has three distinct oriented separations")
    sigma = LocalTStar(constituents)
    X = sigma.union
    boundary = g.boundary(X)
    sides = [s.E1 for s in constituents]
    for s in constituents:
        if not s.E1 <= g.boundary(s.X):
            raise ContractViolation(f"side of {s} leaves the boundary of its separator")
    if any(a & b for a, b in combinations(sides, 2)) or frozenset().union(*sides) != boundary:
        raise ContractViolation("sides do not near-partition the boundary of the separator union")
    separators = sigma.separators
    for i, Xi in enumerate(separators):
        others = frozenset().union(*(Xj for j, Xj in enumerate(separators) if j != i))
        if not Xi <= others:
            raise ContractViolation(f"separator vertices {sorted(Xi - others)} lie in only one separator")
    for cls in local_components(g, r, X).classes:
        if not any(cls <= side for side in sides):
            raise ContractViolation(f"a {r}-local component at {sorted(X)} is split between sides")
    return sigma


def _touches(cls, vertices) -> bool:
    return any(u in vertices or v in vertices for u, v in cls)


def _relevant_as_ordered(g: Graph, r: int, sigma: LocalTStar, components: LocalComponents | None = None) -> bool:
    base = sigma.constituents[0]
    if not is_tight_local(g, r, base):
        return False
    Z = sigma.centre
    X23 = sigma.link(2, 3)
    if not X23:
        return True
    components = components or local_components(g, r, sigma.union)
    for x in X23:
        for i in (2, 3):
            X1i = sigma.link(1, i)
            if g.neighbours(x) & X1i:
                continue
            E_i = sigma.constituents[i - 1].E1
            if not any(
                cls <= E_i and _touches(cls, {x}) and _touches(cls, X1i | Z) for cls in components.classes
            ):
                return False
    return True


def relevant_local_tstar_check(g: Graph, r: int, sigma: LocalTStar, base: LocalSeparation) -> bool:
    """Whether sigma is relevant with the given (unoriented) base."""
    positions = [i for i, s in enumerate(sigma.constituents) if s.canonical() == base.canonical()]
    if not positions:
        raise ContractViolation(f"{base} is not a constituent of the local T-star")
    relevant = any(_relevant_as_ordered(g, r, sigma.based_at(i)) for i in positions)
    if relevant and not is_rtomic(g, r, sigma.union):
        logger.warning("relevant local T-star with separator union %s is not %d-tomic", sorted(sigma.union), r)
    return relevant


def _assign_classes(components: LocalComponents, E1, X2, X3):
    """Split the classes outside E1 into those forced to side 2, side 3 and the free ones."""
    fixed2, fixed3, free = [], [], []
    for cls in components.classes:
        if cls & E1:
            if not cls <= E1:
                return None
            continue
        ends = components.ends_in_X(cls)
        if ends <= X2 and ends <= X3:
            free.append(cls)
        elif ends <= X2:
            fixed2.append(cls)
        elif ends <= X3:
            fixed3.append(cls)
        else:
            return None
    return fixed2, fixed3, free


def enumerate_relevant_local_tstars(
    g: Graph, r: int, k: int, base: LocalSeparation, cap: int = DEFAULT_TSTAR_CAP
) -> list[LocalTStar]:
    """All relevant local T-stars of order <= k with base as first constituent, either orientation."""
    if not is_tight_local(g, r, base):
        raise ContractViolation(f"base {base} is not tight")
    if base.order > k:
        raise ContractViolation(f"base {base} has order above {k}")
    V = frozenset(g.vertices)
    found: list[LocalTStar] = []
    for oriented in base.orientations():
        X1, E1 = oriented.X, oriented.E1
        blocked = X1 | frozenset(v for e in E1 for v in e)
        room = sorted(V - blocked)
        for X12, X13, Z in splits_of(X1):
            budget = k - len(Z) - max(len(X12), len(X13))
            for size in range(0, budget + 1):
                for W in combinations(room, size):
                    W = frozenset(W)
                    X = X1 | W
                    if not is_rtomic(g, r, X):
                        continue
                    X2, X3 = W | X12 | Z, W | X13 | Z
                    if not X2 or not X3:
                        continue
                    components = local_components(g, r, X)
                    assignment = _assign_classes(components, E1, X2, X3)
                    if assignment is None:
                        continue
                    fixed2, fixed3, free = assignment
                    for sides in product((2, 3), repeat=len(free)):
                        E2 = frozenset().union(*fixed2, *(c for c, side in zip(free, sides) if side == 2))
                        E3 = frozenset().union(*fixed3, *(c for c, side in zip(free, sides) if side == 3))
                        second = LocalSeparation(E2, X2, g.boundary(X2) - E2)
                        third = LocalSeparation(E3, X3, g.boundary(X3) - E3)
                        if len({oriented, second, third}) < 3:
                            continue
                        if not (is_local_separation(g, r, second) and is_local_separation(g, r, third)):
                            continue
                        sigma = LocalTStar((oriented, second, third))
                        if _relevant_as_ordered(g, r, sigma, components):
                            found.append(sigma)
                            if len(found) > cap:
                                raise CapExceededError("tstars", cap, partial=found)
    logger.debug("%d relevant local T-stars based at %s", len(found), base)
    return found
