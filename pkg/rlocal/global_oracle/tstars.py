"""T-stars of separations: construction, relevance and enumeration by base."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product

from ..errors import CapExceededError, ContractViolation
from ..graph_core import Graph
from .separations import Separation, corners_global, is_tight

logger = logging.getLogger(__name__)

DEFAULT_TSTAR_CAP = 200_000


@dataclass(frozen=True)
class TStar:
    constituents: tuple[Separation, Separation, Separation]

    @property
    def separators(self) -> tuple[frozenset[str], ...]:
        return tuple(s.separator for s in self.constituents)

    @property
    def union(self) -> frozenset[str]:
        return frozenset().union(*self.separators)

    @property
    def centre(self) -> frozenset[str]:
        X1, X2, X3 = self.separators
        return X1 & X2 & X3

    def link(self, i: int, j: int) -> frozenset[str]:
        """The ij-link (X_i ∩ X_j) \\ Z for indices in 1..3."""
        X = self.separators
        return (X[i - 1] & X[j - 1]) - self.centre

    def based_at(self, position: int) -> "TStar":
        """Reorder so that the constituent at ``position`` (0-based) comes first."""
        rest = [s for i, s in enumerate(self.constituents) if i != position]
        return TStar((self.constituents[position], *rest))


def tstar(g: Graph, constituents) -> TStar:
    """Build a T-star, checking distinctness and both axioms."""
    constituents = tuple(constituents)
    if len(constituents) != 3 or len(set(constituents)) != 3:
        raise ContractViolation("a T-star has three distinct oriented separations")
    sigma = TStar(constituents)
    outside = frozenset(g.vertices) - sigma.union
    smalls = [s.small for s in constituents]
    if any(a & b for a, b in combinations(smalls, 2)) or frozenset().union(*smalls) != outside:
        raise ContractViolation("strict small sides do not near-partition the complement of the separators")
    X = sigma.separators
    for i, Xi in enumerate(X):
        others = frozenset().union(*(Xj for j, Xj in enumerate(X) if j != i))
        if not Xi <= others:
            raise ContractViolation(f"separator vertices {sorted(Xi - others)} lie in only one separator")
    return sigma


def _relevant_as_ordered(g: Graph, sigma: TStar) -> bool:
    base = sigma.constituents[0]
    if not is_tight(g, base):
        return False
    Z = sigma.centre
    for x in sigma.link(2, 3):
        for i in (2, 3):
            X1i = sigma.link(1, i)
            if g.neighbours(x) & X1i:
                continue
            strict = sigma.constituents[i - 1].small
            components = g.components_without(frozenset(g.vertices) - strict)
            if not any(x in g.neighbourhood(K) and g.neighbourhood(K) & (X1i | Z) for K in components):
                return False
    return True


def relevant_tstar_check(g: Graph, sigma: TStar, base: Separation) -> bool:
    """Whether sigma is relevant with the given (unoriented) base."""
    positions = [i for i, s in enumerate(sigma.constituents) if s.canonical() == base.canonical()]
    if not positions:
        raise ContractViolation(f"{base} is not a constituent of the T-star")
    return any(_relevant_as_ordered(g, sigma.based_at(i)) for i in positions)


def corner_tstar(g: Graph, s: Separation, t: Separation) -> TStar:
    """(A,B) together with the two corners on its B-side."""
    corners = corners_global(s, t)
    return tstar(g, (s, corners[(2, 1)], corners[(2, 2)]))


def splits_of(X1: frozenset[str]):
    """Every way to label the vertices of X1 as in X12, in X13 or in the centre."""
    ordered = sorted(X1)
    for labels in product("23z", repeat=len(ordered)):
        yield tuple(
            frozenset(v for v, label in zip(ordered, labels) if label == want) for want in "23z"
        )


def enumerate_relevant_tstars(
    g: Graph, k: int, base: Separation, cap: int = DEFAULT_TSTAR_CAP
) -> list[TStar]:
    """All relevant T-stars of order <= k with base as first constituent, either orientation."""
    if not is_tight(g, base):
        raise ContractViolation(f"base {base} is not tight")
    V = frozenset(g.vertices)
    found: list[TStar] = []
    for oriented in base.orientations():
        X1 = oriented.separator
        S1 = oriented.small
        room = V - X1 - S1
        for X12, X13, Z in splits_of(X1):
            budget = k - len(Z) - max(len(X12), len(X13))
            for size in range(0, budget + 1):
                for W in combinations(sorted(room), size):
                    W = frozenset(W)
                    X2, X3 = W | X12 | Z, W | X13 | Z
                    if not X2 or not X3:
                        continue
                    X = X1 | W
                    components = [K for K in g.components_without(X) if not K <= S1]
                    fixed2, fixed3, free = [], [], []
                    for K in components:
                        N = g.neighbourhood(K)
                        if N <= X2 and N <= X3:
                            free.append(K)
                        elif N <= X2:
                            fixed2.append(K)
                        elif N <= X3:
                            fixed3.append(K)
                        else:
                            break
                    else:
                        for sides in product((2, 3), repeat=len(free)):
                            S2 = frozenset().union(*fixed2, *(K for K, c in zip(free, sides) if c == 2))
                            S3 = frozenset().union(*fixed3, *(K for K, c in zip(free, sides) if c == 3))
                            second = Separation(S2 | X2, V - S2)
                            third = Separation(S3 | X3, V - S3)
                            if len({oriented, second, third}) < 3:
                                continue
                            sigma = TStar((oriented, second, third))
                            if _relevant_as_ordered(g, sigma):
                                found.append(sigma)
                                if len(found) > cap:
                                    raise CapExceededError("tstars", cap, partial=found)
    logger.debug("%d relevant T-stars based at %s", len(found), base)
    return found
