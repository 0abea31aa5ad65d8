"""Bottlenecks, the pruning fixpoint and the levelled nested-set construction.

The fixpoint and level builder are written against plain hashable members so
that the local construction reuses them unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from ..errors import ContractViolation
from ..graph_core import Graph
from .separations import Separation, cross_global, distinguishes, enumerate_separations, is_tight
from .tstars import DEFAULT_TSTAR_CAP, enumerate_relevant_tstars

logger = logging.getLogger(__name__)

PartnerPairs = Mapping[Hashable, Sequence[tuple[Hashable, Hashable]]]


@dataclass(frozen=True)
class GlobalBottleneck:
    separations: frozenset[Separation]
    order: int


def partner_pairs_global(g: Graph, k: int, bases: Iterable[Separation], cap: int = DEFAULT_TSTAR_CAP) -> dict:
    """For every base, the other two constituents of each relevant T-star based at it."""
    pairs = {}
    for base in bases:
        base = base.canonical()
        pairs[base] = sorted(
            {
                (sigma.constituents[1].canonical(), sigma.constituents[2].canonical())
                for sigma in enumerate_relevant_tstars(g, k, base, cap=cap)
            },
            key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()),
        )
    return pairs


def satisfies_rule(members: frozenset, pairs: PartnerPairs) -> bool:
    """Every member keeps a partner from each of its T-stars inside members."""
    return all(a in members or b in members for s in members for a, b in pairs.get(s, ()))


def gfp(candidates: Iterable[Hashable], pairs: PartnerPairs) -> frozenset:
    """Largest subset closed under the bottleneck rule; every bottleneck inside candidates lies in it."""
    alive = set(candidates)
    changed = True
    while changed:
        changed = False
        for s in list(alive):
            if any(a not in alive and b not in alive for a, b in pairs.get(s, ())):
                alive.discard(s)
                changed = True
    return frozenset(alive)


def bottleneck_check_global(g: Graph, beta: Iterable[Separation], k: int, cap: int = DEFAULT_TSTAR_CAP) -> bool:
    members = frozenset(s.canonical() for s in beta)
    if not members:
        return False
    if any(s.order != k or not is_tight(g, s) for s in members):
        return False
    return satisfies_rule(members, partner_pairs_global(g, k, members, cap=cap))


def clique_pair_bottleneck(g: Graph, Y, Z) -> GlobalBottleneck:
    """The separations distinguishing two cliques with minimum order."""
    Y, Z = frozenset(map(str, Y)), frozenset(map(str, Z))
    for clique in (Y, Z):
        if any(not g.has_edge(u, v) for u, v in combinations(sorted(clique), 2)):
            raise ContractViolation(f"{sorted(clique)} is not a clique")
    bound = min(len(Y), len(Z))
    for k in range(1, bound):
        found = [s for s in enumerate_separations(g, k, tight_only=False) if s.order == k and distinguishes(s, Y, Z)]
        if found:
            return GlobalBottleneck(frozenset(found), k)
    raise ContractViolation(f"no separation of order < {bound} distinguishes the two cliques")


@dataclass
class NestedLevels:
    """Per-level members of the nested set together with the crossing counts used."""

    levels: dict[int, list] = field(default_factory=dict)
    crossing_counts: dict[int, dict] = field(default_factory=dict)

    @property
    def union(self) -> list:
        return [s for k in sorted(self.levels) for s in self.levels[k]]


def build_nested_levels(
    tight_by_level: Mapping[int, Sequence],
    pairs_for_level: Callable[[int, Sequence], PartnerPairs],
    crosses: Callable[[Hashable, Hashable], bool],
) -> NestedLevels:
    """Level k keeps each s nested with lower levels that survives gfp(S_k minus B_s).

    B_s holds the candidates with strictly fewer crossings than s inside the
    union of all k-bottlenecks.
    """
    result = NestedLevels()
    lower: list = []
    for k in sorted(tight_by_level):
        S = list(tight_by_level[k])
        pairs = pairs_for_level(k, S)
        in_bottlenecks = gfp(S, pairs)
        ordered = [s for s in S if s in in_bottlenecks]
        counts = {s: sum(1 for t in ordered if t != s and crosses(s, t)) for s in ordered}
        nested_with_lower = [s for s in ordered if not any(crosses(s, t) for t in lower)]
        level = []
        for s in nested_with_lower:
            fewer = {t for t in nested_with_lower if counts[t] < counts[s]}
            if s in gfp((t for t in S if t not in fewer), pairs):
                level.append(s)
        logger.info("level %d: %d tight, %d in bottlenecks, %d kept", k, len(S), len(ordered), len(level))
        result.levels[k] = level
        result.crossing_counts[k] = counts
        lower.extend(level)
    return result


def nested_set_global(g: Graph, kmax: int, cap: int = DEFAULT_TSTAR_CAP) -> NestedLevels:
    g.require_connected()
    tight = enumerate_separations(g, kmax)
    by_level = {k: [s for s in tight if s.order == k] for k in range(1, kmax + 1)}
    return build_nested_levels(
        by_level,
        lambda k, S: partner_pairs_global(g, k, S, cap=cap),
        cross_global,
    )
