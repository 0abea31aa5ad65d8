"""Local bottlenecks, the pruning fixpoint and the nested set of local separations."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable

from ..global_oracle import build_nested_levels, gfp, satisfies_rule
from ..global_oracle.tstars import DEFAULT_TSTAR_CAP
from ..graph_core import Graph
from ..local_separations import (
    DEFAULT_CANDIDATE_CAP,
    LocalSeparation,
    enumerate_tight_local_separations,
    is_tight_local,
)
from ..local_structure import cross_local
from .guarantee import displacement_lower_bound, guarantee_bound, within_guarantee
from .tstars import enumerate_relevant_local_tstars

logger = logging.getLogger(__name__)

DEFAULT_BRANCH_CAP = 500


@dataclass(frozen=True)
class LocalBottleneck:
    separations: frozenset[LocalSeparation]
    order: int

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "separations": [s.to_json() for s in sorted(self.separations, key=LocalSeparation.sort_key)],
        }


@dataclass
class MinimalBottlenecks:
    """Result of the branch search; ``partial`` is set when the branch cap cut it short."""

    bottlenecks: list[LocalBottleneck] = field(default_factory=list)
    partial: bool = False

    def __iter__(self):
        return iter(self.bottlenecks)

    def __len__(self):
        return len(self.bottlenecks)


@dataclass
class NestedLocalSet:
    r: int
    kmax: int
    levels: dict[int, list[LocalSeparation]] = field(default_factory=dict)
    crossing_counts: dict[int, dict[LocalSeparation, int]] = field(default_factory=dict)
    beyond_guarantee: bool = False

    @property
    def union(self) -> list[LocalSeparation]:
        return [s for k in sorted(self.levels) for s in self.levels[k]]

    def up_to(self, k: int) -> list[LocalSeparation]:
        return [s for level in sorted(self.levels) if level <= k for s in self.levels[level]]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "kmax": self.kmax,
            "beyond_guarantee": self.beyond_guarantee,
            "levels": {str(k): [s.to_json() for s in level] for k, level in sorted(self.levels.items())},
        }


def partner_pairs_local(
    g: Graph, r: int, k: int, bases: Iterable[LocalSeparation], cap: int = DEFAULT_TSTAR_CAP
) -> dict:
    """For every base, the other two constituents of each relevant local T-star based at it."""
    pairs = {}
    for base in bases:
        base = base.canonical()
        pairs[base] = sorted(
            {
                (sigma.constituents[1].canonical(), sigma.constituents[2].canonical())
                for sigma in enumerate_relevant_local_tstars(g, r, k, base, cap=cap)
            },
            key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()),
        )
    return pairs


def local_bottleneck_check(
    g: Graph, r: int, beta: Iterable[LocalSeparation], k: int, cap: int = DEFAULT_TSTAR_CAP
) -> bool:
    members = frozenset(s.canonical() for s in beta)
    if not members:
        return False
    if any(s.order != k or not is_tight_local(g, r, s) for s in members):
        return False
    return satisfies_rule(members, partner_pairs_local(g, r, k, members, cap=cap))


def gfp_bottleneck(
    g: Graph,
    r: int,
    k: int,
    S: Iterable[LocalSeparation],
    forbidden: Iterable[LocalSeparation] = (),
    pairs: dict | None = None,
    cap: int = DEFAULT_TSTAR_CAP,
) -> frozenset[LocalSeparation]:
    """Largest (B_r)-closed subset of S avoiding forbidden; it contains every such bottleneck."""
    forbidden = frozenset(s.canonical() for s in forbidden)
    candidates = [s.canonical() for s in S if s.canonical() not in forbidden]
    if pairs is None:
        pairs = partner_pairs_local(g, r, k, candidates, cap=cap)
    return gfp(candidates, pairs)


def minimal_bottlenecks(
    g: Graph,
    r: int,
    k: int,
    cap: int = DEFAULT_BRANCH_CAP,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    tstar_cap: int = DEFAULT_TSTAR_CAP,
) -> MinimalBottlenecks:
    """Inclusion-minimal k-bottlenecks, grown by closure from each single tight separation."""
    S = [s for s in enumerate_tight_local_separations(g, r, k, cap=candidate_cap) if s.order == k]
    pairs = partner_pairs_local(g, r, k, S, cap=tstar_cap)
    available = frozenset(S)
    closed: set[frozenset[LocalSeparation]] = set()
    branches = 0
    partial_result = False
    for seed in S:
        stack = [frozenset([seed])]
        while stack:
            branches += 1
            if branches > cap:
                partial_result = True
                break
            members = stack.pop()
            if any(found <= members for found in closed):
                continue
            violation = next(
                ((a, b) for s in sorted(members, key=LocalSeparation.sort_key) for a, b in pairs.get(s, ())
                 if a not in members and b not in members),
                None,
            )
            if violation is None:
                closed.add(members)
                continue
            for partner in violation:
                if partner in available:
                    stack.append(members | {partner})
        if partial_result:
            break
    minimal = [c for c in closed if not any(other < c for other in closed)]
    minimal.sort(key=lambda c: (len(c), sorted(s.sort_key() for s in c)))
    if partial_result:
        logger.warning("branch cap of %d reached; minimal bottleneck list is incomplete", cap)
    return MinimalBottlenecks([LocalBottleneck(c, k) for c in minimal], partial=partial_result)


def nested_set_local(
    g: Graph,
    r: int,
    kmax: int,
    delta=None,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    tstar_cap: int = DEFAULT_TSTAR_CAP,
) -> NestedLocalSet:
    """The levels N_r^k for k = 1..kmax.

    ``delta`` is the displacement of the r-local cover when known; otherwise a
    lower bound from induced cycles decides whether kmax lies within the
    guarantee.
    """
    g.require_connected()
    if delta is None:
        delta = displacement_lower_bound(g, r)
    beyond = not within_guarantee(kmax, delta, r)
    if beyond:
        logger.warning(
            "kmax=%d is beyond the K(G,r) guarantee (K >= %s); continuing", kmax, guarantee_bound(delta, r)
        )
    tight = enumerate_tight_local_separations(g, r, kmax, cap=candidate_cap)
    by_level = {k: [s for s in tight if s.order == k] for k in range(1, kmax + 1)}
    levels = build_nested_levels(
        by_level,
        lambda k, S: partner_pairs_local(g, r, k, S, cap=tstar_cap),
        partial(cross_local, g, r),
    )
    return NestedLocalSet(
        r=r,
        kmax=kmax,
        levels=levels.levels,
        crossing_counts=levels.crossing_counts,
        beyond_guarantee=beyond,
    )
