from .separations import (
    EQUAL,
    GEQ,
    INCOMPARABLE,
    LEQ,
    OPPOSITE_CORNER_PAIRS,
    GlobalLinks,
    Separation,
    compare,
    corners_global,
    cross_global,
    distinguishes,
    enumerate_separations,
    geq,
    global_links,
    is_nested,
    is_tight,
    opposite,
    separation,
    separations_at,
)
from .tstars import TStar, corner_tstar, enumerate_relevant_tstars, relevant_tstar_check, tstar
from .bottlenecks import (
    GlobalBottleneck,
    NestedLevels,
    bottleneck_check_global,
    build_nested_levels,
    clique_pair_bottleneck,
    gfp,
    nested_set_global,
    partner_pairs_global,
    satisfies_rule,
)
from .tree import interior, splitting_stars, strictly_greater, tree_decomposition

__all__ = [
    "EQUAL",
    "GEQ",
    "INCOMPARABLE",
    "LEQ",
    "OPPOSITE_CORNER_PAIRS",
    "GlobalLinks",
    "Separation",
    "compare",
    "corners_global",
    "cross_global",
    "distinguishes",
    "enumerate_separations",
    "geq",
    "global_links",
    "is_nested",
    "is_tight",
    "opposite",
    "separation",
    "separations_at",
    "TStar",
    "corner_tstar",
    "enumerate_relevant_tstars",
    "relevant_tstar_check",
    "tstar",
    "GlobalBottleneck",
    "NestedLevels",
    "bottleneck_check_global",
    "build_nested_levels",
    "clique_pair_bottleneck",
    "gfp",
    "nested_set_global",
    "partner_pairs_global",
    "satisfies_rule",
    "interior",
    "splitting_stars",
    "strictly_greater",
    "tree_decomposition",
]
