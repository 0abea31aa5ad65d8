from .window import DEFAULT_WINDOW_NODES, CoverWindow, build_cover_window, homology_functionals
from .displacement import EXACT, LOWER_BOUND, Displacement, displacement, displacement_in_window
from .lifting import lift_local_separation, lift_separator, project_local_separation
from .deck import (
    DeckOrbitMap,
    check_deck_invariant,
    deck_defects,
    deck_map,
    deck_orbits,
    fold_tree_decomposition,
)
from .verify import CoverReport, check_clique_lifts, lift_nested_set, verify_main_ii, verify_main_iii
from .ring import RingGraph, ring_generator

__all__ = [
    "DEFAULT_WINDOW_NODES",
    "CoverWindow",
    "build_cover_window",
    "homology_functionals",
    "EXACT",
    "LOWER_BOUND",
    "Displacement",
    "displacement",
    "displacement_in_window",
    "lift_local_separation",
    "lift_separator",
    "project_local_separation",
    "DeckOrbitMap",
    "check_deck_invariant",
    "deck_defects",
    "deck_map",
    "deck_orbits",
    "fold_tree_decomposition",
    "CoverReport",
    "check_clique_lifts",
    "lift_nested_set",
    "verify_main_ii",
    "verify_main_iii",
    "RingGraph",
    "ring_generator",
]
