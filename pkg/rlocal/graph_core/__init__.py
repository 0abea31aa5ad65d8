from .graph import Edge, Graph, make_edge, load_graph, load_source, to_edge_list
from .walks import Walk
from .cycles import (
    ShortCycleSet,
    short_cycles,
    canonical_cycle,
    cycle_edges,
    min_induced_cycle_longer_than,
    short_cycles_generate_cycle_space,
    gf2_rank,
)
from .components import componental_cuts, tight_components
from .fixtures import FIXTURES, fixture, glue_ring
from .decomposition_graph import (
    DecompositionEdge,
    GraphDecomposition,
    Part,
    ValidationReport,
    contract,
    decompositions_isomorphic,
    node_id,
    validate_decomposition,
)

__all__ = [
    "Edge",
    "Graph",
    "make_edge",
    "load_graph",
    "load_source",
    "to_edge_list",
    "Walk",
    "ShortCycleSet",
    "short_cycles",
    "canonical_cycle",
    "cycle_edges",
    "min_induced_cycle_longer_than",
    "short_cycles_generate_cycle_space",
    "gf2_rank",
    "componental_cuts",
    "tight_components",
    "FIXTURES",
    "fixture",
    "glue_ring",
    "DecompositionEdge",
    "GraphDecomposition",
    "Part",
    "ValidationReport",
    "contract",
    "decompositions_isomorphic",
    "node_id",
    "validate_decomposition",
]
