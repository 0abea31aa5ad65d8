from .components import (
    LocalComponents,
    RTomPartition,
    is_local_separator,
    is_rtomic,
    is_tight_local_separator,
    local_components,
    local_x_paths,
    r_toms,
    x_arcs,
)
from .separations import (
    DEFAULT_CANDIDATE_CAP,
    LocalSeparation,
    enumerate_tight_local_separations,
    induce_local,
    is_local_separation,
    is_tight_local,
    local_separations_at,
)

__all__ = [
    "LocalComponents",
    "RTomPartition",
    "is_local_separator",
    "is_rtomic",
    "is_tight_local_separator",
    "local_components",
    "local_x_paths",
    "r_toms",
    "x_arcs",
    "DEFAULT_CANDIDATE_CAP",
    "LocalSeparation",
    "enumerate_tight_local_separations",
    "induce_local",
    "is_local_separation",
    "is_tight_local",
    "local_separations_at",
]
