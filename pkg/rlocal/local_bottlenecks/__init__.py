from .tstars import (
    LocalTStar,
    enumerate_relevant_local_tstars,
    local_tstar,
    relevant_local_tstar_check,
)
from .bottlenecks import (
    DEFAULT_BRANCH_CAP,
    LocalBottleneck,
    MinimalBottlenecks,
    NestedLocalSet,
    gfp_bottleneck,
    local_bottleneck_check,
    minimal_bottlenecks,
    nested_set_local,
    partner_pairs_local,
)
from .guarantee import displacement_lower_bound, f, guarantee_bound, within_guarantee

__all__ = [
    "LocalTStar",
    "enumerate_relevant_local_tstars",
    "local_tstar",
    "relevant_local_tstar_check",
    "DEFAULT_BRANCH_CAP",
    "LocalBottleneck",
    "MinimalBottlenecks",
    "NestedLocalSet",
    "gfp_bottleneck",
    "local_bottleneck_check",
    "minimal_bottlenecks",
    "nested_set_local",
    "partner_pairs_local",
    "displacement_lower_bound",
    "f",
    "guarantee_bound",
    "within_guarantee",
]
