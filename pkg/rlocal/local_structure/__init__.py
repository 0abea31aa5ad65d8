from .links import (
    Coupling,
    LinkReport,
    alternates,
    cross_local,
    links,
    local_corner,
    local_geq,
    r_coupled,
)

__all__ = [
    "Coupling",
    "LinkReport",
    "alternates",
    "cross_local",
    "links",
    "local_corner",
    "local_geq",
    "r_coupled",
]
