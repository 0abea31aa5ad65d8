from .cutouts import Cutout, GlobalView, LocalView, cutouts, part, restricted_right_side, view_for
from .builder import build_decomposition, canonicity_check, decompose, image, labels_above
from .export import decomposition_to_dot, decomposition_to_json, dumps

__all__ = [
    "Cutout",
    "GlobalView",
    "LocalView",
    "cutouts",
    "part",
    "restricted_right_side",
    "view_for",
    "build_decomposition",
    "canonicity_check",
    "decompose",
    "image",
    "labels_above",
    "decomposition_to_dot",
    "decomposition_to_json",
    "dumps",
]
