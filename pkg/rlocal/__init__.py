"""Canonical graph-decompositions built from r-local separations."""

__version__ = "0.1.0"
