"""Guarding grids of axis-parallel segments with mobile guards.

Usage:
    Import functions from `grid_guarding` directly, e.g. `from domcover.core.grid_guarding import is_extremal`.

"""

from domcover.core.grid_guarding.extremal import is_extremal, min_patrolling_set
from domcover.core.grid_guarding.generators import grid_to_text, random_grid
from domcover.core.grid_guarding.segments import segments_from_decimals, validate_grid
from domcover.core.grid_guarding.sweep import (
    intersection_graph,
    naive_intersection_edges,
    sweep_edges,
)

__all__ = [
    "grid_to_text",
    "intersection_graph",
    "is_extremal",
    "min_patrolling_set",
    "naive_intersection_edges",
    "random_grid",
    "segments_from_decimals",
    "sweep_edges",
    "validate_grid",
]
