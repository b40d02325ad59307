"""Trees whose domination number equals their smaller side, built and recognized.

Usage:
    Import functions from `tree_family` directly, e.g. `from domcover.core.tree_family import deconstruct`.

"""

from domcover.core.tree_family.deconstruct import check_tree_conditions, deconstruct
from domcover.core.tree_family.operations import apply_operation, generate_tmax
from domcover.core.tree_family.scripts import replay_script, script_from_text, script_to_text
from domcover.core.tree_family.tree_dp import (
    as_tree,
    forest_gamma,
    gamma_minus_critical_vertices,
    tree_gamma,
)

__all__ = [
    "apply_operation",
    "as_tree",
    "check_tree_conditions",
    "deconstruct",
    "forest_gamma",
    "gamma_minus_critical_vertices",
    "generate_tmax",
    "replay_script",
    "script_from_text",
    "script_to_text",
    "tree_gamma",
]
