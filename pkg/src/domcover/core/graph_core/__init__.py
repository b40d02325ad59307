"""Graph representation, construction and structural queries.

Usage:
    Import functions from `graph_core` directly, e.g. `from domcover.core.graph_core import build_graph`.

"""

from domcover.core.graph_core.graph import (
    build_graph,
    closed_neighborhood_of_set,
    components,
    delete_vertices,
    diameter,
    distance,
    from_networkx,
    is_connected,
    min_degree,
    neighborhood_of_set,
    to_networkx,
)
from domcover.core.graph_core.structure import (
    bipartition,
    is_corona,
    is_cycle4,
    structural_marks,
    two_coloring,
)

__all__ = [
    "bipartition",
    "build_graph",
    "closed_neighborhood_of_set",
    "components",
    "delete_vertices",
    "diameter",
    "distance",
    "from_networkx",
    "is_connected",
    "is_corona",
    "is_cycle4",
    "min_degree",
    "neighborhood_of_set",
    "structural_marks",
    "to_networkx",
    "two_coloring",
]
