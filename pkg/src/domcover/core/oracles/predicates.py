"""Definition-level checks on vertex sets.

Usage:
    Call any function from a separate script.

"""

from collections.abc import Iterable

from domcover.core.graph_core import closed_neighborhood_of_set
from domcover.utils.classes import Graph, Vertex, VertexSet
from domcover.utils.errors import XDoesNotContainX


def is_dominating(g: Graph, vertices: Iterable[Vertex]) -> bool:
    """Check that every vertex is in the set or adjacent to it."""
    return len(closed_neighborhood_of_set(g, vertices)) == g.n


def is_cover(g: Graph, vertices: Iterable[Vertex]) -> bool:
    """Check that every edge has at least one end in the set."""
    members = set(vertices)
    return all(u in members or v in members for u, v in g.edges())


def is_independent(g: Graph, vertices: Iterable[Vertex]) -> bool:
    """Check that no edge joins two members of the set."""
    members = set(vertices)
    return not any(w in members for v in members for w in g.adjacency[v])


def private_neighborhood(g: Graph, x: Vertex, vertices: Iterable[Vertex]) -> VertexSet:
    """Vertices of N[x] outside the closed neighborhood of the rest of the set.

    Args:
        g: The graph.
        x: A member of `vertices`.
        vertices: The set X.

    Returns:
        private: N[x] - N[X - {x}].

    Raises:
        XDoesNotContainX: `x` is not a member of `vertices`.

    """

    members = frozenset(vertices)
    if x not in members:
        raise XDoesNotContainX(f"ERROR @ private_neighborhood. Vertex {x} is not in {sorted(members)}.")

    others = closed_neighborhood_of_set(g, members - {x})
    return closed_neighborhood_of_set(g, [x]) - others
