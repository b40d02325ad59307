"""Structural queries: leaves and supports, 2-colorings, and the corona and 4-cycle tests.

Usage:
    Call any function from a separate script.

"""

from collections import deque

from domcover.core.graph_core.graph import is_connected
from domcover.utils.classes import Bipartition, Edge, Graph, StructuralMarks
from domcover.utils.errors import Disconnected, NotBipartite


def structural_marks(g: Graph) -> StructuralMarks:
    """Compute leaves, supports and weak supports in one pass over the adjacency lists.

    Args:
        g: The graph.

    Returns:
        marks: Leaves (degree one), supports (adjacent to a leaf), weak supports
            (adjacent to exactly one leaf) and the degree of every vertex.

    """

    degrees = tuple(len(nbrs) for nbrs in g.adjacency)
    leaf_neighbors = [0] * g.n
    leaves = []
    for v, nbrs in enumerate(g.adjacency):
        if degrees[v] == 1:
            leaves.append(v)
            leaf_neighbors[nbrs[0]] += 1

    return StructuralMarks(
        leaves=frozenset(leaves),
        supports=frozenset(v for v in range(g.n) if leaf_neighbors[v] >= 1),
        weak_supports=frozenset(v for v in range(g.n) if leaf_neighbors[v] == 1),
        degrees=degrees,
    )


def two_coloring(g: Graph) -> tuple[list[int], Edge | None]:
    """Breadth-first 2-coloring of every component.

    The smallest vertex of each component gets color 0.

    Args:
        g: The graph, possibly disconnected.

    Returns:
        colors: Color (0 or 1) of every vertex.
        conflict: An edge with both ends of the same color, or None if the graph is bipartite.

    """

    colors = [-1] * g.n
    conflict: Edge | None = None
    for start in range(g.n):
        if colors[start] >= 0:
            continue
        colors[start] = 0
        queue: deque[int] = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colors[w] < 0:
                    colors[w] = 1 - colors[u]
                    queue.append(w)
                elif colors[w] == colors[u] and conflict is None:
                    conflict = (min(u, w), max(u, w))
    return colors, conflict


def bipartition(g: Graph) -> Bipartition:
    """Split a connected bipartite graph into its two sides, smaller side first.

    Args:
        g: A connected graph with at least one vertex.

    Returns:
        sides: The bipartition. When both sides have equal size, `side_a` holds vertex 0.

    Raises:
        Disconnected: The graph is not connected.
        NotBipartite: The graph has an odd cycle.

    """

    if not is_connected(g):
        raise Disconnected("ERROR @ bipartition. Graph is not connected.")

    colors, conflict = two_coloring(g)
    if conflict is not None:
        raise NotBipartite(f"ERROR @ bipartition. Odd cycle through edge {conflict}.")

    side_0 = frozenset(v for v in range(g.n) if colors[v] == 0)
    side_1 = frozenset(v for v in range(g.n) if colors[v] == 1)
    if len(side_0) <= len(side_1):
        return Bipartition(side_a=side_0, side_b=side_1)
    return Bipartition(side_a=side_1, side_b=side_0)


def is_corona(g: Graph) -> bool:
    """Check whether every vertex is a leaf or adjacent to exactly one leaf."""
    if g.n < 2:
        return False
    marks = structural_marks(g)
    return all(v in marks.leaves or v in marks.weak_supports for v in range(g.n))


def is_cycle4(g: Graph) -> bool:
    """Check whether the graph is the 4-cycle."""
    return g.n == 4 and all(len(nbrs) == 2 for nbrs in g.adjacency) and is_connected(g)
