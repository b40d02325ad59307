"""Construction of immutable graphs and the traversal queries built on them.

Usage:
    Call `build_graph()` to validate an edge list, then pass the resulting `Graph` to
        any other operation in domcover.

"""

from collections import deque
from collections.abc import Iterable

import networkx as nx

from domcover.utils.classes import Edge, Graph, Vertex, VertexSet
from domcover.utils.errors import DuplicateEdge, OutOfRange, SelfLoop


################
# CONSTRUCTION #
################
def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Validate an edge list over vertices `0..n-1` and build a graph.

    Args:
        n: The number of vertices.
        edges: Unordered vertex pairs.

    Returns:
        g: A simple, symmetric graph with sorted adjacency lists.

    Raises:
        OutOfRange: An endpoint is outside `0..n-1`.
        SelfLoop: An edge joins a vertex to itself.
        DuplicateEdge: The same unordered pair appears twice.

    """

    if n < 0:
        raise OutOfRange(f"ERROR @ build_graph. Vertex count must be non-negative, got {n}.")

    adjacency: list[set[int]] = [set() for _ in range(n)]
    edge_count = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"ERROR @ build_graph. Edge ({u}, {v}) outside 0..{n - 1}.")
        if u == v:
            raise SelfLoop(f"ERROR @ build_graph. Self-loop at vertex {u}.")
        if v in adjacency[u]:
            raise DuplicateEdge(f"ERROR @ build_graph. Edge ({u}, {v}) given twice.")
        adjacency[u].add(v)
        adjacency[v].add(u)
        edge_count += 1

    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
        edge_count=edge_count,
    )


def delete_vertices(g: Graph, removed: Iterable[Vertex]) -> tuple[Graph, dict[int, int]]:
    """Delete vertices and relabel the survivors densely, preserving their relative order.

    Args:
        g: The graph.
        removed: Vertices to delete.

    Returns:
        h: The graph without the removed vertices.
        relabel: Map from surviving old ids to new ids.

    """

    gone = set(removed)
    survivors = [v for v in range(g.n) if v not in gone]
    relabel = {old: new for new, old in enumerate(survivors)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges() if u in relabel and v in relabel]
    return build_graph(len(survivors), edges), relabel


############
# NETWORKX #
############
def to_networkx(g: Graph) -> nx.Graph:
    """Convert a graph to a NetworkX graph with the same vertex ids."""
    nx_g = nx.Graph()
    nx_g.add_nodes_from(range(g.n))
    nx_g.add_edges_from(g.edges())
    return nx_g


def from_networkx(nx_g: nx.Graph) -> Graph:
    """Convert a NetworkX graph into a graph, relabelling its nodes densely in sorted order."""
    labels = {node: i for i, node in enumerate(sorted(nx_g.nodes()))}
    return build_graph(len(labels), [(labels[u], labels[v]) for u, v in nx_g.edges()])


#############
# TRAVERSAL #
#############
def bfs_distances(g: Graph, source: Vertex) -> list[int]:
    """Breadth-first distances from `source`; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue: deque[int] = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    """Check whether one traversal from vertex 0 reaches every vertex."""
    if g.n <= 1:
        return True
    return min(bfs_distances(g, 0)) >= 0


def distance(g: Graph, u: Vertex, v: Vertex) -> int | None:
    """Length of a shortest u-v path, or None if v is unreachable from u."""
    if u == v:
        return 0
    d = bfs_distances(g, u)[v]
    return d if d >= 0 else None


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    comps: list[VertexSet] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue: deque[int] = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        comps.append(frozenset(members))
    return comps


def diameter(g: Graph) -> int | None:
    """Largest distance between two vertices, or None for a disconnected graph."""
    if not is_connected(g):
        return None
    return max((max(bfs_distances(g, v)) for v in range(g.n)), default=0)


#################
# NEIGHBORHOODS #
#################
def neighborhood_of_set(g: Graph, vertices: Iterable[Vertex]) -> VertexSet:
    """Open neighborhood of a set: every vertex adjacent to some member."""
    return frozenset(w for v in vertices for w in g.adjacency[v])


def closed_neighborhood_of_set(g: Graph, vertices: Iterable[Vertex]) -> VertexSet:
    """Closed neighborhood of a set: the set plus its open neighborhood."""
    members = frozenset(vertices)
    return members | neighborhood_of_set(g, members)


def min_degree(g: Graph) -> int:
    """Smallest vertex degree (0 for the empty graph)."""
    return min((len(nbrs) for nbrs in g.adjacency), default=0)
