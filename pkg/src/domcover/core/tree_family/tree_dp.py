"""Linear-time domination on trees and forests.

Usage:
    Call `as_tree()` once to root a graph at vertex 0, then pass the view to `tree_gamma()` or
        `gamma_minus_critical_vertices()`. Both also accept a plain graph.

"""

from collections import deque
from math import inf

from domcover.core.graph_core import bipartition, components, delete_vertices, is_connected
from domcover.utils.classes import Graph, OracleResult, RootedTreeView, Vertex, VertexSet
from domcover.utils.errors import NotATree

# DP states: in the set / dominated by a child / waiting for its parent
IN, DOM, NEED = 0, 1, 2


def as_tree(t: Graph | RootedTreeView) -> RootedTreeView:
    """Root a tree at vertex 0.

    Args:
        t: A graph, or a view that is returned unchanged.

    Returns:
        view: Parent array, breadth-first order and bipartition of the tree.

    Raises:
        NotATree: The graph is empty, disconnected, or has a cycle.

    """

    if isinstance(t, RootedTreeView):
        return t
    if t.n == 0 or t.edge_count != t.n - 1 or not is_connected(t):
        raise NotATree(f"ERROR @ as_tree. {t} is not a tree.")

    parent = [-1] * t.n
    order = [0]
    queue: deque[int] = deque([0])
    seen = {0}
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                order.append(w)
                queue.append(w)

    return RootedTreeView(
        graph=t, parent=tuple(parent), order=tuple(order), bipartition=bipartition(t)
    )


def tree_gamma(t: Graph | RootedTreeView) -> OracleResult:
    """Exact domination number of a tree by a three-state leaf-to-root dynamic program.

    Args:
        t: A tree with at least one vertex.

    Returns:
        result: γ(t), a minimum dominating set, and the number of vertices processed.

    Raises:
        NotATree: `t` is not a tree.

    Notes:
        For every vertex v, `cost[v]` holds the smallest number of set members in v's subtree when
            v is in the set (IN), when v is outside but dominated by a child (DOM), and when v is
            outside and undominated, so its parent must dominate it (NEED). In each case every
            other vertex of the subtree is dominated.

    """

    t = as_tree(t)
    g = t.graph
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in t.order[1:]:
        children[t.parent[v]].append(v)

    cost = [[0.0, 0.0, 0.0] for _ in range(g.n)]
    for v in reversed(t.order):
        kids = children[v]
        cost[v][IN] = 1 + sum(min(cost[c]) for c in kids)
        cost[v][DOM] = (
            sum(min(cost[c][IN], cost[c][DOM]) for c in kids)
            + min(cost[c][IN] - min(cost[c][IN], cost[c][DOM]) for c in kids)
            if kids
            else inf
        )
        cost[v][NEED] = sum(cost[c][DOM] for c in kids)

    # Top-down reconstruction
    state = [IN] * g.n
    state[0] = IN if cost[0][IN] <= cost[0][DOM] else DOM
    for v in t.order:
        kids = children[v]
        if state[v] == IN:
            for c in kids:
                state[c] = min((IN, DOM, NEED), key=lambda s, c=c: cost[c][s])
        elif state[v] == NEED:
            for c in kids:
                state[c] = DOM
        else:
            for c in kids:
                state[c] = IN if cost[c][IN] <= cost[c][DOM] else DOM
            if all(state[c] != IN for c in kids):
                forced = min(kids, key=lambda c: cost[c][IN] - cost[c][DOM])
                state[forced] = IN

    witness = frozenset(v for v in range(g.n) if state[v] == IN)
    value = int(min(cost[0][IN], cost[0][DOM]))
    if len(witness) != value:
        raise RuntimeError(f"ERROR @ tree_gamma. Witness size {len(witness)} != {value}.")

    return OracleResult(value=value, witness=witness, explored=g.n)


def forest_gamma(g: Graph) -> int:
    """Domination number of a forest: the sum over its component trees.

    Raises:
        NotATree: Some component has a cycle.

    """

    total = 0
    for comp in components(g):
        tree, _ = delete_vertices(g, frozenset(range(g.n)) - comp)
        total += tree_gamma(tree).value
    return total


def gamma_minus_critical_vertices(t: Graph | RootedTreeView) -> VertexSet:
    """Vertices whose deletion lowers the domination number of a tree.

    Args:
        t: A tree.

    Returns:
        critical: Every v with γ(t - v) = γ(t) - 1, computed by deleting each vertex in turn.

    Raises:
        NotATree: `t` is not a tree.

    """

    t = as_tree(t)
    base = tree_gamma(t).value
    return frozenset(v for v in range(t.graph.n) if is_critical(t.graph, v, base))


def is_critical(g: Graph, v: Vertex, base: int) -> bool:
    """Check whether deleting `v` from a tree with γ = `base` lowers γ."""
    forest, _ = delete_vertices(g, [v])
    return forest_gamma(forest) == base - 1
