"""Named graph families and exhaustive enumerators for small graphs.

Usage:
    Call any generator directly, e.g. `path(7)` or `for g in connected_labeled_graphs(5): ...`.

"""

from collections.abc import Iterator
from itertools import combinations, product

import networkx as nx

from domcover.core.graph_core import build_graph, from_networkx, is_connected
from domcover.utils.classes import Graph


############
# FAMILIES #
############
def complete(n: int) -> Graph:
    """K_n."""
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    """C_n, for n >= 3."""
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n: n vertices, 0-1-...-(n-1)."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with sides 0..m-1 and m..m+n-1."""
    return build_graph(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} centred at 0."""
    return complete_bipartite(1, leaves)


def corona(g: Graph) -> Graph:
    """Hang one new leaf n + v from every vertex v of `g`."""
    return build_graph(2 * g.n, [*g.edges(), *((v, g.n + v) for v in range(g.n))])


###############
# ENUMERATORS #
###############
def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on vertex set 0..n-1, as edge subsets of K_n."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if is_connected(g):
            yield g


def atlas_graphs(max_n: int = 7) -> Iterator[Graph]:
    """One graph per isomorphism class, every connected graph with 2 to `max_n` vertices."""
    for nx_g in nx.graph_atlas_g():
        if 2 <= nx_g.number_of_nodes() <= max_n and nx.is_connected(nx_g):
            yield from_networkx(nx_g)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on 0..n-1, one per Prüfer sequence."""
    if n == 2:
        yield path(2)
        return
    for sequence in product(range(n), repeat=n - 2):
        yield from_networkx(nx.from_prufer_sequence(list(sequence)))


def unlabeled_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on n vertices."""
    for nx_g in nx.nonisomorphic_trees(n):
        yield from_networkx(nx_g)
