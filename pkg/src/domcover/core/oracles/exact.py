"""Exact branch-and-bound oracles for γ, β and α.

Vertex sets are handled as integer bitmasks inside the searches and converted back to
frozensets on return. Each oracle first finds the optimum value with branch-and-bound, then
runs a second ascending search at that size so the returned witness is the lexicographically
smallest optimal set.

Usage:
    Call `gamma()`, `beta()` or `alpha()` on a graph with at most `cap` vertices.

"""

from domcover.core.oracles.predicates import is_cover, is_dominating, is_independent
from domcover.kwargs import ORACLE_SIZE_CAP
from domcover.utils.classes import Graph, OracleResult
from domcover.utils.errors import SizeCapExceeded


#########
# UTILS #
#########
def check_cap(g: Graph, cap: int) -> None:
    """Raise if the graph is too large for the exponential oracles."""
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap)


def closed_masks(g: Graph) -> list[int]:
    """Bitmask of N[v] for every vertex v."""
    return [(1 << v) | sum(1 << w for w in nbrs) for v, nbrs in enumerate(g.adjacency)]


def open_masks(g: Graph) -> list[int]:
    """Bitmask of N(v) for every vertex v."""
    return [sum(1 << w for w in nbrs) for nbrs in g.adjacency]


def mask_to_set(mask: int) -> frozenset[int]:
    """Convert a bitmask to the set of its bit positions."""
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(members)


def lowest(mask: int) -> int:
    """Position of the lowest set bit."""
    return (mask & -mask).bit_length() - 1


##############
# DOMINATION #
##############
def greedy_dominating_size(closed: list[int], full: int) -> int:
    """Size of a greedy dominating set (most newly dominated vertices first)."""
    dominated, size = 0, 0
    while dominated != full:
        best = max(range(len(closed)), key=lambda v: (closed[v] & ~dominated).bit_count())
        dominated |= closed[best]
        size += 1
    return size


def gamma(g: Graph, cap: int = ORACLE_SIZE_CAP) -> OracleResult:
    """Compute the domination number with a witness.

    Args:
        g: The graph. Isolated vertices are allowed and dominate only themselves.
        cap: Largest vertex count accepted.

    Returns:
        result: γ(g), the lexicographically smallest minimum dominating set, and the number
            of search nodes explored across both passes.

    Raises:
        SizeCapExceeded: `g.n > cap`.

    """

    check_cap(g, cap)
    if g.n == 0:
        return OracleResult(value=0, witness=frozenset(), explored=0)

    closed = closed_masks(g)
    full = (1 << g.n) - 1
    reach = max(c.bit_count() for c in closed)
    best = greedy_dominating_size(closed, full)
    explored = 0

    def branch(dominated: int, size: int):
        """Dominate the lowest undominated vertex by each of its closed neighbors in turn."""
        nonlocal best, explored
        explored += 1
        if dominated == full:
            best = min(best, size)
            return
        undominated = full & ~dominated
        if size + -(-undominated.bit_count() // reach) >= best:
            return
        candidates = closed[lowest(undominated)]
        while candidates:
            w = lowest(candidates)
            candidates &= candidates - 1
            branch(dominated | closed[w], size + 1)

    def extend(start: int, dominated: int, chosen: list[int]) -> list[int] | None:
        """Add vertices in ascending order until the set dominates."""
        nonlocal explored
        explored += 1
        if dominated == full:
            return chosen
        left = best - len(chosen)
        undominated = full & ~dominated
        if left == 0 or undominated.bit_count() > left * reach:
            return None
        # Every later pick is >= start, so some closed neighbor of u must be too
        if closed[lowest(undominated)].bit_length() - 1 < start:
            return None
        for v in range(start, g.n):
            found = extend(v + 1, dominated | closed[v], [*chosen, v])
            if found is not None:
                return found
        return None

    branch(0, 0)
    witness = frozenset(extend(0, 0, []) or ())
    if len(witness) != best or not is_dominating(g, witness):
        raise RuntimeError(f"ERROR @ gamma. Witness {sorted(witness)} failed verification.")

    return OracleResult(value=best, witness=witness, explored=explored)


############
# COVERING #
############
def first_uncovered(adj: list[int], cover: int) -> tuple[int, int] | None:
    """Lexicographically first edge with neither end in the cover."""
    for u, nbrs in enumerate(adj):
        if cover >> u & 1:
            continue
        rest = nbrs & ~cover & ~((1 << (u + 1)) - 1)
        if rest:
            return u, lowest(rest)
    return None


def uncovered_edges(adj: list[int], cover: int) -> int:
    """Number of edges with neither end in the cover."""
    return (
        sum((nbrs & ~cover).bit_count() for u, nbrs in enumerate(adj) if not cover >> u & 1) // 2
    )


def matching_bound(adj: list[int], cover: int) -> int:
    """Size of a greedy maximal matching among uncovered edges (a lower bound on what remains)."""
    used = cover
    size = 0
    for u, nbrs in enumerate(adj):
        if used >> u & 1:
            continue
        free = nbrs & ~used
        if free:
            used |= (1 << u) | (free & -free)
            size += 1
    return size


def greedy_cover_size(adj: list[int]) -> int:
    """Size of a greedy vertex cover (most uncovered edges first)."""
    cover, size = 0, 0
    while first_uncovered(adj, cover) is not None:
        best = max(
            (v for v in range(len(adj)) if not cover >> v & 1),
            key=lambda v: (adj[v] & ~cover).bit_count(),
        )
        cover |= 1 << best
        size += 1
    return size


def beta(g: Graph, cap: int = ORACLE_SIZE_CAP) -> OracleResult:
    """Compute the covering number with a witness.

    Args:
        g: The graph.
        cap: Largest vertex count accepted.

    Returns:
        result: β(g), the lexicographically smallest minimum vertex cover, and the number
            of search nodes explored across both passes.

    Raises:
        SizeCapExceeded: `g.n > cap`.

    """

    check_cap(g, cap)
    adj = open_masks(g)
    max_degree = max((a.bit_count() for a in adj), default=0)
    best = greedy_cover_size(adj)
    explored = 0

    def branch(cover: int, size: int):
        """Either the first uncovered edge's lower end joins, or all its uncovered neighbors do."""
        nonlocal best, explored
        explored += 1
        edge = first_uncovered(adj, cover)
        if edge is None:
            best = min(best, size)
            return
        if size + matching_bound(adj, cover) >= best:
            return
        u, _ = edge
        branch(cover | (1 << u), size + 1)
        rest = adj[u] & ~cover
        branch(cover | rest, size + rest.bit_count())

    def extend(start: int, cover: int, chosen: list[int]) -> list[int] | None:
        """Add vertices in ascending order until the set covers every edge."""
        nonlocal explored
        explored += 1
        edge = first_uncovered(adj, cover)
        if edge is None:
            return chosen
        left = best - len(chosen)
        if left == 0 or edge[1] < start or uncovered_edges(adj, cover) > left * max_degree:
            return None
        for v in range(start, g.n):
            found = extend(v + 1, cover | (1 << v), [*chosen, v])
            if found is not None:
                return found
        return None

    branch(0, 0)
    witness = frozenset(extend(0, 0, []) or ())
    if len(witness) != best or not is_cover(g, witness):
        raise RuntimeError(f"ERROR @ beta. Witness {sorted(witness)} failed verification.")

    return OracleResult(value=best, witness=witness, explored=explored)


################
# INDEPENDENCE #
################
def alpha(g: Graph, cap: int = ORACLE_SIZE_CAP) -> OracleResult:
    """Compute the independence number as the complement of a minimum vertex cover.

    Args:
        g: The graph.
        cap: Largest vertex count accepted.

    Returns:
        result: α(g) = n - β(g), with the complement of β's witness as an independent witness.

    Raises:
        SizeCapExceeded: `g.n > cap`.

    """

    cover = beta(g, cap=cap)
    witness = frozenset(range(g.n)) - cover.witness
    if not is_independent(g, witness):
        raise RuntimeError(f"ERROR @ alpha. Witness {sorted(witness)} is not independent.")

    return OracleResult(value=g.n - cover.value, witness=witness, explored=cover.explored)
