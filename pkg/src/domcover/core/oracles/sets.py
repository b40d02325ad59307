"""Enumeration of optimal sets and the γ⁻-critical test.

Usage:
    Call any function from a separate script. Enumerations are meant for small graphs.

"""

from itertools import combinations

from domcover.core.graph_core import delete_vertices
from domcover.core.oracles.exact import alpha, check_cap, gamma
from domcover.core.oracles.predicates import is_dominating, is_independent
from domcover.kwargs import ORACLE_SIZE_CAP
from domcover.utils.classes import Graph, Vertex, VertexSet


def gamma_sets(g: Graph, cap: int = ORACLE_SIZE_CAP) -> list[VertexSet]:
    """Every minimum dominating set, in lexicographic order."""
    value = gamma(g, cap=cap).value
    return [
        frozenset(combo) for combo in combinations(range(g.n), value) if is_dominating(g, combo)
    ]


def alpha_sets(g: Graph, cap: int = ORACLE_SIZE_CAP) -> list[VertexSet]:
    """Every maximum independent set, in lexicographic order."""
    value = alpha(g, cap=cap).value
    return [
        frozenset(combo) for combo in combinations(range(g.n), value) if is_independent(g, combo)
    ]


def is_gamma_minus_critical(g: Graph, v: Vertex, cap: int = ORACLE_SIZE_CAP) -> bool:
    """Check whether deleting `v` lowers the domination number.

    Args:
        g: The graph.
        v: The vertex to delete.
        cap: Largest vertex count accepted.

    Returns:
        critical: True iff γ(g - v) = γ(g) - 1.

    Notes:
        Deleting one vertex lowers γ by at most one, so a strict decrease is a decrease by one.
            `g - v` may be disconnected; its isolated vertices dominate themselves.

    """

    check_cap(g, cap)
    smaller, _ = delete_vertices(g, [v])
    return gamma(smaller, cap=cap).value == gamma(g, cap=cap).value - 1
