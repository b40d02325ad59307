"""Shared helpers: independent answers computed with NetworkX.

Usage:
    Import the helpers from `conftest` in any test module, or use the fixtures directly.

"""

from itertools import combinations

import networkx as nx
import pytest

from domcover.core.graph_core import to_networkx
from domcover.utils.classes import Graph


def nx_gamma(g: Graph) -> int:
    """Domination number by trying every subset size in turn."""
    nx_g = to_networkx(g)
    for k in range(g.n + 1):
        if any(nx.is_dominating_set(nx_g, combo) for combo in combinations(range(g.n), k)):
            return k
    return g.n


def nx_alpha(g: Graph) -> int:
    """Independence number as the largest clique of the complement."""
    if g.n == 0:
        return 0
    _, weight = nx.max_weight_clique(nx.complement(to_networkx(g)), weight=None)
    return weight


@pytest.fixture
def write_file(tmp_path):
    """Write text to a fresh file under the test's temp dir and return its path as a string."""

    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
