"""Tests for the exact oracles, cross-checked against NetworkX."""

from math import ceil

import networkx as nx
import pytest

from domcover.assets.graph_families import (
    atlas_graphs,
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
)
from domcover.core.graph_core import build_graph, to_networkx
from domcover.core.oracles import (
    alpha,
    alpha_sets,
    beta,
    gamma,
    gamma_sets,
    is_cover,
    is_dominating,
    is_gamma_minus_critical,
    is_independent,
    private_neighborhood,
)
from domcover.test.conftest import nx_alpha, nx_gamma
from domcover.utils.errors import SizeCapExceeded, XDoesNotContainX


################
# KNOWN VALUES #
################
@pytest.mark.parametrize("n", range(2, 12))
def test_paths_and_cycles(n):
    assert gamma(path(n)).value == ceil(n / 3)
    assert beta(path(n)).value == n // 2
    if n >= 3:
        assert gamma(cycle(n)).value == ceil(n / 3)
        assert beta(cycle(n)).value == ceil(n / 2)


@pytest.mark.parametrize("n", range(2, 8))
def test_complete_graphs(n):
    assert gamma(complete(n)).value == 1
    assert beta(complete(n)).value == n - 1
    assert alpha(complete(n)).value == 1


def test_small_values():
    assert gamma(path(2)).value == beta(path(2)).value == alpha(path(2)).value == 1
    assert gamma(cycle(4)).value == beta(cycle(4)).value == alpha(cycle(4)).value == 2
    assert gamma(complete_bipartite(3, 3)).value == 2
    assert gamma(star(5)).value == 1


def test_witnesses_are_lexicographically_smallest():
    g = path(4)
    assert gamma(g).witness == {0, 2}
    assert gamma(g).witness == gamma_sets(g)[0]
    assert beta(g).witness == {0, 2}
    assert alpha(g).witness == {1, 3}


def test_isolated_vertices_dominate_themselves():
    g = build_graph(3, [(0, 1)])
    assert gamma(g).value == 2
    assert gamma(build_graph(0, [])).value == 0


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        gamma(path(30))
    with pytest.raises(SizeCapExceeded):
        beta(path(30), cap=10)
    assert gamma(path(30), cap=30).value == 10


##################
# CROSS-CHECKING #
##################
def test_oracles_agree_with_networkx_on_atlas():
    for g in atlas_graphs(6):
        value_gamma = gamma(g)
        value_beta = beta(g)
        value_alpha = alpha(g)
        assert value_gamma.value == nx_gamma(g)
        assert value_alpha.value == nx_alpha(g)
        assert value_alpha.value + value_beta.value == g.n
        assert nx.is_dominating_set(to_networkx(g), value_gamma.witness)
        assert is_cover(g, value_beta.witness)
        assert is_independent(g, value_alpha.witness)


def test_enumerated_sets_are_optimal():
    g = cycle(6)
    sets = gamma_sets(g)
    assert sets == [frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})]
    assert all(is_dominating(g, s) for s in sets)
    assert alpha_sets(g) == [frozenset({0, 2, 4}), frozenset({1, 3, 5})]


def test_every_member_of_a_gamma_set_has_a_private_neighbor():
    for g in atlas_graphs(6):
        for s in gamma_sets(g):
            assert all(private_neighborhood(g, x, s) for x in s)


def test_private_neighborhood():
    g = path(5)
    assert private_neighborhood(g, 1, {1, 3}) == {0, 1}
    with pytest.raises(XDoesNotContainX):
        private_neighborhood(g, 0, {1, 3})


def test_gamma_minus_critical():
    g = path(4)
    assert is_gamma_minus_critical(g, 0)
    assert not is_gamma_minus_critical(g, 1)
    assert not is_gamma_minus_critical(complete(3), 0)


def test_critical_vertices_are_lone_private_neighbors():
    # v is γ⁻-critical exactly when some γ-set D holds v with PN[v, D] = {v}
    for g in atlas_graphs(6):
        sets = gamma_sets(g)
        for v in range(g.n):
            lone = any(v in s and private_neighborhood(g, v, s) == {v} for s in sets)
            assert is_gamma_minus_critical(g, v) == lone, (g.edges(), v)
