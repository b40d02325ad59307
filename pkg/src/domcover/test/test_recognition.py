"""Tests for the γ = β and γ = |A| recognizers, against the exact oracles."""

import networkx as nx
import pytest

from domcover.assets.graph_families import (
    atlas_graphs,
    complete,
    complete_bipartite,
    connected_labeled_graphs,
    cycle,
    path,
    star,
)
from domcover.core.graph_core import (
    bipartition,
    build_graph,
    min_degree,
    to_networkx,
)
from domcover.core.oracles import alpha, alpha_sets, beta, gamma, is_dominating
from domcover.core.recognition import (
    bench_worstcase,
    check_cgb_conditions,
    condition_report,
    gen_worstcase,
    pair_bound_holds,
    pair_multiplicity_map,
    recognize_b_class,
    recognize_cgb_poly,
)
from domcover.utils.classes import Graph, ViolatedCondition, WitnessGammaSet
from domcover.utils.errors import (
    Disconnected,
    IsolatedVertex,
    NotBipartite,
    NotMaximumIndependent,
    TooSmall,
)


###########
# HELPERS #
###########
def assert_recognizers_agree(g: Graph):
    """Compare every recognizer with the oracles on one connected graph."""
    value_gamma = gamma(g).value
    value_beta = beta(g).value
    assert alpha(g).value + value_beta == g.n
    verdict = recognize_cgb_poly(g)
    assert verdict.member == (value_gamma == value_beta), g.edges()
    assert verdict.pair_checks <= g.n * g.n
    assert check_cgb_conditions(g, alpha(g).witness).member == verdict.member, g.edges()

    if verdict.member:
        assert isinstance(verdict.certificate, WitnessGammaSet)
        assert is_dominating(g, verdict.certificate.vertices)
        assert len(verdict.certificate.vertices) == value_gamma
        assert min_degree(g) <= 2
        if min_degree(g) == 2:
            assert nx.is_bipartite(to_networkx(g))

    if not nx.is_bipartite(to_networkx(g)):
        return
    sides = bipartition(g)
    b_verdict = recognize_b_class(g)
    assert b_verdict.member == (value_gamma == len(sides.side_a)), g.edges()
    assert b_verdict.pair_checks <= g.n * g.n
    if b_verdict.member:
        assert verdict.member
        assert pair_bound_holds(pair_multiplicity_map(g, sides.side_a), g.n)
        assert alpha(g).value == len(sides.side_b)
        assert value_beta == len(sides.side_a)


###################
# CLOSED FAMILIES #
###################
@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graphs(n):
    assert recognize_cgb_poly(complete(n)).member == (n == 2)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    assert recognize_cgb_poly(cycle(n)).member == (n == 4)


@pytest.mark.parametrize("n", range(2, 13))
def test_paths(n):
    assert recognize_cgb_poly(path(n)).member == (n in {2, 3, 4, 5, 7})


@pytest.mark.parametrize(("m", "n"), [(m, n) for n in range(1, 6) for m in range(1, n + 1)])
def test_complete_bipartite(m, n):
    assert recognize_cgb_poly(complete_bipartite(m, n)).member == (m <= 2)
    assert recognize_b_class(complete_bipartite(m, n)).member == (m <= 2)


################
# CERTIFICATES #
################
def test_cgb_certificates():
    assert recognize_cgb_poly(path(2)).certificate == WitnessGammaSet(frozenset({0}))
    assert recognize_cgb_poly(path(4)).certificate == WitnessGammaSet(frozenset({1, 2}))
    assert recognize_cgb_poly(complete(3)).certificate.condition == "h-bipartite"
    assert recognize_cgb_poly(path(6)).certificate == ViolatedCondition("support-sides", (1, 4))

    verdict = recognize_cgb_poly(cycle(6))
    assert verdict.certificate == ViolatedCondition("3", (0, 2, 1))
    assert verdict.pair_checks == 1


def test_b_class_certificates():
    assert recognize_b_class(cycle(4)).certificate == WitnessGammaSet(frozenset({0, 2}))
    assert recognize_b_class(star(4)).certificate == WitnessGammaSet(frozenset({0}))
    assert recognize_b_class(path(6)).certificate == ViolatedCondition("corona-or-c4", (2, 3))

    verdict = recognize_b_class(complete_bipartite(3, 4))
    assert verdict.certificate == ViolatedCondition("3b", (0, 1, 3))


def test_recognizer_errors():
    with pytest.raises(TooSmall):
        recognize_cgb_poly(build_graph(0, []))
    with pytest.raises(IsolatedVertex):
        recognize_cgb_poly(build_graph(1, []))
    with pytest.raises(Disconnected):
        recognize_cgb_poly(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(TooSmall):
        recognize_b_class(build_graph(1, []))
    with pytest.raises(NotBipartite):
        recognize_b_class(cycle(5))


##############
# CONDITIONS #
##############
def test_condition_report_singles_out_each_condition():
    assert condition_report(path(6), {0, 2, 4}) == {"1": False, "2": True, "3": True}
    assert condition_report(complete(3), {0}) == {"1": True, "2": False, "3": True}
    assert condition_report(cycle(6), {0, 2, 4}) == {"1": True, "2": True, "3": False}


def test_conditions_agree_for_every_alpha_set():
    for g in atlas_graphs(6):
        expected = gamma(g).value == beta(g).value
        for s in alpha_sets(g):
            assert check_cgb_conditions(g, s).member == expected


def test_conditions_reject_bad_sets():
    with pytest.raises(NotMaximumIndependent):
        check_cgb_conditions(path(4), {0, 1})
    with pytest.raises(NotMaximumIndependent):
        check_cgb_conditions(path(4), {0})


##############
# EXHAUSTIVE #
##############
@pytest.mark.parametrize("n", range(2, 6))
def test_all_connected_labeled_graphs(n):
    for g in connected_labeled_graphs(n):
        assert_recognizers_agree(g)


def test_all_graphs_up_to_seven_vertices():
    for g in atlas_graphs(7):
        assert_recognizers_agree(g)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_all_connected_labeled_graphs_slow(n):
    for g in connected_labeled_graphs(n):
        assert_recognizers_agree(g)


##############
# WORST CASE #
##############
@pytest.mark.parametrize(("n", "checks"), [(16, 14), (64, 300), (256, 5432), (1024, 92400)])
def test_worstcase_is_member_with_known_work(n, checks):
    g = gen_worstcase(n)
    assert g.n == n
    verdict = recognize_b_class(g)
    assert verdict.member
    assert verdict.pair_checks == checks


def test_worstcase_work_grows_quadratically():
    table = bench_worstcase([16, 64, 256, 1024])
    assert table["member"].all()
    assert table["ratio"].iloc[1:].between(8, 32).all()


def test_worstcase_too_small():
    with pytest.raises(TooSmall):
        gen_worstcase(8)
    with pytest.raises(TooSmall):
        bench_worstcase([16, 8])


def test_dense_and_sparse_pair_maps_agree():
    for g in (gen_worstcase(64), complete_bipartite(3, 4), cycle(8)):
        dense = recognize_b_class(g)
        sparse = recognize_b_class(g, dense_threshold=0)
        assert dense == sparse


@pytest.mark.parametrize("n", [16, 64, 256, 1024])
def test_pair_bound_holds_on_worstcase(n):
    g = gen_worstcase(n)
    sides = bipartition(g)
    assert pair_bound_holds(pair_multiplicity_map(g, sides.side_a), g.n)
    assert recognize_b_class(g).pair_checks <= g.n * g.n
