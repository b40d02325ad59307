"""Tests for grid validation, the plane sweep and extremal-grid recognition."""

import random
from itertools import combinations

import pytest

from domcover.assets.grids import comb, endpoint_touch, hash_shape, lattice, plus_sign
from domcover.core.grid_guarding import (
    intersection_graph,
    is_extremal,
    min_patrolling_set,
    naive_intersection_edges,
    random_grid,
    segments_from_decimals,
    sweep_edges,
    validate_grid,
)
from domcover.core.recognition import recognize_b_class
from domcover.utils.classes import Segment, ViolatedCondition, WitnessGammaSet
from domcover.utils.errors import (
    CollinearOverlap,
    DegenerateSegment,
    DisconnectedUnion,
    DuplicateSegment,
    GridError,
    TooFewSegments,
)


###########
# HELPERS #
###########
def has_exclusive_pair_witnesses(gg) -> bool:
    """Leafless, and every A-pair sharing a neighbor has a B-vertex adjacent to exactly them."""
    g = gg.graph
    if any(g.degree(v) == 1 for v in range(g.n)):
        return False
    exclusive = {g.neighbors(z) for z in gg.bipartition.side_b if g.degree(z) == 2}
    return all(
        (x, y) in exclusive
        for x, y in combinations(sorted(gg.bipartition.side_a), 2)
        if set(g.neighbors(x)) & set(g.neighbors(y))
    )


############
# FIXTURES #
############
@pytest.mark.parametrize(
    ("grid", "witness", "guards"),
    [
        (plus_sign(), {0}, 1),
        (hash_shape(), {0, 1}, 2),
        (comb(3), {0}, 1),
        (endpoint_touch(), {0}, 1),
        (lattice(2, 5), {0, 1}, 2),
    ],
)
def test_extremal_fixtures(grid, witness, guards):
    verdict = is_extremal(grid)
    assert verdict.certificate == WitnessGammaSet(frozenset(witness))
    assert min_patrolling_set(grid).value == guards


def test_lattice_pair_lookups():
    assert is_extremal(lattice(2, 5)).pair_checks == 5


@pytest.mark.parametrize(
    ("grid", "certificate"),
    [
        (lattice(3, 3), ViolatedCondition("corona-or-c4", (0, 1, 2, 3, 4, 5))),
        (lattice(3, 4), ViolatedCondition("3b", (0, 1, 3))),
        (lattice(5, 6), ViolatedCondition("degree-bound", (5,))),
    ],
)
def test_non_extremal_fixtures(grid, certificate):
    verdict = is_extremal(grid)
    assert not verdict.member
    assert verdict.certificate == certificate


def test_endpoint_contact_counts_as_crossing():
    assert endpoint_touch().graph.edges() == [(0, 1), (0, 2)]


##############
# VALIDATION #
##############
@pytest.mark.parametrize(
    ("segments", "error", "ids"),
    [
        ([Segment("H", 0, 0, 1)], TooFewSegments, ()),
        ([Segment("H", 0, 0, 1), Segment("V", 0, 1, 1)], DegenerateSegment, (1,)),
        (
            [Segment("H", 0, 0, 2), Segment("V", 1, -1, 1), Segment("H", 0, 0, 2)],
            DuplicateSegment,
            (0, 2),
        ),
        (
            [Segment("H", 0, 0, 2), Segment("H", 0, 2, 4), Segment("V", 1, -1, 1)],
            CollinearOverlap,
            (0, 1),
        ),
        ([Segment("H", 0, 0, 2), Segment("V", 5, 0, 2)], DisconnectedUnion, (1,)),
    ],
)
def test_validation_errors(segments, error, ids):
    with pytest.raises(error) as excinfo:
        validate_grid(segments)
    assert excinfo.value.segment_ids == ids


def test_decimal_coordinates_are_scaled():
    segments, scale = segments_from_decimals([("H", "0.5", "0", "1.25"), ("V", "1", "1", "-1")])
    assert scale == 2
    assert segments == [Segment("H", 50, 0, 125), Segment("V", 100, -100, 100)]


@pytest.mark.parametrize(
    "row", [("D", "0", "0", "1"), ("H", "x", "0", "1"), ("V", "0", "nan", "1")]
)
def test_bad_decimal_rows(row):
    with pytest.raises(GridError) as excinfo:
        segments_from_decimals([("H", "0", "0", "1"), row])
    assert excinfo.value.segment_ids == (1,)


#########
# SWEEP #
#########
def test_sweep_stats():
    edges, stats = sweep_edges(lattice(3, 4).segments)
    assert len(edges) == 12
    assert stats.queries == 4
    assert stats.reported == stats.visited == 12
    # Inserts at sizes 0, 1, 2; four queries against 3 entries; deletes at sizes 3, 2, 1
    assert stats.probes == (0 + 1 + 2) + 4 * 2 * 2 + (2 + 2 + 1)
    assert stats.max_active == 3


@pytest.mark.parametrize("n", [20, 60, 200])
def test_sweep_probes_are_logarithmic(n):
    grid = random_grid(n, rng_seed=1)
    _, stats = sweep_edges(grid.segments)
    per_step = stats.max_active.bit_length()
    steps = 2 * stats.queries + 2 * len(grid.horizontal_ids)
    assert stats.visited == stats.reported
    assert stats.probes <= steps * per_step


def test_validation_sweep_is_reused():
    grid = lattice(3, 4)
    gg = intersection_graph(grid)
    assert gg.graph is grid.graph
    assert gg.stats is grid.sweep_stats


@pytest.mark.parametrize("seed", range(30))
def test_sweep_matches_naive(seed):
    grid = random_grid(40, rng_seed=seed)
    edges, stats = sweep_edges(grid.segments)
    assert edges == naive_intersection_edges(grid.segments)
    assert stats.queries == len(grid.vertical_ids)
    assert stats.reported == len(edges)


def test_smaller_family_comes_first():
    gg = intersection_graph(comb(4))
    assert gg.bipartition.side_a == frozenset({0})
    assert gg.bipartition.side_b == frozenset({1, 2, 3, 4})


def test_random_grid_is_deterministic():
    assert random_grid(25, rng_seed=4) == random_grid(25, rng_seed=4)
    with pytest.raises(TooFewSegments):
        random_grid(1)


############
# EXTREMAL #
############
@pytest.mark.parametrize("seed", range(60))
def test_extremal_matches_oracle(seed):
    grid = random_grid(4 + seed % 11, rng_seed=seed, span=6)
    gg = intersection_graph(grid)
    verdict = is_extremal(gg)
    expected = min_patrolling_set(gg).value == len(gg.bipartition.side_a)
    assert verdict.member == expected
    assert recognize_b_class(gg.graph).member == expected


def test_extremal_is_invariant_under_reordering():
    rng = random.Random(11)
    for seed in range(20):
        grid = random_grid(12, rng_seed=seed, span=6)
        segments = list(grid.segments)
        rng.shuffle(segments)
        assert is_extremal(validate_grid(segments)).member == is_extremal(grid).member


def test_members_pass_the_degree_filter():
    for seed in range(200):
        gg = intersection_graph(random_grid(10, rng_seed=seed, span=5))
        if not recognize_b_class(gg.graph).member:
            continue
        verdict = is_extremal(gg)
        assert verdict.member
        assert verdict.certificate.vertices == gg.bipartition.side_a


def test_exclusive_pair_witnesses_bound_b_degrees():
    grids = [
        hash_shape(),
        lattice(2, 3),
        lattice(2, 5),
        *(random_grid(6 + seed % 8, rng_seed=seed, span=5) for seed in range(300)),
    ]
    checked = 0
    for grid in grids:
        gg = intersection_graph(grid)
        if not has_exclusive_pair_witnesses(gg):
            continue
        checked += 1
        assert max(gg.graph.degree(b) for b in gg.bipartition.side_b) <= 4
    assert checked >= 3

    # The filter does reject grids whose B-side is crowded
    assert not has_exclusive_pair_witnesses(intersection_graph(lattice(3, 3)))


@pytest.mark.slow
def test_many_large_grids_sweep():
    for seed in range(1000):
        grid = random_grid(20 + seed % 181, rng_seed=seed)
        assert sweep_edges(grid.segments)[0] == naive_intersection_edges(grid.segments)


@pytest.mark.slow
def test_many_random_grids():
    for seed in range(1000):
        grid = random_grid(4 + seed % 15, rng_seed=seed, span=7)
        gg = intersection_graph(grid)
        expected = min_patrolling_set(gg).value == len(gg.bipartition.side_a)
        assert is_extremal(gg).member == expected
