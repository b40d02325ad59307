"""Intersection graphs of grids by a left-to-right plane sweep.

Horizontal segments enter an ordered structure keyed by y when the sweep reaches their left end
and leave it after their right end. Every vertical segment reports the active horizontals whose
y lies in its span. At equal x, starts come before queries and queries before ends, so segments
that only touch at an endpoint still intersect.

Usage:
    Call `intersection_graph()` on a validated grid. `naive_intersection_edges()` gives the
        same edges by testing all pairs.

"""

from collections.abc import Sequence
from itertools import combinations

from sortedcontainers import SortedList

from domcover.core.graph_core import build_graph
from domcover.utils.classes import Bipartition, Edge, Grid, GridGraph, Segment, SweepStats
from domcover.utils.core import pair_key

# Event order at equal x
START, QUERY, END = 0, 1, 2


def sweep_events(segments: Sequence[Segment]) -> list[tuple[int, int, int, int]]:
    """All sweep events as (x, event type, tiebreak, segment index), sorted."""
    events = []
    for i, s in enumerate(segments):
        if s.orientation == "H":
            events.extend([(s.lo, START, s.fixed, i), (s.hi, END, s.fixed, i)])
        else:
            events.append((s.fixed, QUERY, s.lo, i))
    events.sort()
    return events


def sweep_edges(segments: Sequence[Segment]) -> tuple[list[Edge], SweepStats]:
    """Report every intersecting vertical/horizontal pair.

    Args:
        segments: Axis-parallel closed segments.

    Returns:
        edges: Intersecting pairs as (smaller index, larger index), sorted.
        stats: Queries issued, edges reported, entries walked, binary-search probes and the
            largest active set.

    """

    n = len(segments)
    active = SortedList()
    stats = SweepStats()
    edges: list[Edge] = []
    for _, kind, key, i in sweep_events(segments):
        if kind == START:
            stats.probes += len(active).bit_length()
            active.add((key, i))
            stats.max_active = max(stats.max_active, len(active))
        elif kind == END:
            stats.probes += len(active).bit_length()
            active.remove((key, i))
        else:
            s = segments[i]
            stats.queries += 1
            stats.probes += 2 * len(active).bit_length()
            for _, h in active.irange((s.lo, -1), (s.hi, n)):
                stats.visited += 1
                edges.append(pair_key(i, h))

    stats.reported = len(edges)
    edges.sort()
    return edges, stats


def naive_intersection_edges(segments: Sequence[Segment]) -> list[Edge]:
    """Intersecting pairs by testing every pair of segments, sorted."""
    return [
        (i, j)
        for i, j in combinations(range(len(segments)), 2)
        if segments[i].intersects(segments[j])
    ]


def intersection_graph(grid: Grid) -> GridGraph:
    """Intersection graph of a validated grid.

    Args:
        grid: A grid from `validate_grid`.

    Returns:
        grid_graph: The graph over segment indices, the vertical and horizontal ids with the
            smaller side first (the side holding segment 0 on a tie), and sweep counters.
            The graph and counters of the validation sweep are reused when present.

    """

    graph, stats = grid.graph, grid.sweep_stats
    if graph is None or stats is None:
        edges, stats = sweep_edges(grid.segments)
        graph = build_graph(len(grid.segments), edges)

    sides = (grid.vertical_ids, grid.horizontal_ids)
    if len(sides[0]) > len(sides[1]) or (len(sides[0]) == len(sides[1]) and 0 in sides[1]):
        sides = (sides[1], sides[0])

    return GridGraph(graph=graph, bipartition=Bipartition(*sides), stats=stats)
