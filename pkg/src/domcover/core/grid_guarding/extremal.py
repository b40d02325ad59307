"""Grids that need as many guards as their smaller family of parallel segments.

A guard travels along one segment and sees every segment crossing it, so a set of guards
patrols the grid exactly when it dominates the intersection graph. That graph is bipartite
with verticals on one side and horizontals on the other, so the question reduces to γ = |A|
for the smaller side A. On grids, every B-segment meets at most four segments of
A' = A - (L ∪ S) in any member, which keeps the final pair lookups linear.

Usage:
    Call `is_extremal()` for a verdict, or `min_patrolling_set()` for a brute-force answer.

"""

import sys
from bisect import bisect_left
from collections import Counter
from itertools import combinations

from domcover.core.graph_core import is_corona, is_cycle4, structural_marks
from domcover.core.grid_guarding.sweep import intersection_graph
from domcover.core.oracles import gamma
from domcover.core.recognition.conditions import weak_support_violations
from domcover.kwargs import ORACLE_SIZE_CAP
from domcover.utils.classes import (
    Colors,
    Grid,
    GridGraph,
    OracleResult,
    Verdict,
    ViolatedCondition,
    WitnessGammaSet,
)
from domcover.utils.core import pair_key

# Largest |N(b) ∩ A'| a member can have
GRID_DEGREE_BOUND = 4


def is_extremal(grid: Grid | GridGraph, debug: int = 0) -> Verdict:
    """Decide whether the fewest guards patrolling a grid equals min(|verticals|, |horizontals|).

    Args:
        grid: A validated grid, or its intersection graph.
        debug (optional): Verbosity for stderr diagnostics (0 -> 2).

    Returns:
        verdict: Member with the smaller family as witness, or the violated condition:
            "corona-or-c4" for equal families, "3a" listing offending supports,
            "degree-bound" naming a B-segment that meets five or more A'-segments, or "3b"
            naming a pair of A'-segments and a B-segment that crosses both. `pair_checks`
            counts the lookups into the sorted pair list.

    """

    gg = grid if isinstance(grid, GridGraph) else intersection_graph(grid)
    g = gg.graph
    side_a, side_b = gg.bipartition.side_a, gg.bipartition.side_b
    marks = structural_marks(g)

    if len(side_a) == len(side_b):
        if is_cycle4(g) or is_corona(g):
            return Verdict(True, WitnessGammaSet(side_a))
        offenders = tuple(v for v in range(g.n) if v not in marks.leaves | marks.weak_supports)
        return Verdict(False, ViolatedCondition("corona-or-c4", offenders))

    if offenders := weak_support_violations(g, side_b, marks):
        return Verdict(False, ViolatedCondition("3a", offenders))

    free_a = side_a - marks.leaves - marks.supports
    lists = {b: [a for a in g.adjacency[b] if a in free_a] for b in sorted(side_b)}
    for b, nbrs in lists.items():
        if len(nbrs) > GRID_DEGREE_BOUND:
            return Verdict(False, ViolatedCondition("degree-bound", (b,)))

    # Pairs {x, y} from every degree-2 B-segment whose two neighbors are in A'
    witnesses: dict[tuple[int, int], int] = {}
    raw: list[tuple[int, int]] = []
    for b in sorted(side_b):
        if marks.degrees[b] == 2 and len(lists[b]) == 2:
            key = pair_key(*lists[b])
            raw.append(key)
            witnesses.setdefault(key, b)
    raw.sort()
    counts = Counter(raw)
    if singles := [key for key in raw if counts[key] == 1]:
        x, y = singles[0]
        return Verdict(False, ViolatedCondition("3b", (x, y, witnesses[(x, y)])))

    unique = sorted(counts)
    checks = 0
    for b, nbrs in lists.items():
        for x, y in combinations(nbrs, 2):
            checks += 1
            i = bisect_left(unique, (x, y))
            if i == len(unique) or unique[i] != (x, y):
                if debug >= 2:
                    print(
                        f"{Colors.YELLOW}Pair {(x, y)} via {b}: missing.{Colors.RESET}",
                        file=sys.stderr,
                    )
                return Verdict(False, ViolatedCondition("3b", (x, y, b)), pair_checks=checks)

    if debug >= 1:
        print(
            f"{Colors.BLUE}is_extremal: |A|={len(side_a)}, |A'|={len(free_a)},",
            f"pairs={len(unique)}, lookups={checks}.{Colors.RESET}",
            file=sys.stderr,
        )

    return Verdict(True, WitnessGammaSet(side_a), pair_checks=checks)


def min_patrolling_set(grid: Grid | GridGraph, cap: int = ORACLE_SIZE_CAP) -> OracleResult:
    """Fewest segments whose guards patrol the whole grid, by exhaustive search.

    Raises:
        SizeCapExceeded: The grid has more than `cap` segments.

    """

    gg = grid if isinstance(grid, GridGraph) else intersection_graph(grid)
    return gamma(gg.graph, cap=cap)
