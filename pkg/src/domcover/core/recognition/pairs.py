"""Pair multiplicities and the memoized pair check shared by the recognizers.

Two interior vertices x, y (neither a leaf nor a support) on the dominating side of a candidate
split need at least two exclusive common neighbors: degree-2 vertices whose neighborhood is
exactly {x, y}. The map below counts those witnesses per pair, and `check_pairs` walks every
pair that actually shares a neighbor, testing each distinct pair against the map at most once.

Usage:
    Build a map with `pair_multiplicity_map()`, then call `check_pairs()` with the per-vertex
        neighbor lists to inspect.

"""

import sys
from collections.abc import Iterable
from itertools import combinations

import numpy as np

from domcover.core.graph_core import structural_marks
from domcover.kwargs import DENSE_PAIR_THRESHOLD
from domcover.utils.classes import Colors, Graph, StructuralMarks, Vertex
from domcover.utils.core import pair_key


class PairMultiplicityMap:
    """Count of exclusive degree-2 witnesses per unordered pair of interior vertices.

    Counts live in a dense upper-triangular matrix while the interior side is small enough,
    and in a dictionary keyed by (min id, max id) above that.

    Attributes:
        index: Position of every interior vertex in the matrix.
        dense: Whether the matrix is in use.

    """

    def __init__(self, interior: Iterable[Vertex], dense_threshold: int = DENSE_PAIR_THRESHOLD):
        """Prepare an empty map over the given interior vertices."""
        self.index: dict[int, int] = {v: i for i, v in enumerate(sorted(interior))}
        self.dense = len(self.index) <= dense_threshold
        self.matrix = np.zeros((len(self.index),) * 2, dtype=np.int32) if self.dense else None
        self.sparse: dict[tuple[int, int], int] = {}

    def __contains__(self, v: Vertex) -> bool:
        """Check whether a vertex is interior."""
        return v in self.index

    def add(self, x: Vertex, y: Vertex):
        """Record one more witness for the pair {x, y}."""
        if self.matrix is not None:
            i, j = sorted((self.index[x], self.index[y]))
            self.matrix[i, j] += 1
        else:
            key = pair_key(x, y)
            self.sparse[key] = self.sparse.get(key, 0) + 1

    def count(self, x: Vertex, y: Vertex) -> int:
        """Number of witnesses recorded for {x, y}."""
        if self.matrix is not None:
            i, j = sorted((self.index[x], self.index[y]))
            return int(self.matrix[i, j])
        return self.sparse.get(pair_key(x, y), 0)

    def pairs(self) -> dict[tuple[int, int], int]:
        """Every stored pair with its count, keyed by (min id, max id)."""
        if self.matrix is None:
            return dict(self.sparse)
        vertices = sorted(self.index)
        rows, cols = np.nonzero(self.matrix)
        return {
            (vertices[i], vertices[j]): int(self.matrix[i, j])
            for i, j in zip(rows.tolist(), cols.tolist())
        }


def interior_of(side: Iterable[Vertex], marks: StructuralMarks) -> frozenset[int]:
    """Members of `side` that are neither leaves nor supports."""
    return frozenset(side) - marks.leaves - marks.supports


def pair_multiplicity_map(
    g: Graph,
    side: Iterable[Vertex],
    marks: StructuralMarks | None = None,
    dense_threshold: int = DENSE_PAIR_THRESHOLD,
) -> PairMultiplicityMap:
    """Build the pair multiplicity map for one side of a candidate split.

    Args:
        g: The graph.
        side: The side expected to be a minimum dominating set.
        marks (optional): Precomputed structural marks.
        dense_threshold (optional): Largest interior size stored as a dense matrix.

    Returns:
        pm: Multiplicities over pairs of interior vertices of `side`, counting vertices
            outside `side` of degree two whose two neighbors are both interior.

    """

    marks = marks or structural_marks(g)
    members = frozenset(side)
    pm = PairMultiplicityMap(interior_of(members, marks), dense_threshold=dense_threshold)
    for z in range(g.n):
        if z in members or marks.degrees[z] != 2:
            continue
        x, y = g.adjacency[z]
        if x in pm and y in pm:
            pm.add(x, y)
    return pm


def pair_bound_holds(pm: PairMultiplicityMap, n: int) -> bool:
    """Check that at most n/2 pairs have two or more witnesses."""
    return 2 * sum(1 for count in pm.pairs().values() if count >= 2) <= n


def check_pairs(
    g: Graph,
    outside: Iterable[Vertex],
    pm: PairMultiplicityMap,
    debug: int = 0,
) -> tuple[tuple[int, int, int] | None, int]:
    """Confirm every interior pair sharing a neighbor has two exclusive witnesses.

    Args:
        g: The graph.
        outside: Vertices whose interior neighbor lists are inspected, in the order given.
        pm: The pair multiplicity map.
        debug (optional): Print every pair inspection when 2 or higher.

    Returns:
        failure: (x, y, common neighbor) of the first failing pair, or None if all pass.
        checks: Pair inspections performed, memoized ones included.

    """

    verified: set[tuple[int, int]] = set()
    checks = 0
    for b in outside:
        nbrs = [a for a in g.adjacency[b] if a in pm]
        for x, y in combinations(nbrs, 2):
            checks += 1
            key = (x, y)
            if key in verified:
                continue
            if pm.count(x, y) < 2:
                if debug >= 2:
                    print(f"{Colors.YELLOW}Pair {key} via {b}: fails.{Colors.RESET}", file=sys.stderr)
                return (x, y, b), checks
            if debug >= 2:
                print(f"{Colors.BLUE}Pair {key} via {b}: ok.{Colors.RESET}", file=sys.stderr)
            verified.add(key)
    return None, checks
