"""Bipartite graphs on which the pair check does quadratic work.

Start from p vertices with every pair joined by two parallel edges, add n - p² independent
vertices joined to all p of them, then subdivide each parallel edge once. With p = ⌊√n / 2⌋ the
result has exactly n vertices, no leaves, and the p original vertices form a minimum dominating
set, yet every added vertex carries C(p, 2) pairs to inspect.

Usage:
    Call `gen_worstcase(n)` with n >= 16, or `bench_worstcase(sizes)` for a scaling table.

"""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import combinations
from math import comb, isqrt
from typing import Any

import pandas as pd

from domcover.core.graph_core import build_graph
from domcover.core.recognition.b_class import recognize_b_class
from domcover.kwargs import DENSE_PAIR_THRESHOLD
from domcover.utils.classes import Graph
from domcover.utils.core import datetime_manager, elapsed_ms
from domcover.utils.errors import TooSmall


def gen_worstcase(n: int) -> Graph:
    """Build the n-vertex member of the quadratic-work family.

    Args:
        n: Number of vertices, at least 16.

    Returns:
        g: Vertices 0..p-1 form side A, then two subdivision vertices per pair of A
            (pairs in lexicographic order), then the n - p² vertices adjacent to all of A.

    Raises:
        TooSmall: n < 16.

    """

    if n < 16:
        raise TooSmall(f"ERROR @ gen_worstcase. Need n >= 16, got {n}.")

    p = isqrt(n) // 2
    edges: list[tuple[int, int]] = []
    nxt = p
    for x, y in combinations(range(p), 2):
        for _ in range(2):
            edges.extend([(x, nxt), (y, nxt)])
            nxt += 1
    for z in range(nxt, nxt + n - p * p):
        edges.extend((a, z) for a in range(p))

    total = p + 2 * comb(p, 2) + n - p * p
    if total != n or nxt + n - p * p != n:
        raise RuntimeError(f"ERROR @ gen_worstcase. Built {total} vertices, expected {n}.")

    return build_graph(n, edges)


def bench_row(n: int, dense_threshold: int = DENSE_PAIR_THRESHOLD) -> dict[str, Any]:
    """Recognize one worst-case graph and time it."""
    g = gen_worstcase(n)
    t_1, _ = datetime_manager()
    verdict = recognize_b_class(g, dense_threshold=dense_threshold)
    return {
        "n": n,
        "m": g.edge_count,
        "member": verdict.member,
        "pair_checks": verdict.pair_checks,
        "elapsed_ms": elapsed_ms(t_1),
    }


def bench_worstcase(
    sizes: list[int], jobs: int = 1, dense_threshold: int = DENSE_PAIR_THRESHOLD
) -> pd.DataFrame:
    """Recognize the worst-case graph for every size and tabulate the work.

    Args:
        sizes: Vertex counts, each at least 16.
        jobs (optional): Worker processes; sizes run concurrently when above 1.
        dense_threshold (optional): Passed through to the recognizer.

    Returns:
        table: Columns n, m, member, pair_checks, elapsed_ms and ratio, the last being
            pair_checks over the previous row's pair_checks.

    Raises:
        TooSmall: Some size is below 16.

    """

    for n in sizes:
        if n < 16:
            raise TooSmall(f"ERROR @ bench_worstcase. Need n >= 16, got {n}.")

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(partial(bench_row, dense_threshold=dense_threshold), sizes))
    else:
        rows = [bench_row(n, dense_threshold=dense_threshold) for n in sizes]

    table = pd.DataFrame(rows, columns=["n", "m", "member", "pair_checks", "elapsed_ms"])
    table["ratio"] = table["pair_checks"] / table["pair_checks"].shift(1)
    return table
