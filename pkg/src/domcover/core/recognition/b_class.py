"""Quadratic-time recognition of bipartite graphs whose γ equals the smaller side.

Usage:
    Call `recognize_b_class()` on a connected bipartite graph.

"""

import sys

from domcover.core.graph_core import (
    bipartition,
    is_connected,
    is_corona,
    is_cycle4,
    structural_marks,
)
from domcover.core.recognition.conditions import weak_support_violations
from domcover.core.recognition.pairs import check_pairs, pair_multiplicity_map
from domcover.kwargs import DENSE_PAIR_THRESHOLD
from domcover.utils.classes import (
    Bipartition,
    Colors,
    Graph,
    StructuralMarks,
    Verdict,
    ViolatedCondition,
    WitnessGammaSet,
)
from domcover.utils.errors import Disconnected, TooSmall


def equal_sides_verdict(g: Graph, sides: Bipartition, marks: StructuralMarks) -> Verdict:
    """Verdict for |A| = |B|: members are exactly the 4-cycle and coronas."""
    if is_cycle4(g) or is_corona(g):
        return Verdict(True, WitnessGammaSet(sides.side_a))
    offenders = tuple(
        v for v in range(g.n) if v not in marks.leaves and v not in marks.weak_supports
    )
    return Verdict(False, ViolatedCondition("corona-or-c4", offenders))


def recognize_b_class(
    g: Graph, dense_threshold: int = DENSE_PAIR_THRESHOLD, debug: int = 0
) -> Verdict:
    """Decide whether γ(g) equals the size of the smaller side of a connected bipartite graph.

    Args:
        g: A connected bipartite graph with at least two vertices.
        dense_threshold (optional): Largest interior size for a dense pair multiplicity matrix.
        debug (optional): Verbosity for stderr diagnostics (0 -> 2).

    Returns:
        verdict: Member with the smaller side as witness, or the violated condition:
            "corona-or-c4" for equal sides, "3a" listing offending supports, or "3b" listing the
            failing pair followed by their common neighbor.

    Raises:
        TooSmall: Fewer than two vertices.
        Disconnected: The graph is not connected.
        NotBipartite: The graph has an odd cycle.

    """

    if g.n < 2:
        raise TooSmall(f"ERROR @ recognize_b_class. Need at least 2 vertices, got {g.n}.")
    if not is_connected(g):
        raise Disconnected("ERROR @ recognize_b_class. Graph is not connected.")

    sides = bipartition(g)
    marks = structural_marks(g)
    if len(sides.side_a) == len(sides.side_b):
        return equal_sides_verdict(g, sides, marks)

    if offenders := weak_support_violations(g, sides.side_b, marks):
        return Verdict(False, ViolatedCondition("3a", offenders))

    pm = pair_multiplicity_map(g, sides.side_a, marks=marks, dense_threshold=dense_threshold)
    failure, checks = check_pairs(g, sorted(sides.side_b), pm, debug=debug)
    if debug >= 1:
        print(
            f"{Colors.BLUE}recognize_b_class: |A|={len(sides.side_a)}, interior={len(pm.index)},",
            f"pair checks={checks}.{Colors.RESET}",
            file=sys.stderr,
        )
    if failure is not None:
        return Verdict(False, ViolatedCondition("3b", failure), pair_checks=checks)

    return Verdict(True, WitnessGammaSet(sides.side_a), pair_checks=checks)
