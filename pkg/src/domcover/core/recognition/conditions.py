"""Conditions on a maximum independent set that characterize γ = β.

For a connected graph of order at least two and any maximum independent set I, γ = β holds
exactly when all three of the following hold:

1. Every support in I is a weak support, and all its non-leaf neighbors are supports.
2. Every edge outside I joins two supports.
3. Any two vertices outside I ∪ L ∪ S at distance two have at least two common neighbors in I
   whose neighborhood is exactly that pair.

Usage:
    Call `check_cgb_conditions()` with an α-set from `oracles.alpha`, or `condition_report()`
        to see which of the three conditions a given α-set satisfies.

"""

from collections.abc import Iterable
from itertools import combinations

from domcover.core.graph_core import is_connected, structural_marks
from domcover.core.oracles import alpha, is_independent
from domcover.core.recognition.pairs import interior_of, pair_multiplicity_map
from domcover.kwargs import ORACLE_SIZE_CAP
from domcover.utils.classes import (
    Graph,
    StructuralMarks,
    Verdict,
    VertexSet,
    ViolatedCondition,
    WitnessGammaSet,
)
from domcover.utils.errors import Disconnected, NotMaximumIndependent, TooSmall


def weak_support_violations(g: Graph, side: VertexSet, marks: StructuralMarks) -> tuple[int, ...]:
    """Supports in `side` that are not weak, or have a non-leaf neighbor that is not a support."""
    return tuple(
        v
        for v in sorted(marks.supports & side)
        if v not in marks.weak_supports
        or any(w not in marks.leaves and w not in marks.supports for w in g.adjacency[v])
    )


def condition_2(g: Graph, independent: VertexSet, marks: StructuralMarks) -> tuple[int, ...]:
    """Ends of edges outside the set that are not both supports."""
    offenders = set()
    for u, v in g.edges():
        if u in independent or v in independent:
            continue
        if u not in marks.supports or v not in marks.supports:
            offenders.update((u, v))
    return tuple(sorted(offenders))


def condition_3(
    g: Graph, independent: VertexSet, marks: StructuralMarks
) -> tuple[tuple[int, ...], int]:
    """First interior pair at distance two lacking two exclusive witnesses in the set.

    Returns:
        offenders: (x, y, common neighbor) of the failing pair, or empty if the condition holds.
        checks: Pair inspections performed.

    """

    rest = frozenset(range(g.n)) - independent
    interior = interior_of(rest, marks)
    pm = pair_multiplicity_map(g, rest, marks=marks)

    checks = 0
    for w in range(g.n):
        nbrs = [a for a in g.adjacency[w] if a in interior]
        for x, y in combinations(nbrs, 2):
            # Adjacent pairs are at distance one
            if y in g.adjacency[x]:
                continue
            checks += 1
            if pm.count(x, y) < 2:
                return (x, y, w), checks
    return (), checks


def verify_alpha_set(g: Graph, independent: VertexSet, cap: int):
    """Raise unless the set is independent and as large as α(g)."""
    if not is_independent(g, independent):
        raise NotMaximumIndependent(
            f"ERROR @ check_cgb_conditions. {sorted(independent)} is not independent."
        )
    value = alpha(g, cap=cap).value
    if len(independent) != value:
        raise NotMaximumIndependent(
            f"ERROR @ check_cgb_conditions. {sorted(independent)} has size {len(independent)}, α is {value}."
        )


def check_cgb_conditions(
    g: Graph, independent: Iterable[int], cap: int = ORACLE_SIZE_CAP
) -> Verdict:
    """Decide γ = β from a maximum independent set.

    Args:
        g: A connected graph with at least two vertices.
        independent: A maximum independent set of `g`.
        cap (optional): Oracle size cap used to re-verify maximality.

    Returns:
        verdict: Member with the complement of the set as witness, or the first violated
            condition ("1", "2" or "3") with its offending vertices.

    Raises:
        TooSmall: `g` has fewer than two vertices.
        Disconnected: `g` is not connected.
        NotMaximumIndependent: The set is not independent or not maximum.

    """

    if g.n < 2:
        raise TooSmall(f"ERROR @ check_cgb_conditions. Need at least 2 vertices, got {g.n}.")
    if not is_connected(g):
        raise Disconnected("ERROR @ check_cgb_conditions. Graph is not connected.")

    members = frozenset(independent)
    verify_alpha_set(g, members, cap)
    marks = structural_marks(g)

    if offenders := weak_support_violations(g, members, marks):
        return Verdict(False, ViolatedCondition("1", offenders))
    if offenders := condition_2(g, members, marks):
        return Verdict(False, ViolatedCondition("2", offenders))
    offenders, checks = condition_3(g, members, marks)
    if offenders:
        return Verdict(False, ViolatedCondition("3", offenders), pair_checks=checks)

    witness = frozenset(range(g.n)) - members
    return Verdict(True, WitnessGammaSet(witness), pair_checks=checks)


def condition_report(
    g: Graph, independent: Iterable[int], cap: int = ORACLE_SIZE_CAP
) -> dict[str, bool]:
    """Report which of the three conditions a maximum independent set satisfies.

    Args:
        g: A connected graph with at least two vertices.
        independent: A maximum independent set of `g`.
        cap (optional): Oracle size cap used to re-verify maximality.

    Returns:
        report: Condition id ("1", "2", "3") mapped to whether it holds.

    """

    members = frozenset(independent)
    verify_alpha_set(g, members, cap)
    marks = structural_marks(g)
    offenders_3, _ = condition_3(g, members, marks)
    return {
        "1": not weak_support_violations(g, members, marks),
        "2": not condition_2(g, members, marks),
        "3": not offenders_3,
    }
