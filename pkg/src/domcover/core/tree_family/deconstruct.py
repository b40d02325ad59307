"""Membership of trees in the operation-built family, by taking the tree apart.

Usage:
    Call `deconstruct()` for a build script (or a `NotMember` outcome), and
        `check_tree_conditions()` for a direct verdict.

"""

import sys

import networkx as nx

from domcover.core.graph_core import from_networkx, is_corona, structural_marks, to_networkx
from domcover.core.recognition.conditions import weak_support_violations
from domcover.core.tree_family.scripts import replay_script
from domcover.core.tree_family.tree_dp import as_tree, tree_gamma
from domcover.utils.classes import (
    BuildScript,
    Colors,
    Graph,
    NotMember,
    RootedTreeView,
    TreeOp,
    Verdict,
    ViolatedCondition,
    WitnessGammaSet,
)
from domcover.utils.errors import TooSmall


def longest_path(nx_g: nx.Graph) -> list[int]:
    """A longest path by double breadth-first search, breaking ties by smallest id."""
    dist = nx.single_source_shortest_path_length(nx_g, min(nx_g.nodes()))
    x0 = min(dist, key=lambda v: (-dist[v], v))
    dist = nx.single_source_shortest_path_length(nx_g, x0)
    xk = min(dist, key=lambda v: (-dist[v], v))
    return nx.shortest_path(nx_g, x0, xk)


def reduce_once(nx_g: nx.Graph, side_a: frozenset[int]) -> TreeOp:
    """Remove the vertices of one reversed operation from the working tree.

    Cases are tried in order: a star loses its smallest leaf (O1); a corona with equal sides
    loses its smallest degree-2 vertex and that vertex's leaf (O3 or O4); the smallest leaf on
    side A goes (O2); otherwise the end of a longest path goes (O1 or O4).

    Args:
        nx_g: The working tree with at least three vertices, mutated in place.
        side_a: The smaller side of the original tree.

    Returns:
        op: The operation that rebuilds what was removed, with the removed ids as new ids.

    """

    nodes = sorted(nx_g.nodes())
    size_a = sum(1 for v in nodes if v in side_a)

    # Star
    center = next((v for v in nodes if nx_g.degree(v) == len(nodes) - 1), None)
    if center is not None:
        leaf = min(v for v in nodes if v != center)
        nx_g.remove_node(leaf)
        return TreeOp("O1", center, (leaf,))

    # Corona with equal sides
    if 2 * size_a == len(nodes) and is_corona(from_networkx(nx_g)):
        v = min(v for v in nodes if nx_g.degree(v) == 2)
        leaf = next(w for w in nx_g.neighbors(v) if nx_g.degree(w) == 1)
        anchor = next(w for w in nx_g.neighbors(v) if w != leaf)
        nx_g.remove_nodes_from([v, leaf])
        return TreeOp("O3" if anchor in side_a else "O4", anchor, (v, leaf))

    # Leaf on side A
    leaf = next((v for v in nodes if v in side_a and nx_g.degree(v) == 1), None)
    if leaf is not None:
        anchor = next(iter(nx_g.neighbors(leaf)))
        nx_g.remove_node(leaf)
        return TreeOp("O2", anchor, (leaf,))

    # Longest path x0, x1, x2, ...
    x0, x1, x2 = longest_path(nx_g)[:3]
    if nx_g.degree(x1) > 2:
        nx_g.remove_node(x0)
        return TreeOp("O1", x1, (x0,))
    nx_g.remove_nodes_from([x0, x1])
    return TreeOp("O4", x2, (x1, x0))


def deconstruct(t: Graph | RootedTreeView, debug: int = 0) -> BuildScript | NotMember:
    """Take a tree apart into a build script, if it has γ equal to its smaller side.

    Args:
        t: A tree with at least two vertices.
        debug (optional): Print every reversed operation when 1 or higher.

    Returns:
        script: Operations from K2 that rebuild `t` with its own ids, or `NotMember` with
            γ(t) and the size of the smaller side when they differ.

    Raises:
        NotATree: `t` is not a tree.
        TooSmall: `t` has fewer than two vertices.

    """

    t = as_tree(t)
    if t.graph.n < 2:
        raise TooSmall(f"ERROR @ deconstruct. Need at least 2 vertices, got {t.graph.n}.")

    side_a = t.bipartition.side_a
    value = tree_gamma(t).value
    if value != len(side_a):
        return NotMember(gamma=value, size_a=len(side_a))

    nx_g = to_networkx(t.graph)
    reversed_ops: list[TreeOp] = []
    while nx_g.number_of_nodes() > 2:
        op = reduce_once(nx_g, side_a)
        reversed_ops.append(op)
        if debug >= 1:
            print(
                f"{Colors.BLUE}Reversed {op.kind} at {op.attacher}, removed {op.new_ids}.{Colors.RESET}",
                file=sys.stderr,
            )

    u, v = sorted(nx_g.nodes())
    script = BuildScript(
        ops=tuple(reversed(reversed_ops)), base=(u, v) if u in side_a else (v, u)
    )
    if replay_script(script).graph != t.graph:
        raise RuntimeError("ERROR @ deconstruct. Replayed script does not rebuild the input tree.")

    return script


def check_tree_conditions(t: Graph | RootedTreeView) -> Verdict:
    """Decide γ = |A| for a tree directly from leaves and supports.

    Args:
        t: A tree with at least two vertices.

    Returns:
        verdict: Member with side A as witness, or the violated condition: "corona-or-c4" for
            equal sides that do not form a corona, "3a" listing offending supports on side B,
            or "3b" listing every interior B-vertex with two or more non-support A-neighbors.

    Raises:
        NotATree: `t` is not a tree.
        TooSmall: `t` has fewer than two vertices.

    """

    t = as_tree(t)
    g = t.graph
    if g.n < 2:
        raise TooSmall(f"ERROR @ check_tree_conditions. Need at least 2 vertices, got {g.n}.")

    side_a, side_b = t.bipartition.side_a, t.bipartition.side_b
    marks = structural_marks(g)
    if len(side_a) == len(side_b):
        if is_corona(g):
            return Verdict(True, WitnessGammaSet(side_a))
        offenders = tuple(v for v in range(g.n) if v not in marks.leaves | marks.weak_supports)
        return Verdict(False, ViolatedCondition("corona-or-c4", offenders))

    if offenders := weak_support_violations(g, side_b, marks):
        return Verdict(False, ViolatedCondition("3a", offenders))

    free_a = side_a - marks.supports
    offenders = tuple(
        z
        for z in sorted(side_b - marks.leaves - marks.supports)
        if sum(1 for w in g.adjacency[z] if w in free_a) > 1
    )
    if offenders:
        return Verdict(False, ViolatedCondition("3b", offenders))

    return Verdict(True, WitnessGammaSet(side_a))
