"""The four tree-growing operations and random generation of trees with γ = |A|.

Starting from K2 with A' = {0} and B' = {1}, each operation attaches new vertices to an
existing vertex (the attacher):

* O1 adds a leaf b to an A'-vertex a'.
* O2 adds a leaf a to a B'-vertex b' that is not a leaf and whose neighbors are all supports.
* O3 adds a path a-b with b joined to an A'-vertex a' that is a support.
* O4 adds a path b-a with a joined to a B'-vertex b' that is not γ⁻-critical.

Every tree built this way has domination number |A'|, and A' stays the smaller side of the
bipartition (the side holding vertex 0 on a tie).

Usage:
    Call `apply_operation()` for a single step or `generate_tmax()` for a random tree.

"""

import random
import sys

from domcover.core.graph_core import build_graph, structural_marks
from domcover.core.tree_family.tree_dp import as_tree, is_critical, tree_gamma
from domcover.kwargs import GEN_RETRY_CAP, SEED
from domcover.utils.classes import BuildScript, Colors, Graph, RootedTreeView, TreeOp
from domcover.utils.errors import PreconditionViolated

KINDS = ("O1", "O2", "O3", "O4")

# Side of the attacher and number of new vertices per operation
ATTACHER_SIDE = {"O1": "A", "O2": "B", "O3": "A", "O4": "B"}
NEW_VERTICES = {"O1": 1, "O2": 1, "O3": 2, "O4": 2}


def k2() -> RootedTreeView:
    """The starting tree: a single edge with A' = {0}."""
    return as_tree(build_graph(2, [(0, 1)]))


def check_precondition(t: RootedTreeView, kind: str, attacher: int):
    """Raise unless `attacher` may take an operation of the given kind in `t`.

    Raises:
        PreconditionViolated: With the operation kind, the attacher and the reason.

    """

    g = t.graph
    if kind not in KINDS:
        raise PreconditionViolated(kind, attacher, "unknown operation")
    if not 0 <= attacher < g.n:
        raise PreconditionViolated(kind, attacher, "not a vertex of the tree")

    side = t.bipartition.side_a if ATTACHER_SIDE[kind] == "A" else t.bipartition.side_b
    if attacher not in side:
        raise PreconditionViolated(kind, attacher, f"not on side {ATTACHER_SIDE[kind]}'")

    if kind in ("O2", "O3"):
        marks = structural_marks(g)
        if kind == "O3" and attacher not in marks.supports:
            raise PreconditionViolated(kind, attacher, "not a support")
        if kind == "O2":
            if attacher in marks.leaves:
                raise PreconditionViolated(kind, attacher, "is a leaf")
            if any(w not in marks.supports for w in g.adjacency[attacher]):
                raise PreconditionViolated(kind, attacher, "has a neighbor that is not a support")

    if kind == "O4" and is_critical(g, attacher, tree_gamma(t).value):
        raise PreconditionViolated(kind, attacher, "is γ⁻-critical")


def apply_operation(t: Graph | RootedTreeView, op: TreeOp) -> RootedTreeView:
    """Apply one operation to a tree.

    Args:
        t: A tree grown from K2 (or any tree whose smaller side plays the role of A').
        op: The operation. New vertices always receive the next free ids, n and then n + 1;
            `op.new_ids` is ignored here and only matters when replaying a script.

    Returns:
        view: The enlarged tree. Vertex n is joined to the attacher; for O3 and O4,
            vertex n + 1 hangs from vertex n.

    Raises:
        PreconditionViolated: The attacher does not allow the operation.

    """

    t = as_tree(t)
    check_precondition(t, op.kind, op.attacher)

    n = t.graph.n
    edges = [*t.graph.edges(), (op.attacher, n)]
    if NEW_VERTICES[op.kind] == 2:
        edges.append((n, n + 1))

    return as_tree(build_graph(n + NEW_VERTICES[op.kind], edges))


def generate_tmax(
    steps: int,
    rng_seed: int | None = SEED,
    retry_cap: int = GEN_RETRY_CAP,
    debug: int = 0,
) -> tuple[RootedTreeView, BuildScript]:
    """Grow a random tree from K2 by applying random operations.

    Args:
        steps: Number of operations to apply.
        rng_seed (optional): Seed for the random generator.
        retry_cap (optional): Draws per step before falling back to O1.
        debug (optional): Print every applied operation when 1 or higher.

    Returns:
        view: The tree.
        script: The operations applied, replayable from K2.

    Notes:
        Each draw picks an operation kind uniformly, then an attacher uniformly from the side
            that kind requires. A draw whose precondition fails is discarded. After `retry_cap`
            failed draws the step applies O1 at a random A'-vertex, which is always allowed.

    """

    rng = random.Random(rng_seed)
    t = k2()
    ops: list[TreeOp] = []
    for step in range(steps):
        op = None
        for _ in range(retry_cap):
            kind = rng.choice(KINDS)
            side = t.bipartition.side_a if ATTACHER_SIDE[kind] == "A" else t.bipartition.side_b
            candidate = TreeOp(kind=kind, attacher=rng.choice(sorted(side)))
            try:
                check_precondition(t, candidate.kind, candidate.attacher)
            except PreconditionViolated:
                continue
            op = candidate
            break
        if op is None:
            op = TreeOp(kind="O1", attacher=rng.choice(sorted(t.bipartition.side_a)))

        n = t.graph.n
        op = TreeOp(op.kind, op.attacher, tuple(range(n, n + NEW_VERTICES[op.kind])))
        t = apply_operation(t, op)
        ops.append(op)
        if debug >= 1:
            print(f"{Colors.BLUE}Step {step}: {op.kind} at {op.attacher}.{Colors.RESET}", file=sys.stderr)

    return t, BuildScript(ops=tuple(ops))
