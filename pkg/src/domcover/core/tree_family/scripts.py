"""Replay of build scripts and their line-based text format.

A script file holds one operation per line, `O1 <attacher>` through `O4 <attacher>`, with `#`
starting a comment line. Attachers use encounter ids: K2 is {0, 1} and every operation numbers
its new vertices next, in order.

Usage:
    Call `replay_script()` to rebuild a tree, and `script_to_text()` / `script_from_text()` to
        write or read a script.

"""

from domcover.core.graph_core import build_graph
from domcover.core.tree_family.operations import KINDS, NEW_VERTICES, apply_operation, k2
from domcover.core.tree_family.tree_dp import as_tree
from domcover.utils.classes import BuildScript, RootedTreeView, TreeOp
from domcover.utils.errors import OutOfRange, ParseError, PreconditionViolated


def encounter_ids(script: BuildScript) -> dict[int, int]:
    """Map every script label to its encounter id."""
    dense = {script.base[0]: 0, script.base[1]: 1}
    n = 2
    for op in script.ops:
        new = op.new_ids or tuple(range(n, n + NEW_VERTICES[op.kind]))
        if len(new) != NEW_VERTICES[op.kind]:
            raise PreconditionViolated(
                op.kind, op.attacher, f"expects {NEW_VERTICES[op.kind]} new ids, got {len(new)}"
            )
        for label in new:
            dense[label] = n
            n += 1
    return dense


def replay_script(script: BuildScript) -> RootedTreeView:
    """Rebuild the tree a script describes, labelled with the script's own ids.

    Args:
        script: Operations from K2. Ops without `new_ids` use encounter ids.

    Returns:
        view: The tree, relabelled from encounter ids to the script's ids.

    Raises:
        PreconditionViolated: Some step is not allowed where the script places it.
        OutOfRange: The script's ids are not exactly 0..n-1.

    """

    dense = encounter_ids(script)
    t = k2()
    for op in script.ops:
        if op.attacher not in dense or dense[op.attacher] >= t.graph.n:
            raise PreconditionViolated(op.kind, op.attacher, "not a vertex of the tree")
        t = apply_operation(t, TreeOp(op.kind, dense[op.attacher]))

    labels = sorted(dense, key=dense.__getitem__)
    if labels == list(range(len(labels))):
        return t
    if sorted(labels) != list(range(len(labels))):
        raise OutOfRange(f"ERROR @ replay_script. Script ids {sorted(labels)} are not dense.")

    return as_tree(build_graph(len(labels), [(labels[u], labels[v]) for u, v in t.graph.edges()]))


def script_to_text(script: BuildScript) -> str:
    """Write a script as one `<kind> <attacher>` line per operation, in encounter ids."""
    dense = encounter_ids(script)
    return "".join(f"{op.kind} {dense[op.attacher]}\n" for op in script.ops)


def script_from_text(text: str) -> BuildScript:
    """Read a script written by `script_to_text`.

    Args:
        text: The script, one operation per line.

    Returns:
        script: Operations in encounter ids, with their new ids filled in.

    Raises:
        ParseError: A line is malformed or names a vertex that does not exist yet.

    """

    ops: list[TreeOp] = []
    n = 2
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in KINDS:
            raise ParseError(line_no, f"Expected '<O1|O2|O3|O4> <attacher>', got '{line}'.")
        try:
            attacher = int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"Attacher '{parts[1]}' is not an integer.") from None
        if not 0 <= attacher < n:
            raise ParseError(line_no, f"Attacher {attacher} does not exist yet (tree has {n}).")

        count = NEW_VERTICES[parts[0]]
        ops.append(TreeOp(parts[0], attacher, tuple(range(n, n + count))))  # type: ignore[arg-type]
        n += count

    return BuildScript(ops=tuple(ops))
