"""Edge-list graph files.

Format:
    `c <anything>`  comment line.
    `p <n> <m>`     problem line, once, before any edge (`p edge <n> <m>` is also read).
    `e <u> <v>`     one line per edge, with non-negative integer labels.

Labels already in `0..n-1` are used as vertex ids directly. Any other labelling must use exactly
n distinct labels, which are mapped to dense ids in ascending order.

Usage:
    Call `read_graph_file()` on a path or `parse_graph_text()` on a string.

"""

from pathlib import Path

from domcover.core.graph_core import build_graph
from domcover.utils.classes import Edge, Graph
from domcover.utils.errors import ParseError


def parse_int(token: str, line_no: int, what: str) -> int:
    """Read a non-negative integer or fail with the line number."""
    try:
        value = int(token)
    except ValueError:
        raise ParseError(line_no, f"{what} '{token}' is not an integer.") from None
    if value < 0:
        raise ParseError(line_no, f"{what} {value} is negative.")
    return value


def parse_graph_text(text: str) -> tuple[Graph, dict[int, int]]:
    """Read a graph from edge-list text.

    Args:
        text: The file contents.

    Returns:
        g: The graph on dense ids.
        labels: File label for every dense id, as {label: id}.

    Raises:
        ParseError: Malformed line, missing or repeated problem line, edge count mismatch,
            self-loop, repeated edge, or labels that cannot be mapped onto n vertices.

    """

    declared: tuple[int, int] | None = None
    p_line = 0
    raw_edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue

        if parts[0] == "p":
            if declared is not None:
                raise ParseError(line_no, f"Second problem line (first on line {p_line}).")
            if len(parts) == 4 and parts[1] == "edge":
                parts = ["p", parts[2], parts[3]]
            if len(parts) != 3:
                raise ParseError(line_no, f"Expected 'p <n> <m>', got '{raw.strip()}'.")
            declared = (parse_int(parts[1], line_no, "n"), parse_int(parts[2], line_no, "m"))
            p_line = line_no

        elif parts[0] == "e":
            if declared is None:
                raise ParseError(line_no, "Edge before the problem line.")
            if len(parts) != 3:
                raise ParseError(line_no, f"Expected 'e <u> <v>', got '{raw.strip()}'.")
            u, v = (parse_int(p, line_no, "Label") for p in parts[1:])
            if u == v:
                raise ParseError(line_no, f"Self-loop at {u}.")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(line_no, f"Edge {key} repeats line {seen[key]}.")
            seen[key] = line_no
            raw_edges.append((u, v, line_no))

        else:
            raise ParseError(line_no, f"Unknown line type '{parts[0]}'.")

    if declared is None:
        raise ParseError(max(1, len(text.splitlines())), "No problem line.")
    n, m = declared
    if len(raw_edges) != m:
        raise ParseError(p_line, f"Declared {m} edges, found {len(raw_edges)}.")

    used = sorted({label for u, v, _ in raw_edges for label in (u, v)})
    if all(label < n for label in used):
        labels = {i: i for i in range(n)}
    elif len(used) == n:
        labels = {label: i for i, label in enumerate(used)}
    else:
        raise ParseError(p_line, f"Declared {n} vertices, but edges use {len(used)} labels.")

    edges: list[Edge] = [(labels[u], labels[v]) for u, v, _ in raw_edges]
    return build_graph(n, edges), labels


def read_graph_file(path: Path | str) -> tuple[Graph, dict[int, int]]:
    """Read a graph file from disk. See `parse_graph_text`."""
    return parse_graph_text(Path(path).read_text())


def graph_to_text(g: Graph, comment: str | None = None) -> str:
    """Write a graph as edge-list text."""
    lines = [f"c {comment}\n"] if comment else []
    lines.append(f"p {g.n} {g.edge_count}\n")
    lines.extend(f"e {u} {v}\n" for u, v in g.edges())
    return "".join(lines)
