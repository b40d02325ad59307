"""Grid files: one segment per line.

Format:
    `H <y> <x1> <x2>`  horizontal segment.
    `V <x> <y1> <y2>`  vertical segment.
    `# <anything>`     comment line.

Coordinates are decimals; endpoints may come in either order.

Usage:
    Call `read_grid_file()` on a path or `parse_grid_text()` on a string. Validation errors keep
        their type and gain the line numbers of the offending segments.

"""

from pathlib import Path

from domcover.core.grid_guarding import segments_from_decimals, validate_grid
from domcover.utils.classes import Grid
from domcover.utils.errors import GridError, ParseError


def parse_grid_text(text: str) -> tuple[Grid, list[int]]:
    """Read and validate a grid.

    Args:
        text: The file contents.

    Returns:
        grid: The validated grid, segments in file order.
        line_numbers: The 1-based line number of every segment.

    Raises:
        ParseError: Malformed line.
        GridError: The segments do not form a grid; the message names the offending lines.

    """

    rows: list[tuple[str, str, str, str]] = []
    line_numbers: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        if len(parts) != 4 or parts[0] not in ("H", "V"):
            raise ParseError(line_no, f"Expected '<H|V> <fixed> <end> <end>', got '{raw.strip()}'.")
        rows.append((parts[0], parts[1], parts[2], parts[3]))
        line_numbers.append(line_no)

    try:
        segments, scale = segments_from_decimals(rows)
        return validate_grid(segments, scale=scale), line_numbers
    except GridError as e:
        lines = [line_numbers[i] for i in e.segment_ids]
        raise type(e)(f"{e} Lines: {lines}.", e.segment_ids) from None


def read_grid_file(path: Path | str) -> tuple[Grid, list[int]]:
    """Read a grid file from disk. See `parse_grid_text`."""
    return parse_grid_text(Path(path).read_text())
