"""Exact segment coordinates and validation of grids.

Coordinates arrive as decimal strings and are multiplied by the smallest power of ten that
turns all of them into integers, so every comparison below is exact.

Usage:
    Call `segments_from_decimals()` on raw rows, then `validate_grid()` on the result.

"""

from collections import defaultdict
from collections.abc import Sequence
from decimal import Decimal, InvalidOperation

from domcover.core.graph_core import build_graph, components
from domcover.core.grid_guarding.sweep import sweep_edges
from domcover.utils.classes import Grid, Segment
from domcover.utils.errors import (
    CollinearOverlap,
    DegenerateSegment,
    DisconnectedUnion,
    DuplicateSegment,
    GridError,
    TooFewSegments,
)


###########
# SCALING #
###########
def decimal_places(d: Decimal) -> int:
    """Digits after the decimal point once trailing zeros are dropped."""
    _, digits, exponent = d.as_tuple()
    if not any(digits):
        return 0
    trailing = len(digits) - len("".join(map(str, digits)).rstrip("0"))
    return max(0, -(exponent + trailing))  # type: ignore[operator]


def scaled_int(d: Decimal, scale: int) -> int:
    """`d` times `10**scale` as an exact integer; `scale` must cover `decimal_places(d)`."""
    sign, digits, exponent = d.as_tuple()
    mantissa = int("".join(map(str, digits)))
    shift = exponent + scale  # type: ignore[operator]
    value = mantissa * 10**shift if shift >= 0 else mantissa // 10**-shift
    return -value if sign else value


def segments_from_decimals(
    rows: Sequence[tuple[str, str, str, str]],
) -> tuple[list[Segment], int]:
    """Turn `(orientation, fixed, end, end)` string rows into scaled-integer segments.

    Args:
        rows: One row per segment; endpoints may come in either order.

    Returns:
        segments: Segments with `lo <= hi`, in the order given.
        scale: The power of ten every coordinate was multiplied by.

    Raises:
        GridError: An orientation other than H or V, or a coordinate that is not a finite
            decimal.

    """

    parsed: list[tuple[str, Decimal, Decimal, Decimal]] = []
    for i, (orientation, *coords) in enumerate(rows):
        if orientation not in ("H", "V"):
            raise GridError(
                f"ERROR @ segments_from_decimals. Segment {i}: bad orientation.", (i,)
            )
        try:
            values = [Decimal(c) for c in coords]
        except InvalidOperation:
            raise GridError(
                f"ERROR @ segments_from_decimals. Segment {i}: bad coordinate in {coords}.", (i,)
            ) from None
        if not all(v.is_finite() for v in values):
            raise GridError(f"ERROR @ segments_from_decimals. Segment {i}: not finite.", (i,))
        parsed.append((orientation, *values))

    scale = max((decimal_places(v) for row in parsed for v in row[1:]), default=0)
    segments = []
    for orientation, fixed, a, b in parsed:
        fixed_i, a_i, b_i = (scaled_int(v, scale) for v in (fixed, a, b))
        segments.append(Segment(orientation, fixed_i, min(a_i, b_i), max(a_i, b_i)))  # type: ignore[arg-type]

    return segments, scale


def to_decimal(value: int, scale: int) -> str:
    """Write a scaled integer back out as a plain decimal string."""
    if scale == 0:
        return str(value)
    whole, frac = divmod(abs(value), 10**scale)
    return f"{'-' if value < 0 else ''}{whole}.{frac:0{scale}d}"


##############
# VALIDATION #
##############
def collinear_overlaps(segments: Sequence[Segment]) -> tuple[int, int] | None:
    """Find two collinear segments sharing a point, as (index, index), if any."""
    lines: defaultdict[tuple[str, int], list[int]] = defaultdict(list)
    for i, s in enumerate(segments):
        lines[(s.orientation, s.fixed)].append(i)

    for ids in lines.values():
        ids.sort(key=lambda i: (segments[i].lo, segments[i].hi))
        reach = ids[0]
        for i in ids[1:]:
            if segments[i].lo <= segments[reach].hi:
                return (reach, i) if reach < i else (i, reach)
            if segments[i].hi > segments[reach].hi:
                reach = i
    return None


def validate_grid(segments: Sequence[Segment], scale: int = 0) -> Grid:
    """Check that a family of segments is a grid and attach its intersection graph.

    Args:
        segments: Axis-parallel closed segments.
        scale (optional): Power of ten the coordinates were scaled by.

    Returns:
        grid: The validated grid.

    Raises:
        TooFewSegments: Fewer than two segments.
        DegenerateSegment: A segment with `lo >= hi`.
        DuplicateSegment: Two identical segments.
        CollinearOverlap: Two collinear segments share a point (touching ends included).
        DisconnectedUnion: The union of the segments is not connected.

    """

    segments = tuple(segments)
    if len(segments) < 2:
        raise TooFewSegments(
            f"ERROR @ validate_grid. Need at least 2 segments, got {len(segments)}."
        )

    for i, s in enumerate(segments):
        if s.lo >= s.hi:
            raise DegenerateSegment(f"ERROR @ validate_grid. Segment {s} has no length.", (i,))

    first_seen: dict[Segment, int] = {}
    for i, s in enumerate(segments):
        if s in first_seen:
            raise DuplicateSegment(
                f"ERROR @ validate_grid. Segment {s} is given twice.", (first_seen[s], i)
            )
        first_seen[s] = i

    if overlap := collinear_overlaps(segments):
        raise CollinearOverlap(
            f"ERROR @ validate_grid. Collinear segments {overlap} share a point.", overlap
        )

    # A union of connected sets is connected exactly when their intersection graph is
    edges, stats = sweep_edges(segments)
    graph = build_graph(len(segments), edges)
    parts = components(graph)
    if len(parts) > 1:
        raise DisconnectedUnion(
            f"ERROR @ validate_grid. Union splits into {len(parts)} pieces.",
            tuple(sorted(parts[1])),
        )

    return Grid(
        segments=segments,
        vertical_ids=frozenset(i for i, s in enumerate(segments) if s.orientation == "V"),
        horizontal_ids=frozenset(i for i, s in enumerate(segments) if s.orientation == "H"),
        scale=scale,
        graph=graph,
        sweep_stats=stats,
    )
