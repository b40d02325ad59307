"""Random grids and the grid text format.

Usage:
    Call `random_grid(n, seed)` for a connected grid of n segments and `grid_to_text()` to write
        any grid out as `H <y> <x1> <x2>` / `V <x> <y1> <y2>` lines.

"""

import random

from domcover.core.grid_guarding.segments import to_decimal, validate_grid
from domcover.kwargs import GEN_RETRY_CAP, SEED
from domcover.utils.classes import Grid, Segment


def overlaps_collinear(candidate: Segment, segments: list[Segment]) -> bool:
    """Check whether a segment shares a point with any segment on the same line."""
    return any(
        s.orientation == candidate.orientation
        and s.fixed == candidate.fixed
        and s.lo <= candidate.hi
        and candidate.lo <= s.hi
        for s in segments
    )


def random_grid(
    n: int, rng_seed: int | None = SEED, span: int | None = None, retry_cap: int = GEN_RETRY_CAP
) -> Grid:
    """Grow a connected grid one segment at a time.

    Args:
        n: Number of segments, at least 2.
        rng_seed (optional): Seed for the random generator.
        span (optional): Longest segment, in lattice units. Defaults to max(4, n).
        retry_cap (optional): Rejected draws allowed per added segment.

    Returns:
        grid: A validated grid on integer coordinates.

    Notes:
        Every new segment crosses (or touches) a randomly chosen earlier segment, so the union
            stays connected. Draws that would overlap a collinear segment are rejected.

    Raises:
        TooFewSegments: n < 2.
        RuntimeError: A segment could not be placed within `retry_cap` draws.

    """

    rng = random.Random(rng_seed)
    span = span or max(4, n)
    lo = rng.randint(0, span)
    segments = [Segment("H", rng.randint(0, span), lo, lo + rng.randint(1, span))]
    while len(segments) < n:
        for _ in range(retry_cap):
            parent = rng.choice(segments)
            at = rng.randint(parent.lo, parent.hi)
            below = rng.randint(0, span - 1)
            candidate = Segment(
                "V" if parent.orientation == "H" else "H",
                at,
                parent.fixed - below,
                parent.fixed + rng.randint(1 if below == 0 else 0, span - below),
            )
            if not overlaps_collinear(candidate, segments):
                segments.append(candidate)
                break
        else:
            raise RuntimeError(
                f"ERROR @ random_grid. No room for segment {len(segments)} after {retry_cap} draws."
            )

    return validate_grid(segments[:n])


def grid_to_text(grid: Grid) -> str:
    """Write a grid as one `<H|V> <fixed> <lo> <hi>` line per segment, in index order."""
    return "".join(
        f"{s.orientation} {to_decimal(s.fixed, grid.scale)} {to_decimal(s.lo, grid.scale)} "
        f"{to_decimal(s.hi, grid.scale)}\n"
        for s in grid.segments
    )
