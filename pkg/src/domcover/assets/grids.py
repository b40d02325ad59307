"""Fixture grids.

Usage:
    Call any function for a validated grid, e.g. `hash_shape()`.

"""

from domcover.core.grid_guarding import validate_grid
from domcover.utils.classes import Grid, Segment


def plus_sign() -> Grid:
    """One vertical crossing one horizontal."""
    return validate_grid([Segment("V", 1, 0, 2), Segment("H", 1, 0, 2)])


def hash_shape() -> Grid:
    """Two verticals and two horizontals, each crossing both."""
    return lattice(2, 2)


def comb(teeth: int) -> Grid:
    """One horizontal crossed by `teeth` verticals."""
    return validate_grid(
        [Segment("H", 1, 0, 2 * teeth), *(Segment("V", 2 * i + 1, 0, 2) for i in range(teeth))]
    )


def lattice(horizontals: int, verticals: int) -> Grid:
    """Full lattice: every horizontal crosses every vertical, horizontals first."""
    return validate_grid(
        [
            *(Segment("H", i + 1, 0, verticals + 1) for i in range(horizontals)),
            *(Segment("V", j + 1, 0, horizontals + 1) for j in range(verticals)),
        ]
    )


def endpoint_touch() -> Grid:
    """A vertical whose top end lies on a horizontal, and one touching its right end."""
    return validate_grid(
        [Segment("H", 2, 0, 4), Segment("V", 1, 0, 2), Segment("V", 4, 2, 5)]
    )
