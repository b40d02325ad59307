"""Utils shared by the recognizers, oracles and the command-line runner.

Usage:
    Call any function/class from a separate script.

"""

from datetime import datetime


def datetime_manager(
    t_1: datetime | None = None, t_2: datetime | None = None
) -> tuple[datetime, float]:
    """Start a timer or calculate times and durations.

    Args:
        t_1 (optional): A pre-existing start time, if available.
        t_2 (optional): A pre-existing end time, if available.

    Returns:
        t_1: A datestamp to be used as start time.
        duration: Seconds elapsed between `t_1` and `t_2` (or now, if no end time is given).

    """

    t_1 = t_1 or datetime.now()
    t_2 = t_2 or datetime.now()
    return t_1, (t_2 - t_1).total_seconds()


def elapsed_ms(t_1: datetime) -> float:
    """Milliseconds elapsed since `t_1`, rounded for reports."""
    _, duration = datetime_manager(t_1=t_1)
    return round(duration * 1000, 3)


def pair_key(x: int, y: int) -> tuple[int, int]:
    """Return an unordered vertex pair as (min id, max id)."""
    return (x, y) if x < y else (y, x)
