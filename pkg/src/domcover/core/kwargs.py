"""Read and/or auto-complete incoming KWARGs.

KWARGs can be passed by `check_assemble_kwargs` to ensure all KWARGs are present
and auto-complete any KWARGs missing in call. In practice, this means the user should
only specifically give KWARGs when he/she desires to deviate from the default values
given in `./kwargs.py`.

Usage:
    Call `check_assemble_kwargs()` programmatically from a separate script.

"""

from typing import Any

from domcover.kwargs import (
    DEBUG,
    DENSE_PAIR_THRESHOLD,
    GEN_RETRY_CAP,
    LOG_STATS,
    ORACLE_SIZE_CAP,
    SEED,
)
from domcover.utils.core import datetime_manager

DEFAULTS: dict[str, Any] = {
    "cap": ORACLE_SIZE_CAP,
    "dense_threshold": DENSE_PAIR_THRESHOLD,
    "retry_cap": GEN_RETRY_CAP,
    "seed": SEED,
    "log_stats": LOG_STATS,
    "log_stats_id": None,
    "debug": DEBUG,
}


##################
# KWARGs MANAGER #
##################
def check_assemble_kwargs(**kwargs) -> dict[str, Any]:
    """Check if all kwargs are present and add any missing.

    Args:
        **kwargs: See `./kwargs.py` for a comprehensive breakdown.
            NB! If an arbitrary kwarg is not given explicitly, this function will auto-complete it
            based on `./src/domcover/kwargs.py`.

    Returns:
        kwargs: A full set of kwargs.

    """

    for key, value in DEFAULTS.items():
        if key not in kwargs or (kwargs[key] is None and value is not None):
            kwargs[key] = value

    # Create unique run ID if stats logging is on
    if kwargs["log_stats"] and kwargs["log_stats_id"] is None:
        timestamp, _ = datetime_manager()
        kwargs["log_stats_id"] = timestamp.strftime("%Y%m%d_%H%M%S_%f")

    return kwargs
