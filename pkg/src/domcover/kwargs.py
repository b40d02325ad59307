"""Hyperparameters for use by the recognizers, oracles and generators.

Usage:
    Import hyperparameters before calling any operation that accepts them,
        or let `check_assemble_kwargs` auto-complete whatever is missing.

Example:
    The following demonstrates how you would call and use hyperparameters.

    ::

        # Import the hyperparameters.
        from domcover.kwargs import ORACLE_SIZE_CAP, SEED

        # Assemble hyperparameters as kwargs
        kwargs = {
            "cap": ORACLE_SIZE_CAP,
            "seed": SEED,
            "log_stats": False,
            "debug": 0,
        }

Notes:
    It follows from the example above that it is also possible to give domcover
        an entirely different set of hyperparameters.

"""

# Largest graph (in vertices) the exact exponential oracles will touch
ORACLE_SIZE_CAP = 24

# Above this many A'-vertices, the pair multiplicity map switches from a dense matrix to a hash map
DENSE_PAIR_THRESHOLD = 4096

# Re-samples per step when a randomly drawn tree operation is not applicable
GEN_RETRY_CAP = 64

# Single seed to use across any randomised operations
SEED = None

# Trigger automated CSV stats logs
LOG_STATS = False

# Turn debug mode on, with increasing level of verbosity: 0 -> 2
DEBUG = 0
