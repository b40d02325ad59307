"""Scaling plot for the worst-case benchmark.

Usage:
    Call `plot_scaling()` with the table returned by `bench_worstcase()`.

"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
from matplotlib.figure import Figure


def plot_scaling(table: pd.DataFrame, path_to_png: Path | str | None = None) -> Figure:
    """Plot pair checks against n on log-log axes, with an n² guide through the first point.

    Args:
        table: One row per size, with columns `n` and `pair_checks`.
        path_to_png (optional): Where to save the figure.

    Returns:
        fig: The figure.

    """

    n = table["n"].to_numpy(dtype=float)
    checks = table["pair_checks"].to_numpy(dtype=float)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(n, checks, "o-", color="#b9cdff", markeredgecolor="black", label="pair checks")
    if len(n) and checks[0] > 0:
        ax.loglog(n, checks[0] * np.square(n / n[0]), "--", color="gray", label="n² guide")
    ax.set_xlabel("n")
    ax.set_ylabel("pair checks")
    ax.legend()
    fig.tight_layout()

    if path_to_png is not None:
        fig.savefig(path_to_png, dpi=150)
    plt.close(fig)

    return fig
