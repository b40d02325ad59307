"""Exact exponential-time oracles for domination, covering and independence.

Usage:
    Import functions from `oracles` directly, e.g. `from domcover.core.oracles import gamma`.

"""

from domcover.core.oracles.exact import alpha, beta, gamma
from domcover.core.oracles.predicates import (
    is_cover,
    is_dominating,
    is_independent,
    private_neighborhood,
)
from domcover.core.oracles.sets import alpha_sets, gamma_sets, is_gamma_minus_critical

__all__ = [
    "alpha",
    "alpha_sets",
    "beta",
    "gamma",
    "gamma_sets",
    "is_cover",
    "is_dominating",
    "is_gamma_minus_critical",
    "is_independent",
    "private_neighborhood",
]
