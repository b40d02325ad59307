"""Polynomial-time class recognizers and the quadratic-work generator.

Usage:
    Import functions from `recognition` directly, e.g. `from domcover.core.recognition import recognize_b_class`.

"""

from domcover.core.recognition.b_class import recognize_b_class
from domcover.core.recognition.cgb_poly import recognize_cgb_poly
from domcover.core.recognition.conditions import check_cgb_conditions, condition_report
from domcover.core.recognition.pairs import (
    PairMultiplicityMap,
    check_pairs,
    pair_bound_holds,
    pair_multiplicity_map,
)
from domcover.core.recognition.worstcase import bench_worstcase, gen_worstcase

__all__ = [
    "PairMultiplicityMap",
    "bench_worstcase",
    "check_cgb_conditions",
    "check_pairs",
    "condition_report",
    "gen_worstcase",
    "pair_bound_holds",
    "pair_multiplicity_map",
    "recognize_b_class",
    "recognize_cgb_poly",
]
