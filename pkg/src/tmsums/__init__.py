"""Exponential sums twisted by the binary digit-sum parity sign.

Brute-force oracles, exact logarithmic-time evaluators built on the
even/odd halving identities of eps(n) = (-1)^{popcount(n)}, and a
mechanized pipeline for the square-root cancellation bound of the
quadratic twisted sum on minor arcs.
"""

from .digits import (LAMBDA_GELFOND, GelfondCountReport, ParityClass,
                     SignValue, digit_sum, epsilon, epsilon_block,
                     gelfond_class_counts, gelfond_count,
                     gelfond_deviation_stat, parity_class)
from .oracles import (ComplexValue, CorrelationSumSpec, naive_correlation_sum,
                      naive_gauss_sum, naive_linear_sum, naive_quadratic_sum,
                      restricted_quadratic_sum)
from .fasteval import (CoefficientPair, DescentLevel, DigitDescent,
                       ReductionTrace, descent_coefficients,
                       fast_correlation_sum, fast_linear_sum,
                       geometric_sum_closed, lemma2_reduction, lemma3_eval)
from .bounds import (CorollaryReport, RationalApproximation,
                     ShiftDescentSummary, TheoremReport, VdcReport,
                     best_rational_approximation, choose_parameters,
                     convergent_sequence, corollary_check, farey_fractions,
                     nearest_int_distance, theorem_pipeline,
                     vdc_inequality_check)

__version__ = "0.1.0"

__all__ = [
    "LAMBDA_GELFOND",
    "GelfondCountReport",
    "ParityClass",
    "SignValue",
    "digit_sum",
    "epsilon",
    "epsilon_block",
    "gelfond_class_counts",
    "gelfond_count",
    "gelfond_deviation_stat",
    "parity_class",
    "ComplexValue",
    "CorrelationSumSpec",
    "naive_correlation_sum",
    "naive_gauss_sum",
    "naive_linear_sum",
    "naive_quadratic_sum",
    "restricted_quadratic_sum",
    "CoefficientPair",
    "DescentLevel",
    "DigitDescent",
    "ReductionTrace",
    "descent_coefficients",
    "fast_correlation_sum",
    "fast_linear_sum",
    "geometric_sum_closed",
    "lemma2_reduction",
    "lemma3_eval",
    "CorollaryReport",
    "RationalApproximation",
    "ShiftDescentSummary",
    "TheoremReport",
    "VdcReport",
    "best_rational_approximation",
    "choose_parameters",
    "convergent_sequence",
    "corollary_check",
    "farey_fractions",
    "nearest_int_distance",
    "theorem_pipeline",
    "vdc_inequality_check",
]
