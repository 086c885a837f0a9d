"""Brute-force O(X) reference evaluators for the twisted exponential sums.

All sums run over 1 <= n <= floor(X); 0 is never included.  Frequencies are
reduced to exact rationals before any phase is formed (see phases), so the
oracle error budget is set purely by double-precision accumulation: absolute
error stays comfortably below 1e-7 for X up to 1e7.

These evaluators are the ground truth that every fast evaluator in the
package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor

import numpy as np

from .digits import epsilon_block
from .phases import Angle, as_phase, phase_fractions, unit_array

#: Values of e(x) = exp(2*pi*i*x) and their accumulations.
ComplexValue = complex

_CHUNK = 1 << 19


@dataclass(frozen=True)
class CorrelationSumSpec:
    """Parameters (Y, h, beta) of the shifted-sign sum
    sum_{n <= Y} eps(n) eps(n+h) e(beta n)."""

    Y: float
    h: int
    beta: float

    def __post_init__(self) -> None:
        if self.h < 1:
            raise ValueError("shift h must be >= 1")
        if floor(self.Y) < 0:
            raise ValueError("cutoff Y must be nonnegative")


def _cutoff(X: float) -> int:
    n = floor(X)
    return max(n, 0)


def _sum_chunks(N: int, num: int, den: int, *, square: bool, signed: bool,
                shift: int = 0, select_n0: bool = False) -> complex:
    """Accumulate sum_{n=1}^{N} w(n) e(num/den * t(n)) in fixed-size chunks.

    t(n) is n or n^2; w(n) is eps(n), eps(n)eps(n+shift), the N0-class
    indicator, or 1.  Chunk order is fixed, so results are reproducible
    bit-for-bit for a given configuration.
    """
    total = 0j
    for lo in range(1, N + 1, _CHUNK):
        hi = min(lo + _CHUNK, N + 1)
        n = np.arange(lo, hi, dtype=np.int64)
        phases = phase_fractions(num, den, n, square=square)
        terms = unit_array(phases)
        if signed:
            signs = epsilon_block(lo, hi).astype(np.float64)
            if shift:
                signs = signs * epsilon_block(lo + shift, hi + shift)
            terms = terms * signs
        elif select_n0:
            mask = epsilon_block(lo, hi) > 0
            terms = terms[mask]
        total += complex(terms.sum())
    return total


def naive_linear_sum(alpha: Angle, X: float) -> ComplexValue:
    """sum_{n <= X} eps(n) e(alpha n)."""
    num, den = as_phase(alpha)
    return _sum_chunks(_cutoff(X), num, den, square=False, signed=True)


def naive_quadratic_sum(alpha: Angle, X: float) -> ComplexValue:
    """sum_{n <= X} eps(n) e(alpha n^2)."""
    num, den = as_phase(alpha)
    return _sum_chunks(_cutoff(X), num, den, square=True, signed=True)


def naive_gauss_sum(alpha: Angle, X: float) -> ComplexValue:
    """sum_{n <= X} e(alpha n^2), no sign twist."""
    num, den = as_phase(alpha)
    return _sum_chunks(_cutoff(X), num, den, square=True, signed=False)


def naive_correlation_sum(spec: CorrelationSumSpec) -> ComplexValue:
    """sum_{n <= Y} eps(n) eps(n+h) e(beta n)."""
    num, den = as_phase(spec.beta)
    return _sum_chunks(_cutoff(spec.Y), num, den, square=False, signed=True,
                       shift=spec.h)


def restricted_quadratic_sum(alpha: Angle, X: float) -> ComplexValue:
    """sum over n <= X restricted to the even-digit-parity class of
    e(alpha n^2), by direct filtering."""
    num, den = as_phase(alpha)
    return _sum_chunks(_cutoff(X), num, den, square=True, signed=False,
                       select_n0=True)
