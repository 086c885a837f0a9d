"""Exact rational phase arithmetic for unit-modulus exponentials.

Every frequency handled by this package is carried as a reduced rational
``num/den`` with ``0 <= num < den``.  A Python float is a dyadic rational,
so converting it via ``float.as_integer_ratio`` is lossless; a
``fractions.Fraction`` is taken as-is.  All phase reductions
``frac(num/den * t)`` are then computed with integer arithmetic, which keeps
the per-term phase error at the final float division only (about 1e-16),
independent of how large ``t`` gets.  Doubling a frequency mod 1 is the
integer map ``num -> 2*num mod den`` and never loses precision, which is
what makes descents of depth ~50 viable.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Union

import numpy as np

Angle = Union[float, int, Fraction, tuple]

TWO_PI = 2.0 * math.pi

# int64 modular products p*t stay below 2^62 as long as both factors are
# below this bound
_I64_MOD_LIMIT = 1 << 31


def as_phase(alpha: Angle) -> tuple[int, int]:
    """Reduce a real frequency to an exact pair (num, den), 0 <= num < den.

    Floats are converted exactly (no rounding beyond what the float itself
    already is); only the value mod 1 is kept since phases enter through
    e(x) = exp(2*pi*i*x).
    """
    if isinstance(alpha, tuple):
        num, den = alpha
        if den <= 0:
            raise ValueError("phase denominator must be positive")
        g = math.gcd(num % den, den)
        return (num % den) // g, den // g
    if isinstance(alpha, Fraction):
        num, den = alpha.numerator, alpha.denominator
        return num % den, den
    if isinstance(alpha, int):
        return 0, 1
    x = float(alpha)
    if not math.isfinite(x):
        raise ValueError(f"non-finite frequency: {x}")
    num, den = x.as_integer_ratio()
    return num % den, den


def double_phase(num: int, den: int) -> tuple[int, int]:
    """Frequency doubling mod 1, exact."""
    return (2 * num) % den, den


def scale_phase(num: int, den: int, k: int) -> tuple[int, int]:
    """Integer multiple k*num/den mod 1, exact."""
    return (k * num) % den, den


def phase_fraction(num: int, den: int, t: int) -> float:
    """frac(num/den * t) as a float, reduction done in exact integers."""
    return ((num * t) % den) / den


def unit(num: int, den: int) -> complex:
    """e(num/den) = exp(2*pi*i*num/den)."""
    return cmath.exp(2j * math.pi * (num / den))


def cexp(x: float) -> complex:
    """e(x) = exp(2*pi*i*x) for a plain float argument."""
    return cmath.exp(2j * math.pi * x)


def norm_distance(num: int, den: int) -> Fraction:
    """Distance from num/den to the nearest integer, exact."""
    k = num % den
    return Fraction(min(k, den - k), den)


def phase_fractions(num: int, den: int, n: np.ndarray, square: bool = False) -> np.ndarray:
    """Vectorized frac(num/den * t) for t = n (or n*n), n a nonnegative
    integer array.

    Three strategies, all exact up to the final float division:
    power-of-two denominators up to 2^64 use wrapping uint64 products
    (wrapping mod 2^64 preserves residues mod 2^k for k <= 64); moderate
    general denominators reduce n mod den first so products fit in int64;
    anything else falls back to Python integers.
    """
    num %= den
    if num == 0:
        return np.zeros(len(n), dtype=np.float64)
    if den & (den - 1) == 0 and den <= (1 << 64):
        # uint64 products wrap mod 2^64, which is exact mod 2^k for k <= 64
        mask = np.uint64(den - 1)
        t = n.astype(np.uint64)
        if square:
            t = t * t
        v = (np.uint64(num) * t) & mask
        return v.astype(np.float64) / float(den)
    if den < _I64_MOD_LIMIT:
        t = n.astype(np.int64) % den
        if square:
            t = (t * t) % den
        v = (np.int64(num) * t) % den
        return v.astype(np.float64) / float(den)
    t_list = n.tolist()
    if square:
        vals = [(num * t * t) % den for t in t_list]
    else:
        vals = [(num * t) % den for t in t_list]
    # int/int true division stays correct even when den overflows float range
    return np.array([v / den for v in vals], dtype=np.float64)


def unit_array(phases: np.ndarray) -> np.ndarray:
    """exp(2*pi*i*x) elementwise."""
    return np.exp(2j * np.pi * phases)
