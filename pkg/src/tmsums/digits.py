"""Binary digit layer: digit sums, the parity sign eps(n), and progression
counts of the two digit-parity classes.

Conventions: digit_sum(0) = 0 and eps(0) = +1.  Sums over natural numbers
elsewhere in the package start at n = 1, but the halving recursions reach
n = 0 internally and rely on these values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

import numpy as np

#: Gelfond's exponent ln 3 / ln 4 governing progression-count deviations.
LAMBDA_GELFOND = np.log(3) / np.log(4)

#: eps(n) takes values in {+1, -1}.
SignValue = Literal[1, -1]

_CHUNK = 1 << 20


class ParityClass(Enum):
    """The two classes partitioning the positive integers by digit-sum parity."""

    N0 = 0  # even number of binary ones, eps = +1
    N1 = 1  # odd number of binary ones, eps = -1


def digit_sum(n: int) -> int:
    """Number of ones in the binary expansion of n >= 0."""
    if n < 0:
        raise ValueError("digit_sum expects a nonnegative integer")
    return int(n).bit_count()


def epsilon(n: int) -> SignValue:
    """(-1)**digit_sum(n), the digit-parity sign."""
    return -1 if digit_sum(n) & 1 else 1


def parity_class(n: int) -> ParityClass:
    """Class membership of n: N0 iff digit_sum(n) is even."""
    return ParityClass(digit_sum(n) & 1)


def epsilon_block(start: int, stop: int) -> np.ndarray:
    """eps(n) for n in range(start, stop) as an int8 array."""
    n = np.arange(start, stop, dtype=np.uint64)
    ones = np.bitwise_count(n).astype(np.int8)
    return 1 - 2 * (ones & 1)


@dataclass(frozen=True)
class GelfondCountReport:
    """Count of n <= X with n = l (mod m) in digit-parity class j, together
    with its deviation from the X/(2m) main term."""

    X: int
    m: int
    l: int
    j: int
    count: int
    main_term: float
    deviation: float
    lambda_ratio: float


def gelfond_class_counts(X: int, m: int) -> np.ndarray:
    """Counts T_j(X, l, m) for all classes and residues in one pass.

    Returns a (2, m) integer array indexed by [class j][residue l],
    counting 1 <= n <= X with n = l (mod m) and digit parity j.
    """
    if m < 1:
        raise ValueError("modulus m must be >= 1")
    if X < 1:
        raise ValueError("cutoff X must be >= 1")
    total = np.zeros(2 * m, dtype=np.int64)
    for lo in range(1, X + 1, _CHUNK):
        hi = min(lo + _CHUNK, X + 1)
        n = np.arange(lo, hi, dtype=np.uint64)
        parity = (np.bitwise_count(n) & 1).astype(np.int64)
        residue = (n % np.uint64(m)).astype(np.int64)
        total += np.bincount(parity * m + residue, minlength=2 * m)
    return total.reshape(2, m)


def gelfond_count(X: int, l: int, m: int, j: int) -> GelfondCountReport:
    """T_j(X, l, m) = #{1 <= n <= X : n = l (mod m), n in class j}."""
    if m < 1:
        raise ValueError("modulus m must be >= 1")
    if not 0 <= l < m:
        raise ValueError("residue l must satisfy 0 <= l < m")
    if j not in (0, 1):
        raise ValueError("class index j must be 0 or 1")
    X = int(X)
    count = int(gelfond_class_counts(X, m)[j, l])
    main = X / (2 * m)
    dev = count - main
    return GelfondCountReport(
        X=X,
        m=m,
        l=l,
        j=j,
        count=count,
        main_term=main,
        deviation=dev,
        lambda_ratio=abs(dev) / X**LAMBDA_GELFOND,
    )


def gelfond_deviation_stat(X: int, m_max: int) -> float:
    """max over m <= m_max, all residues and both classes of
    |T_j(X,l,m) - X/(2m)| / X**lambda.

    Single pass over n, sharing the digit-parity computation between moduli.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    totals = [np.zeros(2 * m, dtype=np.int64) for m in range(1, m_max + 1)]
    for lo in range(1, X + 1, _CHUNK):
        hi = min(lo + _CHUNK, X + 1)
        n = np.arange(lo, hi, dtype=np.uint64)
        parity = (np.bitwise_count(n) & 1).astype(np.int64)
        for m in range(1, m_max + 1):
            residue = (n % np.uint64(m)).astype(np.int64)
            totals[m - 1] += np.bincount(parity * m + residue, minlength=2 * m)
    worst = 0.0
    scale = X**LAMBDA_GELFOND
    for m in range(1, m_max + 1):
        dev = np.abs(totals[m - 1] - X / (2 * m)).max()
        worst = max(worst, float(dev) / scale)
    return worst
