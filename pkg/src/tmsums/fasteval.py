"""Exact logarithmic-time evaluators for the digit-parity twisted sums.

Everything here rests on the halving identities eps(2n) = eps(n) and
eps(2n+1) = -eps(n).  Splitting a sum over n <= M into even and odd n and
tracking the stray endpoints exactly gives, for the correlation sums
S(M, t, b) = sum_{n<=M} eps(n) eps(n+t) e(b n), with M1 = floor(M/2) and
E = e(2b * M1):

  even shift t = 2u, M >= 1:
    S(M, 2u, b)   = (1+e(b)) S(M1, u, 2b) + e(b) eps(u)
                    - [M even] e(b) eps(M1) eps(M1+u) E
  odd shift t = 2u+1, M >= 1:
    S(M, 2u+1, b) = -S(M1, u, 2b) - e(b) S(M1, u+1, 2b) - e(b) eps(u+1)
                    + [M even] e(b) eps(M1) eps(M1+u+1) E

The e(b) eps(.) terms come from the odd index n = 1 (m = 0); the [M even]
corrections account for floor((M-1)/2) = M1 - 1 when M is even.  Both
identities are validated against the brute-force oracle in the test suite;
they hold exactly, with no O(1) slack.

Shift pairs (g, g+1) are closed under this halving, which yields the digit
descent: starting from shift h with coefficients (1, 0) for even h and
(0, 1) for odd h (the pair base is h-1 when h is odd, so the level-0 split
always acts on an even pair base), repeated halving reaches the pair (1, 2)
after bitlength(h) - 1 steps.  The coefficient recurrences per step, with
s = +1 when the pair base is even and s = -1 when odd, are

  s = +1:  x' = (1 + e(b)) x - y,          y' = -e(b) y
  s = -1:  x' = -x,                        y' = -e(b) x + (1 + e(b)) y

and |x_j|, |y_j| <= 3^j by induction.  The base sums S(., 1, .), S(., 2, .)
close among themselves: S(M, 1, b) halves into itself plus a pure geometric
sum (eps(2m) eps(2m+1) = -1), and S(M, 2, b) is a single halving step away
from S(M1, 1, 2b).

Frequencies are exact rationals throughout (see phases): doubling mod 1 is
exact, so descent depth ~50 loses no precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .digits import epsilon
from .phases import Angle, as_phase, double_phase, unit, unit_array

__all__ = [
    "CoefficientPair",
    "DigitDescent",
    "DescentLevel",
    "ReductionTrace",
    "geometric_sum_closed",
    "fast_linear_sum",
    "lemma3_eval",
    "lemma2_reduction",
    "fast_correlation_sum",
]

#: Below this distance from the nearest integer the closed geometric form
#: is abandoned for direct summation (resonant denominator).
RESONANCE_CUTOFF = 1e-9
#: Largest range that direct near-resonant summation will walk.
_DIRECT_GEOM_LIMIT = 1 << 21


# ---------------------------------------------------------------------------
# geometric sums
# ---------------------------------------------------------------------------

def _geom(M: int, num: int, den: int) -> complex:
    """sum_{n=1}^{M} e(num/den * n), exact rational frequency.

    Uses e(x) - 1 = 2i sin(pi x) e(i pi x) to evaluate
    e(g)(e(gM) - 1)/(e(g) - 1) without cancellation; frac(g*M) is reduced
    in integer arithmetic so large M costs nothing in accuracy.
    """
    if M <= 0:
        return 0j
    num %= den
    if num == 0:
        return complex(M)
    d = num / den
    dist = min(d, 1.0 - d)
    if dist < RESONANCE_CUTOFF and M <= _DIRECT_GEOM_LIMIT:
        phases = np.array([((num * t) % den) / den for t in range(1, M + 1)],
                          dtype=np.float64)
        return complex(unit_array(phases).sum())
    mu = ((num * M) % den) / den
    ratio = math.sin(math.pi * mu) / math.sin(math.pi * d)
    return unit(num, den) * ratio * cmath.exp(1j * math.pi * (mu - d))


def geometric_sum_closed(M: int, gamma: Angle) -> complex:
    """sum_{n=1}^{M} e(gamma n) in closed form.

    Exact M for integer gamma; near-resonant frequencies switch to direct
    summation (bounded range) to avoid dividing by a tiny denominator.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    num, den = as_phase(gamma)
    return _geom(M, num, den)


# ---------------------------------------------------------------------------
# linear sum  sum eps(n) e(alpha n)
# ---------------------------------------------------------------------------

def fast_linear_sum(alpha: Angle, X: int) -> complex:
    """sum_{n <= X} eps(n) e(alpha n) in O(log X) time.

    Even/odd splitting gives, for M = floor(X/2),
      L(X, a) = (1 - e(a)) L(M, 2a) - e(a)            (X odd)
      L(X, a) = (1 - e(a)) L(M, 2a) - e(a) + eps(M) e(a (X+1))   (X even)
    which is evaluated iteratively from the bottom of the halving chain.
    """
    X = int(math.floor(X))
    if X < 1:
        return 0j
    num, den = as_phase(alpha)
    levels = []
    cut = X
    while cut >= 1:
        levels.append((cut, num, den))
        cut >>= 1
        num, den = double_phase(num, den)
    total = 0j
    for cut, num, den in reversed(levels):
        ea = unit(num, den)
        total = (1 - ea) * total - ea
        if cut % 2 == 0:
            total += epsilon(cut >> 1) * unit((num * (cut + 1)) % den, den)
    return total


# ---------------------------------------------------------------------------
# base correlation pair  S(Y, 1, g), S(Y, 2, g)
# ---------------------------------------------------------------------------

def _pair_eval(Y: int, num: int, den: int) -> tuple[complex, complex]:
    """(S(Y,1,g), S(Y,2,g)) for g = num/den, exactly, in O(log Y).

    S(Y, 1, g) satisfies the self-contained recursion
      A(M, b) = -G(M1, 2b) - e(b) A(M1, 2b) + e(b)
                + [M even] e(b) eps(M1) eps(M1+1) e(2b M1)
    with G the geometric sum; S(Y, 2, g) is one even-shift halving of the
    same A value at the half range.
    """
    if Y < 1:
        return 0j, 0j
    # walk down the halving chain, then fold A back up
    levels = []
    cut, pn, pd = Y, num, den
    while cut >= 1:
        levels.append((cut, pn, pd))
        cut >>= 1
        pn, pd = double_phase(pn, pd)
    a_val = 0j  # A at the level below the last recorded one (empty range)
    for cut, pn, pd in reversed(levels[1:]):
        a_val = _a_step(cut, pn, pd, a_val)
    # levels[0] is (Y, num, den); compute A(Y) and S(Y,2,.) from a_val = A(Y>>1)
    y1 = Y >> 1
    num2, den2 = double_phase(num, den)
    eg = unit(num, den)
    if Y % 2 == 0 and Y >= 2:
        corr = eg * epsilon(y1) * epsilon(y1 + 1) * unit((num2 * y1) % den2, den2)
    else:
        corr = 0j
    a_full = -_geom(y1, num2, den2) - eg * a_val + eg + corr
    b_full = (1 + eg) * a_val - eg - corr
    return a_full, b_full


def _a_step(M: int, num: int, den: int, a_half: complex) -> complex:
    """One level of the S(., 1, .) recursion: A(M) from A(floor(M/2))."""
    if M < 1:
        return 0j
    m1 = M >> 1
    num2, den2 = double_phase(num, den)
    eb = unit(num, den)
    res = -_geom(m1, num2, den2) - eb * a_half + eb
    if M % 2 == 0 and M >= 2:
        res += eb * epsilon(m1) * epsilon(m1 + 1) * unit((num2 * m1) % den2, den2)
    return res


def lemma3_eval(Y: int, gamma: Angle) -> tuple[complex, complex]:
    """Exact (S(Y,1,gamma), S(Y,2,gamma)) for the unit and double shifts."""
    Y = int(math.floor(Y))
    num, den = as_phase(gamma)
    return _pair_eval(Y, num, den)


# ---------------------------------------------------------------------------
# digit descent for general shifts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DigitDescent:
    """Static digit data of a shift h >= 2.

    h_seq[j] = h >> j for 0 <= j <= N where N = bitlength(h) - 2, so
    h_seq[-1] is the two-digit head (2 or 3) and one more halving reaches 1.
    w[j] is bit j of h and s[j] = 1 - 2 w[j].
    """

    h: int
    N: int
    w: list[int]
    s: list[int]
    h_seq: list[int]

    @classmethod
    def from_shift(cls, h: int) -> "DigitDescent":
        if h < 2:
            raise ValueError("digit descent needs a shift h >= 2")
        n_levels = h.bit_length() - 2
        w = [(h >> j) & 1 for j in range(n_levels + 1)]
        return cls(
            h=h,
            N=n_levels,
            w=w,
            s=[1 - 2 * wj for wj in w],
            h_seq=[h >> j for j in range(n_levels + 1)],
        )


@dataclass(frozen=True)
class CoefficientPair:
    """Coefficients (x, y) multiplying the shift pair (g, g+1) at one level."""

    x: complex
    y: complex
    level: int

    def within_bound(self, slack: float = 1e-9) -> bool:
        cap = 3.0**self.level + slack
        return abs(self.x) <= cap and abs(self.y) <= cap


@dataclass(frozen=True)
class DescentLevel:
    """State of the descent at one level: cutoffs, frequency, coefficients,
    and the exact boundary correction collected on entering this level."""

    level: int
    pair_base: int
    cutoff: int          # exact integer range bound at this level
    cutoff_real: float   # X / 2^level, for audit
    beta: float          # frequency mod 1 as a float
    beta_pair: tuple[int, int]
    coeffs: CoefficientPair
    boundary: complex


@dataclass(frozen=True)
class ReductionTrace:
    """Full record of a digit descent for S(X, h, beta).

    The reconstruction identity is exact:
      S(X, h, beta) = x_final * S(cutoff_final, 1, beta_final)
                      + y_final * S(cutoff_final, 2, beta_final)
                      + sum of all level boundaries.
    """

    X: int
    descent: DigitDescent
    levels: list[DescentLevel] = field(default_factory=list)

    @property
    def final(self) -> DescentLevel:
        return self.levels[-1]

    @property
    def boundary_sum(self) -> complex:
        return sum((lv.boundary for lv in self.levels), 0j)

    def reconstruct(self) -> complex:
        """Evaluate S(X, h, beta) from the trace endpoint."""
        last = self.final
        a_val, b_val = _pair_eval(last.cutoff, *last.beta_pair)
        return last.coeffs.x * a_val + last.coeffs.y * b_val + self.boundary_sum

    def to_text(self) -> str:
        """Line-oriented dump: one level per line."""
        out = ["# j h_j s_j X_int X_real beta_j re_x im_x re_y im_y re_b im_b"]
        for lv in self.levels:
            j = lv.level
            if j <= self.descent.N:
                h_j = self.descent.h_seq[j]
                s_j = str(self.descent.s[j])
            else:
                h_j, s_j = 1, "-"
            c = lv.coeffs
            out.append(
                f"{j} {h_j} {s_j} {lv.cutoff} {lv.cutoff_real:.17g} "
                f"{lv.beta:.17g} {c.x.real:.17g} {c.x.imag:.17g} "
                f"{c.y.real:.17g} {c.y.imag:.17g} "
                f"{lv.boundary.real:.17g} {lv.boundary.imag:.17g}"
            )
        return "\n".join(out)


def _descend(X: int, h: int, num: int, den: int):
    """Run the digit descent from shift h down to the pair (1, 2).

    Returns (records, cutoff, num, den, x, y, acc) where records is a list
    of per-level tuples (level, pair_base, cutoff, num, den, x, y, boundary)
    and acc is the accumulated exact boundary.
    """
    g = h if h % 2 == 0 else h - 1
    x, y = (1 + 0j, 0j) if h % 2 == 0 else (0j, 1 + 0j)
    cut = X
    acc = 0j
    level = 0
    records = [(level, g, cut, num, den, x, y, 0j)]
    while g != 1:
        u = g >> 1
        m1 = cut >> 1
        eb = unit(num, den)
        num2, den2 = double_phase(num, den)
        m0 = 1 if cut >= 1 else 0
        tail = cut >= 2 and cut % 2 == 0
        ee = unit((num2 * m1) % den2, den2) if tail else 0j
        if g % 2 == 0:
            b = eb * (
                x * (m0 * epsilon(u) - (epsilon(m1) * epsilon(m1 + u) * ee if tail else 0))
                + y * (-m0 * epsilon(u + 1) + (epsilon(m1) * epsilon(m1 + u + 1) * ee if tail else 0))
            )
            x, y = (1 + eb) * x - y, -eb * y
        else:
            edge = m0 * epsilon(u + 1) - (epsilon(m1) * epsilon(m1 + u + 1) * ee if tail else 0)
            b = eb * (y - x) * edge
            x, y = -x, -eb * x + (1 + eb) * y
        acc += b
        g, cut, num, den = u, m1, num2, den2
        level += 1
        records.append((level, g, cut, num, den, x, y, b))
    return records, cut, num, den, x, y, acc


def lemma2_reduction(h: int, beta: Angle, X: int) -> ReductionTrace:
    """Full digit descent of S(X, h, beta) with exact boundary bookkeeping.

    Rejects h < 2 (shifts 1 and 2 are the base pair, nothing to descend).
    """
    if h < 2:
        raise ValueError("digit descent needs a shift h >= 2")
    X = int(math.floor(X))
    if X < 0:
        raise ValueError("cutoff X must be nonnegative")
    num, den = as_phase(beta)
    records, *_ = _descend(X, h, num, den)
    levels = [
        DescentLevel(
            level=lv,
            pair_base=g,
            cutoff=cut,
            cutoff_real=X / 2.0**lv,
            beta=n / d,
            beta_pair=(n, d),
            coeffs=CoefficientPair(x=x, y=y, level=lv),
            boundary=b,
        )
        for (lv, g, cut, n, d, x, y, b) in records
    ]
    return ReductionTrace(X=X, descent=DigitDescent.from_shift(h), levels=levels)


def descent_coefficients(h: int, beta: Angle) -> list[CoefficientPair]:
    """Coefficient pairs (x_j, y_j) of the descent only, no sums attached.

    Cheap enough to sweep over hundreds of thousands of (h, beta) pairs when
    checking the |x_j|, |y_j| <= 3^j bound.
    """
    if h < 2:
        raise ValueError("digit descent needs a shift h >= 2")
    num, den = as_phase(beta)
    g = h if h % 2 == 0 else h - 1
    x, y = (1 + 0j, 0j) if h % 2 == 0 else (0j, 1 + 0j)
    out = [CoefficientPair(x=x, y=y, level=0)]
    level = 0
    while g != 1:
        eb = unit(num, den)
        if g % 2 == 0:
            x, y = (1 + eb) * x - y, -eb * y
        else:
            x, y = -x, -eb * x + (1 + eb) * y
        num, den = double_phase(num, den)
        g >>= 1
        level += 1
        out.append(CoefficientPair(x=x, y=y, level=level))
    return out


def fast_correlation_sum(X: int, h: int, beta: Angle) -> complex:
    """Exact S(X, h, beta) in O(log h + log X) time.

    Shifts 1 and 2 evaluate directly through the base pair; larger shifts
    run the digit descent first.
    """
    if h < 1:
        raise ValueError("shift h must be >= 1")
    X = int(math.floor(X))
    if X < 1:
        return 0j
    num, den = as_phase(beta)
    if h == 1:
        return _pair_eval(X, num, den)[0]
    if h == 2:
        return _pair_eval(X, num, den)[1]
    _, cut, fn, fd, x, y, acc = _descend(X, h, num, den)
    a_val, b_val = _pair_eval(cut, fn, fd)
    return x * a_val + y * b_val + acc
