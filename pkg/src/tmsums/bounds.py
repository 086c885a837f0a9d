"""Mechanized bound pipeline for the quadratic twisted sum.

The asymptotic statement under scrutiny claims |S0(alpha)| is small whenever
alpha has a rational approximation a/q with gcd(a, q) = 1, |alpha - a/q| <
1/q^2 and q in a window (log X)^A < q <= X (log X)^-B.  The implied
constants are not part of the claim, so this module replaces every step by
an exact classical inequality where one exists and by measured ratios where
none does:

  * The squaring/differencing step uses the exact-constant shift inequality
      |sum_{n<=X} z_n|^2 <= ((X+Q-1)/Q)(X + 2 sum_{h=1}^{Q-1}(1-h/Q)
                            |sum_{n<=X-h} z_{n+h} conj(z_n)|),
    which is a theorem, so its lhs/rhs ratio is asserted <= 1.
  * Window exponents A and B are reported as the minimal values making the
    two side conditions true at the given X and c, instead of asserting
    their existence abstractly.

All logarithms are natural; a different base only rescales c, A and B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .fasteval import fast_correlation_sum, _descend
from .oracles import naive_gauss_sum, naive_quadratic_sum, restricted_quadratic_sum
from .phases import Angle, as_phase, norm_distance, scale_phase, double_phase

LOG2_3 = math.log2(3.0)


def nearest_int_distance(x: float) -> float:
    """||x|| = min({x}, 1 - {x}), the distance from x to the nearest integer."""
    f = x % 1.0
    return min(f, 1.0 - f)


# ---------------------------------------------------------------------------
# rational approximation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalApproximation:
    """alpha = a/q + theta/q^2 with gcd(a, q) = 1 and |theta| < 1."""

    a: int
    q: int
    theta: float

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("denominator must be positive")
        if math.gcd(self.a, self.q) != 1:
            raise ValueError("a/q must be in lowest terms")


def _continued_fraction_convergents(alpha: Fraction):
    """Yield the continued-fraction convergents (p, q) of alpha."""
    num, den = alpha.numerator, alpha.denominator
    p_prev, p = 0, 1  # p_{-2}, p_{-1}
    q_prev, q = 1, 0
    while den:
        a, rem = divmod(num, den)
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        num, den = den, rem
        yield p, q


def convergent_sequence(alpha: Angle, q_max: int) -> list[RationalApproximation]:
    """All continued-fraction convergents of alpha with denominator <= q_max."""
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    if isinstance(alpha, float) and not math.isfinite(alpha):
        raise ValueError(f"non-finite alpha: {alpha}")
    exact = Fraction(alpha) if not isinstance(alpha, tuple) else Fraction(*alpha)
    out = []
    for p, q in _continued_fraction_convergents(exact):
        if q > q_max:
            break
        theta = float((exact - Fraction(p, q)) * q * q)
        out.append(RationalApproximation(a=p, q=q, theta=theta))
    return out


def best_rational_approximation(alpha: Angle, q_max: int) -> RationalApproximation:
    """The convergent of alpha with the largest denominator q <= q_max.

    Convergents satisfy |alpha - a/q| < 1/q^2, so |theta| < 1 always holds.
    """
    seq = convergent_sequence(alpha, q_max)
    if not seq:
        raise ValueError("no convergent with denominator <= q_max")
    return seq[-1]


def farey_fractions(order: int) -> list[Fraction]:
    """The Farey sequence of the given order on [0, 1], ascending."""
    if order < 1:
        raise ValueError("order must be >= 1")
    out = [Fraction(0, 1)]
    a, b, c, d = 0, 1, 1, order
    while c <= order:
        k = (order + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        out.append(Fraction(a, b))
    return out


# ---------------------------------------------------------------------------
# exact shift (differencing) inequality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VdcReport:
    """Both sides of the exact differencing inequality for |S0(alpha)|^2."""

    Q: int
    lhs: float
    per_h: list[float]
    rhs: float
    ratio: float
    paper_form: float  # X/sqrt(Q) + sqrt((X/Q) * sum_h |S(X-h,h,2h alpha)|)


def vdc_inequality_check(alpha: Angle, X: int, Q: int) -> VdcReport:
    """Exact-constant differencing inequality for z_n = eps(n) e(alpha n^2).

    The shifted products z_{n+h} conj(z_n) equal
    e(alpha h^2) eps(n) eps(n+h) e(2 h alpha n), so each inner sum is a
    correlation sum at frequency 2 h alpha; the unimodular e(alpha h^2)
    drops under the absolute value.  The reported ratio lhs/rhs is <= 1 for
    every (alpha, X, Q) since the inequality is a theorem.
    """
    X = int(X)
    if Q < 1:
        raise ValueError("Q must be >= 1")
    if Q > X:
        raise ValueError("Q must not exceed X")
    num, den = as_phase(alpha)
    lhs = abs(naive_quadratic_sum((num, den), X)) ** 2
    per_h = []
    for h in range(1, Q):
        freq = scale_phase(num, den, 2 * h)
        per_h.append(abs(fast_correlation_sum(X - h, h, freq)))
    rhs = ((X + Q - 1) / Q) * (X + 2.0 * sum((1.0 - h / Q) * v for h, v in enumerate(per_h, start=1)))
    paper_form = X / math.sqrt(Q) + math.sqrt((X / Q) * sum(per_h))
    return VdcReport(Q=Q, lhs=lhs, per_h=per_h, rhs=rhs, ratio=lhs / rhs,
                     paper_form=paper_form)


# ---------------------------------------------------------------------------
# parameter selection
# ---------------------------------------------------------------------------

def choose_parameters(X: int, c: float) -> tuple[int, int]:
    """Q = ceil((ln X)^{2c}) and the descent depth j0.

    j0 is the smallest integer with
      Q^{log2 3} * j0 * 2^{-j0} <= (ln X)^{-2c} < Q^{log2 3} * (j0-1) * 2^{-j0+1};
    since j * 2^{-j} is strictly decreasing from j = 2 on, the first j
    satisfying the left inequality satisfies both.
    """
    if X <= 2:
        raise ValueError("X must exceed 2")
    if c <= 0:
        raise ValueError("c must be positive")
    log_x = math.log(X)
    Q = math.ceil(log_x ** (2 * c))
    target = log_x ** (-2 * c) / Q**LOG2_3
    j0 = 2
    while j0 * 2.0**-j0 > target:
        j0 += 1
        if j0 > 100_000:
            raise ArithmeticError("descent depth search did not terminate")
    if not (Q**LOG2_3 * j0 * 2.0**-j0 <= log_x ** (-2 * c)
            < Q**LOG2_3 * (j0 - 1) * 2.0 ** (-j0 + 1)):
        raise ArithmeticError(f"depth {j0} violates its defining inequality")
    return Q, j0


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftDescentSummary:
    """Per-shift record of the pipeline: descent size and small-denominator
    diagnostics of the terminal frequency."""

    h: int
    N: int
    beta_next: float                 # 2^{N+1} * (2 h alpha) mod 1
    max_inv_dist: float              # max_{1<=j<=j0} 1 / ||2^j beta_next||
    a_condition: bool                # 2^{N+j0+2} h < q / 10
    min_dist_ok: Optional[bool]      # ||2^j beta_next|| >= 0.9/q, when applicable


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of the mechanized bound pipeline at one (alpha, X, c)."""

    c: float
    X: int
    Q: int
    j0: int
    approximation: RationalApproximation
    per_h: list[ShiftDescentSummary]
    A_min: float
    B_min: float
    q_window_pass: bool
    predicted_scale: float
    actual: float
    ratio: float


def _terminal_frequency(h: int, num: int, den: int) -> tuple[int, tuple[int, int]]:
    """Descend shift h at frequency beta = num/den; return (N, beta_{N+1}).

    For h = 1 no descent happens and the terminal frequency is beta itself
    (N = -1 by convention, so 2^{N+1} = 1).
    """
    if h == 1:
        return -1, (num, den)
    n_levels = h.bit_length() - 2
    _, _, fn, fd, _, _, _ = _descend(0, h, num, den)
    return n_levels, (fn, fd)


def theorem_pipeline(alpha: Angle, X: int, c: float = 1.0) -> TheoremReport:
    """Run the whole bound machinery at one point and report every measured
    quantity: approximation, window exponents, per-shift diagnostics, and
    the measured-to-predicted ratio."""
    X = int(X)
    approx = best_rational_approximation(alpha, q_max=X)
    Q, j0 = choose_parameters(X, c)
    num, den = as_phase(alpha)
    q = approx.q
    log_x = math.log(X)
    loglog_x = math.log(log_x)

    per_h = []
    a_needed = 0.0
    for h in range(1, Q):
        bnum, bden = scale_phase(num, den, 2 * h)
        n_levels, (fn, fd) = _terminal_frequency(h, bnum, bden)
        dists = []
        pn, pd = fn, fd
        for _ in range(j0):
            pn, pd = double_phase(pn, pd)
            dists.append(norm_distance(pn, pd))
        max_inv = max((math.inf if d == 0 else 1.0 / float(d)) for d in dists)
        a_cond = 10 * (1 << (n_levels + j0 + 2)) * h < q
        min_ok: Optional[bool] = None
        if a_cond:
            min_ok = all(d >= Fraction(9, 10 * q) for d in dists)
        a_needed = max(a_needed, math.log(10.0 * 2.0 ** (n_levels + j0 + 2) * h))
        per_h.append(ShiftDescentSummary(
            h=h, N=n_levels, beta_next=fn / fd, max_inv_dist=max_inv,
            a_condition=a_cond, min_dist_ok=min_ok,
        ))

    # smallest exponents making the two side conditions hold at this X, c
    A_min = a_needed / loglog_x if per_h else 0.0
    B_min = 2 * c + 2 + math.log(Q**LOG2_3 * j0) / loglog_x
    window_pass = q > log_x**A_min and q <= X * log_x**-B_min

    actual = abs(naive_quadratic_sum((num, den), X))
    predicted = X * log_x**-c
    return TheoremReport(
        c=c, X=X, Q=Q, j0=j0, approximation=approx, per_h=per_h,
        A_min=A_min, B_min=B_min, q_window_pass=window_pass,
        predicted_scale=predicted, actual=actual, ratio=actual / predicted,
    )


# ---------------------------------------------------------------------------
# class-restricted sum identity and the untwisted square bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorollaryReport:
    """Check of the indicator identity and of the exact square bound for the
    untwisted quadratic sum."""

    X: int
    identity_error: float
    square_lhs: float
    square_rhs: float
    identity_ok: bool
    chain_ok: bool


def corollary_check(alpha: Angle, X: int, identity_tol: float = 1e-9) -> CorollaryReport:
    """Verify sum_{n<=X, parity even} e(alpha n^2) = (S0 + S1)/2 and the
    exact chain |S1(alpha)|^2 <= X + 2 sum_{1<=h<X} min(X, 1/(2||2h alpha||)).

    The chain combines |sum_{n<=M} e(g n)| <= min(M, 1/(2||g||)) with the
    differencing of |S1|^2, both with explicit constants.
    """
    X = int(X)
    num, den = as_phase(alpha)
    s0 = naive_quadratic_sum((num, den), X)
    s1 = naive_gauss_sum((num, den), X)
    restricted = restricted_quadratic_sum((num, den), X)
    err = abs(restricted - (s0 + s1) / 2)
    lhs = abs(s1) ** 2
    rhs = float(X)
    for h in range(1, X):
        k = (2 * h * num) % den
        dist = min(k, den - k)  # ||2 h alpha|| = dist / den, exactly
        if dist == 0 or dist * 2 * X <= den:
            rhs += 2 * X
        else:
            rhs += 2 * (den / (2 * dist))  # int/int division, overflow-safe
    return CorollaryReport(
        X=X,
        identity_error=err,
        square_lhs=lhs,
        square_rhs=rhs,
        identity_ok=err <= identity_tol,
        chain_ok=lhs <= rhs * (1 + 1e-12) + 1e-9,
    )
