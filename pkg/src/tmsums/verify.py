"""Verification suites: every library invariant as a runnable check.

Each check returns a CheckResult; the quick suite uses reduced ranges for a
fast smoke run, the full suite runs the committed acceptance parameters.
Randomized sweeps use fixed seeds so reruns are reproducible; measured
constants (digit-count deviations, trend ratios) are frozen here with the
values recorded when the suite was first calibrated.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .bounds import (best_rational_approximation, choose_parameters,
                     convergent_sequence, corollary_check, nearest_int_distance,
                     theorem_pipeline, vdc_inequality_check)
from .digits import (LAMBDA_GELFOND, epsilon, epsilon_block,
                     gelfond_class_counts, gelfond_deviation_stat, parity_class,
                     ParityClass)
from .fasteval import (descent_coefficients, fast_correlation_sum,
                       fast_linear_sum, geometric_sum_closed, lemma2_reduction,
                       lemma3_eval)
from .oracles import (CorrelationSumSpec, naive_correlation_sum,
                      naive_gauss_sum, naive_linear_sum, naive_quadratic_sum,
                      restricted_quadratic_sum)

SEED = 0x5EED_2026

# tolerances, fixed once for the whole suite
ORACLE_TOL = 1e-7          # fast evaluators against brute force
IDENTITY_TOL = 1e-9        # indicator identity
COEFF_SLACK = 1e-9         # |x_j| <= 3^j + slack
FAST_LINEAR_BUDGET = 1e-3  # seconds per call at X = 1e15
FAST_CORR_BUDGET = 1e-3    # seconds per call at X = 1e12

# Digit-count deviation max over (j, l, m <= 32), divided by X^lambda, at
# X = 2^k.  Deterministic; recorded at calibration time.  The sequence is
# asymptotically 2-periodic in k (even k -> 1/3, odd k -> 1/(2 sqrt 3),
# ratio 2/sqrt(3) = 1.1547 between the parities), so stability is judged on
# the running maximum, which settles at 1/3.
GELFOND_DEVIATIONS = {
    10: 0.33196159122085034,
    11: 0.28907112243376315,
    12: 0.3328760859625055,
    13: 0.2888071305411296,
    14: 0.3331809175430572,
    15: 0.28871913324358506,
    16: 0.3332825280699077,
    17: 0.2886898008110702,
    18: 0.33331639824552456,
    19: 0.28868002333356524,
    20: 0.3333276883040634,
    21: 0.28867676417439697,
    22: 0.3333314516569097,
}
GELFOND_GROWTH_CAP = 1.10  # running max may grow at most 10% per step at the top

# |S0(a/q)| * ln(X) / X at X = 2^k for the convergent a/q of sqrt(2) whose
# denominator is nearest sqrt(X).  Deterministic; recorded at calibration
# time.  The committed trend cap is the plateau max over k = 19..21; the
# top three scales must stay at or below it.
TREND_ALPHA_SOURCE = "sqrt2-convergents"
TREND_RHO = {
    14: (239, 169, 0.09396103364280556),
    15: (239, 169, 0.009771613152282036),
    16: (239, 169, 0.008115534222358846),
    17: (577, 408, 0.09863944896081285),
    18: (577, 408, 0.14503393744921747),
    19: (1393, 985, 0.018070304434122254),
    20: (1393, 985, 0.023055137797617958),
    21: (1393, 985, 0.011789383156982833),
    22: (3363, 2378, 0.005648661781716381),
    23: (3363, 2378, 0.007324555160608628),
    24: (8119, 5741, 0.0008896156733502619),
}
TREND_TOP_SCALES = (22, 23, 24)
TREND_CAP = 0.0231  # plateau max over k = 19..21, rounded up in the last digit
TREND_REPRO_RTOL = 1e-6


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name:<34} {self.elapsed:7.2f}s  {self.detail}"


def _done(name: str, t0: float, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=passed, detail=detail,
                       elapsed=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# digit layer
# ---------------------------------------------------------------------------

def check_digit_recurrences(n_values: int = 1_000_000) -> CheckResult:
    """eps(2n) = eps(n), eps(2n+1) = -eps(n), and the class correspondence."""
    t0 = time.perf_counter()
    e = epsilon_block(0, 2 * n_values + 2)
    n = np.arange(n_values + 1)
    ok_even = bool(np.all(e[2 * n] == e[n]))
    ok_odd = bool(np.all(e[2 * n + 1] == -e[n]))
    sample = np.arange(1, 4097)
    ok_class = all((epsilon(int(v)) == 1) == (parity_class(int(v)) is ParityClass.N0)
                   for v in sample)
    passed = ok_even and ok_odd and ok_class
    return _done("digit recurrences", t0, passed,
                 f"n <= {n_values}: even {ok_even}, odd {ok_odd}, class map {ok_class}")


def check_balancedness(k_max: int = 24) -> CheckResult:
    """sum of eps(n) over a full power-of-two block vanishes."""
    t0 = time.perf_counter()
    bad = []
    for k in range(1, k_max + 1):
        direct = int(epsilon_block(0, 2**k).astype(np.int64).sum())
        via_fast = 1 + fast_linear_sum(0.0, 2**k - 1)  # adds eps(0)
        if direct != 0 or abs(via_fast) > 1e-9:
            bad.append(k)
    return _done("balancedness of eps blocks", t0, not bad,
                 f"k = 1..{k_max}, violations: {bad or 'none'}")


def check_partition_counts(cases: int = 25, x_max: int = 200_000,
                           seed: int = SEED) -> CheckResult:
    """Class counts over residues partition {1..X} exactly."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    bad = []
    for _ in range(cases):
        X = int(rng.integers(1, x_max + 1))
        m = int(rng.integers(1, 33))
        if int(gelfond_class_counts(X, m).sum()) != X:
            bad.append((X, m))
    return _done("progression count partition", t0, not bad,
                 f"{cases} cases, violations: {bad or 'none'}")


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def check_oracle_identities(count: int = 200, x_max: int = 10_000,
                            seed: int = SEED) -> CheckResult:
    """Indicator identity, magnitude caps, conjugation, and the count link."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst_id = 0.0
    ok = True
    notes = []
    for _ in range(count):
        X = int(rng.integers(1, x_max + 1))
        alpha = float(rng.random())
        s0 = naive_quadratic_sum(alpha, X)
        s1 = naive_gauss_sum(alpha, X)
        r = restricted_quadratic_sum(alpha, X)
        worst_id = max(worst_id, abs(r - (s0 + s1) / 2))
        lin = naive_linear_sum(alpha, X)
        if abs(lin) > X + 1e-9:
            ok = False
            notes.append(f"|linear|>{X}")
        if abs(naive_linear_sum(-alpha, X) - lin.conjugate()) > 1e-7:
            ok = False
            notes.append("conjugation(linear)")
        if abs(naive_quadratic_sum(-alpha, X) - s0.conjugate()) > 1e-7:
            ok = False
            notes.append("conjugation(quadratic)")
    for _ in range(20):
        Y = int(rng.integers(1, x_max + 1))
        h = int(rng.integers(1, 65))
        beta = float(rng.random())
        spec = CorrelationSumSpec(Y=Y, h=h, beta=beta)
        v = naive_correlation_sum(spec)
        if abs(v) > Y + 1e-9:
            ok = False
            notes.append(f"|corr|>{Y}")
        cspec = CorrelationSumSpec(Y=Y, h=h, beta=-beta)
        if abs(naive_correlation_sum(cspec) - v.conjugate()) > 1e-7:
            ok = False
            notes.append("conjugation(corr)")
    for X in (7, 64, 1000, 4096):
        counts = gelfond_class_counts(X, 1)
        if abs(naive_linear_sum(0.0, X) - (counts[0, 0] - counts[1, 0])) > 1e-9:
            ok = False
            notes.append(f"count link X={X}")
    passed = ok and worst_id <= IDENTITY_TOL
    return _done("oracle identities", t0, passed,
                 f"{count} draws, worst indicator err {worst_id:.2e}"
                 + (f", issues: {notes}" if notes else ""))


# ---------------------------------------------------------------------------
# fast evaluators
# ---------------------------------------------------------------------------

def check_fast_linear(count: int = 500, x_max: int = 1_000_000,
                      seed: int = SEED) -> CheckResult:
    """fast_linear_sum against the brute-force oracle."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 1)
    worst = 0.0
    for _ in range(count):
        X = int(rng.integers(1, x_max + 1))
        alpha = float(rng.random())
        worst = max(worst, abs(fast_linear_sum(alpha, X)
                               - naive_linear_sum(alpha, X)))
    return _done("fast linear vs oracle", t0, worst <= ORACLE_TOL,
                 f"{count} draws, X <= {x_max}, worst |diff| {worst:.2e}")


def check_fast_correlation(count: int = 500, x_max: int = 100_000,
                           h_max: int = 512, seed: int = SEED) -> CheckResult:
    """fast_correlation_sum against the brute-force oracle."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 2)
    worst = 0.0
    for _ in range(count):
        X = int(rng.integers(1, x_max + 1))
        h = int(rng.integers(1, h_max + 1))
        beta = float(rng.random())
        spec = CorrelationSumSpec(Y=X, h=h, beta=beta)
        worst = max(worst, abs(fast_correlation_sum(X, h, beta)
                               - naive_correlation_sum(spec)))
    return _done("fast correlation vs oracle", t0, worst <= ORACLE_TOL,
                 f"{count} draws, X <= {x_max}, h <= {h_max}, worst |diff| {worst:.2e}")


def check_coefficient_bound(h_max: int = 4096, betas_per_h: int = 100,
                            seed: int = SEED) -> CheckResult:
    """|x_j|, |y_j| <= 3^j at every level for every shift."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 3)
    violations = 0
    checked = 0
    for h in range(2, h_max + 1):
        for beta in rng.random(betas_per_h):
            for pair in descent_coefficients(h, float(beta)):
                checked += 1
                if not pair.within_bound(COEFF_SLACK):
                    violations += 1
    return _done("descent coefficient bound", t0, violations == 0,
                 f"h <= {h_max}, {betas_per_h} frequencies each, "
                 f"{checked} pairs, violations {violations}")


def check_descent_bookkeeping(cases: int = 200, seed: int = SEED) -> CheckResult:
    """Stored frequencies live in [0,1); cutoffs follow iterated halving;
    the trace reconstruction matches the direct fast evaluation."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 4)
    ok = True
    notes = []
    for _ in range(cases):
        X = int(rng.integers(1, 1 << 24))
        h = int(rng.integers(2, 2049))
        beta = float(rng.random())
        tr = lemma2_reduction(h, beta, X)
        for lv in tr.levels:
            if not 0.0 <= lv.beta < 1.0:
                ok = False
                notes.append(f"beta out of range at level {lv.level}")
            if lv.cutoff != X >> lv.level:
                ok = False
                notes.append(f"cutoff mismatch at level {lv.level}")
        direct = fast_correlation_sum(X, h, beta)
        if abs(tr.reconstruct() - direct) > 1e-9 * max(1.0, abs(direct)):
            ok = False
            notes.append(f"reconstruction mismatch h={h}")
    return _done("descent bookkeeping", t0, ok,
                 f"{cases} traces" + (f", issues: {notes[:3]}" if notes else ""))


def check_descent_statement_constant(seed: int = SEED) -> CheckResult:
    """The sweep constant C in |S(X,h,b)| <= h^{log2 3}(|S1'| + |S2'| + C)
    is finite and grows less than 2x when X doubles."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 5)
    exponent = math.log2(3.0)

    def sweep_c(X: int) -> float:
        worst = 0.0
        for h in range(2, 129):
            betas = [float(b) for b in rng.random(10)] + [0.0, 0.5, 1e-9]
            for beta in betas:
                tr = lemma2_reduction(h, beta, X)
                last = tr.final
                a_val, b_val = lemma3_eval(last.cutoff, last.beta_pair)
                s = abs(tr.reconstruct())
                cap = h**exponent
                c = (s - cap * (abs(a_val) + abs(b_val))) / cap
                worst = max(worst, c)
        return worst

    c1 = sweep_c(1 << 16)
    c2 = sweep_c(1 << 17)
    floor_c = 1e-6
    growth = (c2 + floor_c) / (c1 + floor_c)
    passed = math.isfinite(c1) and math.isfinite(c2) and growth <= 2.0
    return _done("descent statement constant", t0, passed,
                 f"C(2^16) = {c1:.4f}, C(2^17) = {c2:.4f}, growth {growth:.3f}")


def check_geometric_bound(count: int = 1000, m_max: int = 1_000_000,
                          seed: int = SEED) -> CheckResult:
    """|geometric_sum_closed(M, g)| <= min(M, 1/(2||g||))."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 6)
    worst_excess = 0.0
    for _ in range(count):
        M = int(rng.integers(1, m_max + 1))
        gamma = float(rng.random())
        val = abs(geometric_sum_closed(M, gamma))
        dist = nearest_int_distance(gamma)
        cap = min(float(M), math.inf if dist == 0 else 1.0 / (2 * dist))
        worst_excess = max(worst_excess, val - cap)
    # resonant and near-resonant corners
    for M, gamma in ((10**6, 0.0), (10**6, 1.0), (1000, 1e-10), (4, 0.5), (3, 0.5)):
        val = abs(geometric_sum_closed(M, gamma))
        dist = nearest_int_distance(gamma)
        cap = min(float(M), math.inf if dist == 0 else 1.0 / (2 * dist))
        worst_excess = max(worst_excess, val - cap)
    return _done("geometric sum bound", t0, worst_excess <= 1e-7,
                 f"{count} draws, M <= {m_max}, worst excess {worst_excess:.2e}")


# ---------------------------------------------------------------------------
# bound machinery
# ---------------------------------------------------------------------------

def check_vdc_inequality(count: int = 200, x_max: int = 10_000,
                         q_max: int = 64, seed: int = SEED) -> CheckResult:
    """Exact differencing inequality: ratio <= 1 on every draw."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 7)
    worst = 0.0
    for _ in range(count):
        X = int(rng.integers(2, x_max + 1))
        Q = int(rng.integers(1, min(q_max, X) + 1))
        alpha = float(rng.random())
        worst = max(worst, vdc_inequality_check(alpha, X, Q).ratio)
    return _done("shift inequality ratio", t0, worst <= 1.0,
                 f"{count} draws, X <= {x_max}, Q <= {q_max}, worst ratio {worst:.4f}")


def check_rational_approximation(count: int = 300, seed: int = SEED) -> CheckResult:
    """gcd(a, q) = 1 and |theta| < 1 on random and structured frequencies."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 8)
    ok = True
    notes = []
    draws = [float(x) for x in rng.random(count)]
    draws += [0.5, 0.3, math.sqrt(2) - 1, math.pi % 1, 1 / 3, 0.0]
    for alpha in draws:
        q_max = int(rng.integers(1, 10**6))
        r = best_rational_approximation(alpha, q_max)
        if math.gcd(r.a, r.q) != 1 or r.q > q_max or abs(r.theta) >= 1:
            ok = False
            notes.append((alpha, r))
        if abs(alpha - r.a / r.q) > 1.0 / r.q**2 + 1e-15:
            ok = False
            notes.append((alpha, r, "approximation quality"))
    return _done("rational approximation invariants", t0, ok,
                 f"{len(draws)} frequencies" + (f", issues: {notes[:2]}" if notes else ""))


def check_parameter_choice(seed: int = SEED) -> CheckResult:
    """Q and j0 satisfy the defining double inequality exactly."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 9)
    exponent = math.log2(3.0)
    ok = True
    notes = []
    cases = [(2**20, 1.0), (15, 0.5), (10**6, 0.75), (2**14, 1.0), (2**24, 1.0)]
    cases += [(int(rng.integers(3, 2**26)), float(rng.uniform(0.1, 2.0)))
              for _ in range(40)]
    for X, c in cases:
        Q, j0 = choose_parameters(X, c)
        lx = math.log(X)
        left = Q**exponent * j0 * 2.0**-j0
        right = Q**exponent * (j0 - 1) * 2.0 ** (-j0 + 1)
        if not (left <= lx ** (-2 * c) < right):
            ok = False
            notes.append((X, c, Q, j0))
        if Q != math.ceil(lx ** (2 * c)):
            ok = False
            notes.append((X, c, "Q"))
    return _done("parameter selection", t0, ok,
                 f"{len(cases)} cases" + (f", issues: {notes[:3]}" if notes else ""))


def check_corollary(count_identity: int = 100, count_chain: int = 50,
                    x_max: int = 10_000, seed: int = SEED) -> CheckResult:
    """Indicator identity to 1e-9 and the exact square-bound chain."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 10)
    worst_id = 0.0
    chain_bad = 0
    for i in range(count_identity):
        X = int(rng.integers(1, x_max + 1))
        alpha = float(rng.random())
        rep = corollary_check(alpha, X)
        worst_id = max(worst_id, rep.identity_error)
        if i < count_chain and not rep.chain_ok:
            chain_bad += 1
    passed = worst_id <= IDENTITY_TOL and chain_bad == 0
    return _done("restricted-sum identity and chain", t0, passed,
                 f"{count_identity} identities (worst {worst_id:.2e}), "
                 f"{count_chain} chains, failures {chain_bad}")


def check_pipeline_distance_chain(seed: int = SEED) -> CheckResult:
    """Whenever 2^{N+j0+2} h < q/10 holds, every measured distance
    ||2^j beta|| is at least 0.9/q."""
    t0 = time.perf_counter()
    applicable = 0
    bad = 0
    runs = 0
    cases = [(2**16, 0.5), (2**18, 0.5), (2**20, 0.5), (2**20, 1.0),
             (2**18, 0.25), (2**20, 0.25), (2**22, 0.25)]
    for X, c in cases:
        for base, q_scale in ((math.sqrt(2.0), 0.8), (math.sqrt(2.0), 0.95),
                              ((math.sqrt(5.0) - 1) / 2, 0.95)):
            convs = convergent_sequence(base, max(2, int(X**q_scale)))
            alpha = Fraction(convs[-1].a, convs[-1].q)
            rep = theorem_pipeline(alpha, X, c)
            runs += 1
            for s in rep.per_h:
                if s.a_condition:
                    applicable += 1
                    if not s.min_dist_ok:
                        bad += 1
    # the chain must actually have been exercised
    passed = bad == 0 and applicable >= 10
    return _done("pipeline distance chain", t0, passed,
                 f"{runs} runs, {applicable} applicable shifts, violations {bad}")


def check_gelfond_stability(k_lo: int = 10, k_hi: int = 22,
                            m_max: int = 32) -> CheckResult:
    """Digit-count deviations scale like X^lambda: the running max of the
    recorded constant grows at most 10% per step over the top of the range,
    and the per-k values reproduce the frozen calibration."""
    t0 = time.perf_counter()
    stats = {k: gelfond_deviation_stat(2**k, m_max) for k in range(k_lo, k_hi + 1)}
    repro_ok = all(
        math.isclose(stats[k], GELFOND_DEVIATIONS[k], rel_tol=1e-9)
        for k in stats if k in GELFOND_DEVIATIONS
    )
    ks = sorted(stats)
    running = []
    cur = 0.0
    for k in ks:
        cur = max(cur, stats[k])
        running.append(cur)
    top = range(max(1, len(ks) - 4), len(ks))
    growth = max(running[i] / running[i - 1] for i in top)
    raw_ratios = [stats[ks[i]] / stats[ks[i - 1]] for i in range(1, len(ks))]
    passed = repro_ok and growth <= GELFOND_GROWTH_CAP
    return _done("digit-count deviation stability", t0, passed,
                 f"k = {k_lo}..{k_hi}, running-max growth {growth:.4f} "
                 f"(cap {GELFOND_GROWTH_CAP}), per-k ratio range "
                 f"[{min(raw_ratios):.4f}, {max(raw_ratios):.4f}], "
                 f"frozen repro {repro_ok}")


def check_theorem_trend(scales: tuple[int, ...] = tuple(range(14, 25))) -> CheckResult:
    """|S0| * ln X / X at sqrt(2)-convergent frequencies: the top three
    scales stay at or below the committed plateau cap, and every recorded
    value reproduces the frozen calibration."""
    t0 = time.perf_counter()
    rhos = {}
    repro_ok = True
    for k in scales:
        a, q, frozen = TREND_RHO[k]
        X = 2**k
        rho = abs(naive_quadratic_sum(Fraction(a, q), X)) * math.log(X) / X
        rhos[k] = rho
        if not math.isclose(rho, frozen, rel_tol=TREND_REPRO_RTOL):
            repro_ok = False
    top_vals = [rhos[k] for k in TREND_TOP_SCALES if k in rhos]
    trend_ok = all(v <= TREND_CAP for v in top_vals)
    passed = repro_ok and trend_ok
    top_txt = ", ".join(f"2^{k}: {rhos[k]:.6f}" for k in TREND_TOP_SCALES if k in rhos)
    return _done("quadratic-sum trend", t0, passed,
                 f"cap {TREND_CAP} at top scales ({top_txt}), frozen repro {repro_ok}")


def check_performance(linear_x: int = 10**15, corr_x: int = 10**12,
                      h_max: int = 1000, calls: int = 50,
                      seed: int = SEED) -> CheckResult:
    """Per-call latency of the fast evaluators at large cutoffs."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed + 11)
    alphas = [float(x) for x in rng.random(calls)]
    start = time.perf_counter()
    for a in alphas:
        fast_linear_sum(a, linear_x)
    linear_per_call = (time.perf_counter() - start) / calls
    shifts = [int(h) for h in rng.integers(1, h_max + 1, size=calls)]
    start = time.perf_counter()
    for a, h in zip(alphas, shifts):
        fast_correlation_sum(corr_x, h, a)
    corr_per_call = (time.perf_counter() - start) / calls
    passed = (linear_per_call < FAST_LINEAR_BUDGET
              and corr_per_call < FAST_CORR_BUDGET)
    return _done("fast evaluator latency", t0, passed,
                 f"linear @{linear_x:.0e}: {linear_per_call*1e6:.0f} us/call, "
                 f"correlation @{corr_x:.0e}: {corr_per_call*1e6:.0f} us/call "
                 f"(budget {FAST_LINEAR_BUDGET*1e3:.0f} ms)")


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

_Check = tuple[Callable[..., CheckResult], dict]

QUICK_SUITE: list[_Check] = [
    (check_digit_recurrences, {"n_values": 100_000}),
    (check_balancedness, {"k_max": 16}),
    (check_partition_counts, {"cases": 10, "x_max": 20_000}),
    (check_oracle_identities, {"count": 40, "x_max": 3_000}),
    (check_fast_linear, {"count": 60, "x_max": 50_000}),
    (check_fast_correlation, {"count": 60, "x_max": 20_000, "h_max": 128}),
    (check_coefficient_bound, {"h_max": 256, "betas_per_h": 20}),
    (check_descent_bookkeeping, {"cases": 40}),
    (check_geometric_bound, {"count": 200, "m_max": 100_000}),
    (check_vdc_inequality, {"count": 40, "x_max": 2_000, "q_max": 32}),
    (check_rational_approximation, {"count": 60}),
    (check_parameter_choice, {}),
    (check_corollary, {"count_identity": 25, "count_chain": 10, "x_max": 2_000}),
    (check_gelfond_stability, {"k_lo": 10, "k_hi": 16}),
]

FULL_SUITE: list[_Check] = [
    (check_digit_recurrences, {"n_values": 1_000_000}),
    (check_balancedness, {"k_max": 24}),
    (check_partition_counts, {}),
    (check_oracle_identities, {"count": 200, "x_max": 10_000}),
    (check_fast_linear, {"count": 500, "x_max": 1_000_000}),
    (check_fast_correlation, {"count": 500, "x_max": 100_000, "h_max": 512}),
    (check_coefficient_bound, {"h_max": 4096, "betas_per_h": 100}),
    (check_descent_bookkeeping, {"cases": 200}),
    (check_descent_statement_constant, {}),
    (check_geometric_bound, {"count": 1000, "m_max": 1_000_000}),
    (check_vdc_inequality, {"count": 200, "x_max": 10_000, "q_max": 64}),
    (check_rational_approximation, {"count": 300}),
    (check_parameter_choice, {}),
    (check_corollary, {"count_identity": 100, "count_chain": 50, "x_max": 10_000}),
    (check_pipeline_distance_chain, {}),
    (check_gelfond_stability, {"k_lo": 10, "k_hi": 22, "m_max": 32}),
    (check_theorem_trend, {}),
    (check_performance, {}),
]


def run_suite(level: str = "quick", echo: bool = True) -> list[CheckResult]:
    """Run the named suite; prints one line per check when echo is set."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown verification level: {level!r}")
    suite = QUICK_SUITE if level == "quick" else FULL_SUITE
    results = []
    for fn, kwargs in suite:
        res = fn(**kwargs)
        results.append(res)
        if echo:
            print(res.line(), flush=True)
    if echo:
        n_pass = sum(r.passed for r in results)
        total = sum(r.elapsed for r in results)
        print(f"{n_pass}/{len(results)} checks passed in {total:.1f}s")
    return results
