import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tmsums import (best_rational_approximation, choose_parameters,
                    convergent_sequence, corollary_check, farey_fractions,
                    naive_gauss_sum, naive_quadratic_sum, nearest_int_distance,
                    theorem_pipeline, vdc_inequality_check)
from tmsums.fasteval import fast_correlation_sum
from tmsums.phases import as_phase, scale_phase


def test_nearest_int_distance_examples():
    assert nearest_int_distance(0.5) == pytest.approx(0.5)
    assert nearest_int_distance(1.2) == pytest.approx(0.2)
    assert nearest_int_distance(-0.3) == pytest.approx(0.3)
    assert nearest_int_distance(7.0) == 0.0


@given(st.floats(min_value=-1e9, max_value=1e9))
def test_nearest_int_distance_properties(x):
    d = nearest_int_distance(x)
    assert 0.0 <= d <= 0.5
    assert nearest_int_distance(x + 1.0) == pytest.approx(d, abs=1e-6)
    assert nearest_int_distance(-x) == pytest.approx(d, abs=1e-9)


def test_best_rational_examples():
    r = best_rational_approximation(0.5, 10)
    assert (r.a, r.q, r.theta) == (1, 2, 0.0)
    r = best_rational_approximation(0.3, 10)
    assert (r.a, r.q) == (3, 10)
    assert abs(r.theta) < 1
    seq = convergent_sequence(math.sqrt(2) - 1, 12)
    assert [c.q for c in seq] == [1, 2, 5, 12]
    assert best_rational_approximation(math.sqrt(2) - 1, 12).q == 12


def test_best_rational_rejects_bad_input():
    with pytest.raises(ValueError):
        best_rational_approximation(float("nan"), 10)
    with pytest.raises(ValueError):
        best_rational_approximation(float("inf"), 10)
    with pytest.raises(ValueError):
        best_rational_approximation(0.5, 0)


@settings(max_examples=150)
@given(st.floats(min_value=-10.0, max_value=10.0,
                 allow_nan=False, allow_infinity=False),
       st.integers(min_value=1, max_value=10**9))
def test_best_rational_invariants(alpha, q_max):
    r = best_rational_approximation(alpha, q_max)
    assert math.gcd(r.a, r.q) == 1
    assert 1 <= r.q <= q_max
    assert abs(r.theta) < 1
    assert abs(alpha - r.a / r.q) <= 1.0 / r.q**2


def test_farey_sequence():
    f5 = farey_fractions(5)
    assert len(f5) == 11
    assert f5[0] == 0 and f5[-1] == 1
    assert f5 == sorted(f5)
    assert all(f.denominator <= 5 for f in f5)
    assert Fraction(2, 5) in f5 and Fraction(1, 2) in f5
    # |F_n| = 1 + sum_{m<=n} phi(m)
    assert len(farey_fractions(7)) == 1 + sum(
        sum(1 for a in range(1, m + 1) if math.gcd(a, m) == 1) for m in range(1, 8))


def test_choose_parameters_examples():
    Q, j0 = choose_parameters(2**20, 1.0)
    assert Q == 193
    # smallest j with 193^(log2 3) * j * 2^-j <= (ln 2^20)^-2
    target = math.log(2**20) ** -2 / 193 ** math.log2(3)
    assert j0 * 2.0**-j0 <= target < (j0 - 1) * 2.0 ** (-(j0 - 1))
    assert j0 == 25
    assert choose_parameters(15, 0.5)[0] == 3  # ceil(ln 15) = 3


def test_choose_parameters_rejects():
    with pytest.raises(ValueError):
        choose_parameters(2, 1.0)
    with pytest.raises(ValueError):
        choose_parameters(100, 0.0)


def test_vdc_frozen_example():
    rep = vdc_inequality_check(0.0, 8, 2)
    assert rep.lhs == pytest.approx(4.0, abs=1e-9)
    # ((8+1)/2) * (8 + 2*(1 - 1/2)*|S(7,1,0)|), |S(7,1,0)| = 1
    assert rep.per_h == [pytest.approx(1.0, abs=1e-9)]
    assert rep.rhs == pytest.approx(40.5, abs=1e-9)
    assert rep.ratio <= 1.0


def test_vdc_trivial_q():
    rep = vdc_inequality_check(0.371, 100, 1)
    assert rep.rhs == pytest.approx(100.0**2)
    assert rep.lhs <= rep.rhs


def test_vdc_rejects_bad_q():
    with pytest.raises(ValueError):
        vdc_inequality_check(0.1, 10, 11)
    with pytest.raises(ValueError):
        vdc_inequality_check(0.1, 10, 0)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
       st.integers(min_value=2, max_value=2000),
       st.integers(min_value=1, max_value=32))
def test_vdc_ratio_never_exceeds_one(alpha, X, Q):
    rep = vdc_inequality_check(alpha, X, min(Q, X))
    assert rep.ratio <= 1.0


def test_vdc_per_h_matches_direct_products():
    # the inner sums are the shifted products z_{n+h} conj(z_n) up to a
    # unimodular factor, so their absolute values must coincide
    alpha, X, Q = 0.3137, 500, 8
    num, den = as_phase(alpha)
    rep = vdc_inequality_check(alpha, X, Q)
    z = [0] * (X + 1)
    for n in range(1, X + 1):
        sq = (num * n * n) % den
        eps = -1 if bin(n).count("1") % 2 else 1
        z[n] = eps * np.exp(2j * np.pi * (sq / den))
    for h in range(1, Q):
        direct = abs(sum(z[n + h] * np.conj(z[n]) for n in range(1, X - h + 1)))
        assert rep.per_h[h - 1] == pytest.approx(direct, abs=1e-8)


def test_corollary_frozen_example():
    rep = corollary_check(0.0, 8)
    # restricted sum 3 equals (S0 + S1)/2 = (-2 + 8)/2
    assert rep.identity_error == pytest.approx(0.0, abs=1e-12)
    assert rep.identity_ok and rep.chain_ok


def test_corollary_chain_explicit():
    alpha, X = 0.25, 1000
    rep = corollary_check(alpha, X)
    assert rep.chain_ok
    assert rep.square_lhs == pytest.approx(abs(naive_gauss_sum(alpha, X)) ** 2, rel=1e-12)
    # recompute the chain rhs independently
    rhs = float(X)
    for h in range(1, X):
        d = nearest_int_distance(2 * h * 0.25)
        rhs += 2 * min(float(X), math.inf if d == 0 else 1 / (2 * d))
    assert rep.square_rhs == pytest.approx(rhs, rel=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
       st.integers(min_value=1, max_value=2000))
def test_corollary_identity_random(alpha, X):
    rep = corollary_check(alpha, X)
    assert rep.identity_error <= 1e-9
    assert rep.chain_ok


def test_pipeline_small_q_fails_window():
    rep = theorem_pipeline(0.5, 2**14, 1.0)
    assert rep.approximation.q == 2
    assert not rep.q_window_pass
    assert rep.Q, rep.j0 == choose_parameters(2**14, 1.0)
    assert len(rep.per_h) == rep.Q - 1
    assert rep.per_h[0].N == -1  # no descent for the unit shift
    for s in rep.per_h:
        assert 0.0 <= s.beta_next < 1.0
        assert s.max_inv_dist > 0
    assert rep.ratio == rep.actual / rep.predicted_scale


def test_pipeline_distance_chain_exercised():
    # a large-denominator frequency at small c makes the side condition bite
    conv = convergent_sequence(math.sqrt(2.0), int(2**20 * 0.95))[-1]
    rep = theorem_pipeline(Fraction(conv.a, conv.q), 2**20, 0.25)
    applicable = [s for s in rep.per_h if s.a_condition]
    assert applicable, "expected at least one shift with the side condition"
    assert all(s.min_dist_ok for s in applicable)


def test_pipeline_actual_matches_oracle():
    rep = theorem_pipeline(0.3, 5000, 1.0)
    assert rep.actual == pytest.approx(abs(naive_quadratic_sum(0.3, 5000)), rel=1e-12)
    assert rep.predicted_scale == pytest.approx(5000 * math.log(5000) ** -1.0)


def test_pipeline_terminal_frequency_definition():
    # beta_next must equal 2^{N+1} * (2 h alpha) mod 1
    alpha, X = 0.137, 2**14
    rep = theorem_pipeline(alpha, X, 1.0)
    num, den = as_phase(alpha)
    for s in rep.per_h[:8]:
        twoh = scale_phase(num, den, 2 * s.h)
        shifted = scale_phase(*twoh, 2 ** (s.N + 1))
        assert s.beta_next == pytest.approx(shifted[0] / shifted[1], abs=1e-12)
