import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import eigen_sum, mp_coth, mp_coth_remainder, mp_coth_trunc, mp_log_sinh, mp_log_sinh_remainder, mp_log_sinh_trunc, mp_theta
from zetatrace.errors import DomainError
from zetatrace.special_kernels import (
    CothPolynomial,
    KernelConfig,
    bernoulli_numbers,
    bernoulli_poly,
    coth_coefficient,
    coth_remainder,
    coth_remainder_scaled,
    coth_safe,
    coth_trunc,
    log_sinh,
    log_sinh_remainder,
    log_sinh_remainder_scaled,
    log_sinh_trunc,
    resolvent_trace2_kernel,
    resolvent_trace_kernel,
    series_switch,
    theta_sum,
    trace_derivative_kernel,
)
from zetatrace import special_kernels as sk

log_grid = st.floats(min_value=-12, max_value=math.log10(30)).map(lambda e: 10.0**e)


# -- Bernoulli numbers ------------------------------------------------------


def test_bernoulli_small_table():
    tab = bernoulli_numbers(6)
    assert tab[0] == 1
    assert tab[1] == Fraction(-1, 2)
    assert (tab[2], tab[4], tab[6]) == (Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42))
    assert bernoulli_numbers(0)[0] == 1


def test_bernoulli_twelve():
    assert bernoulli_numbers(12)[12] == Fraction(-691, 2730)


@given(st.integers(min_value=1, max_value=120))
def test_bernoulli_recurrence_exact(m):
    tab = bernoulli_numbers(m)
    total = sum(math.comb(m + 1, j) * tab[j] for j in range(m + 1))
    assert total == 0
    assert tab.recurrence_residual(m) == 0


@given(st.integers(min_value=1, max_value=60))
def test_bernoulli_odd_vanish_and_match_mpmath(k):
    tab = bernoulli_numbers(2 * k + 1)
    assert tab[2 * k + 1] == 0
    b = mpmath.bernfrac(2 * k)
    assert tab[2 * k] == Fraction(int(b[0]), int(b[1]))


def test_bernoulli_numbers_are_exact_rationals():
    tab = bernoulli_numbers(40)
    assert all(isinstance(b, Fraction) for b in tab.numbers)


@given(st.floats(min_value=-2, max_value=3))
def test_bernoulli_poly_b2(x):
    assert bernoulli_poly(2, x) == pytest.approx(x * x - x + 1.0 / 6.0, abs=1e-13)


@pytest.mark.parametrize("n", range(0, 13))
def test_bernoulli_poly_at_zero(n):
    assert bernoulli_poly(n, 0.0) == pytest.approx(float(bernoulli_numbers(n)[n]), abs=1e-15)


def test_bernoulli_poly_derivative_identity():
    x, h = 0.3, 1e-5
    fd = (bernoulli_poly(5, x + h) - bernoulli_poly(5, x - h)) / (2 * h)
    assert fd == pytest.approx(5 * bernoulli_poly(4, x), rel=1e-8)


@given(st.integers(min_value=0, max_value=15), st.floats(min_value=-1.5, max_value=2.5))
def test_bernoulli_poly_matches_mpmath(m, x):
    assert bernoulli_poly(m, x) == pytest.approx(float(mpmath.bernpoly(m, x)), rel=1e-12, abs=1e-12)


# -- coth and truncations ---------------------------------------------------


def test_coth_safe_examples():
    assert coth_safe(1.0) == pytest.approx(1.31303528549933, rel=1e-14)
    assert coth_safe(1e3) == 1.0
    assert coth_safe(1e-8) == pytest.approx(1e8 + 3.3333333333333333e-9, rel=1e-16)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_coth_safe_domain(bad):
    with pytest.raises(DomainError):
        coth_safe(bad)


@given(log_grid)
def test_coth_safe_against_oracle(s):
    assert coth_safe(s) == pytest.approx(mp_coth(s), rel=1e-14)


def test_coth_safe_against_direct_formula():
    s = np.logspace(-4, math.log10(30), 400)
    direct = (np.exp(2 * s) + 1) / np.expm1(2 * s)
    assert np.max(np.abs(coth_safe(s) - direct) / direct) <= 1e-13


def test_coth_safe_vectorised():
    s = np.array([1e-6, 0.4, 0.6, 5.0])
    assert np.allclose(coth_safe(s), [coth_safe(float(x)) for x in s], rtol=0, atol=0)


def test_coth_trunc_examples():
    s = 0.7
    assert coth_trunc(0, s) == pytest.approx(1 / s)
    assert coth_trunc(1, s) == pytest.approx(1 / s + s / 3)
    assert coth_trunc(3, s) == pytest.approx(1 / s + s / 3 - s**3 / 45 + 2 * s**5 / 945, rel=1e-15)


def test_coth_trunc_with_table_matches_default():
    tab = bernoulli_numbers(20)
    for n in range(6):
        assert coth_trunc(n, 1.3, tab) == pytest.approx(coth_trunc(n, 1.3), rel=1e-15)


def test_coth_coefficients():
    assert coth_coefficient(1) == Fraction(1, 3)
    assert coth_coefficient(2) == Fraction(-1, 45)
    assert coth_coefficient(3) == Fraction(2, 945)


def test_coth_remainder_examples():
    assert coth_remainder(1, 1.0) == pytest.approx(mp_coth(1.0) - 1 - 1 / 3, rel=1e-13)
    assert coth_remainder(1, 1.0) == pytest.approx(-0.0203, abs=1e-4)
    direct = mp_coth(3.0) - float(mp_coth_trunc(2, 3.0))
    assert abs(coth_remainder(2, 3.0) - direct) <= 1e-12


@pytest.mark.parametrize("n", [0, 1, 2, 3, 5])
def test_coth_remainder_small_s_order(n):
    lead = float(coth_coefficient(n + 1))
    for s in [1e-3, 1e-5, 1e-8]:
        r = coth_remainder(n, s)
        assert r == pytest.approx(lead * s ** (2 * n + 1), rel=1e-5)


@given(st.integers(min_value=0, max_value=6), log_grid)
def test_coth_remainder_against_oracle(n, s):
    exact = mp_coth_remainder(n, s)
    assert coth_remainder(n, s) == pytest.approx(exact, rel=1e-11, abs=1e-300)


@given(st.integers(min_value=0, max_value=6), st.floats(min_value=1e-6, max_value=1.0))
def test_coth_remainder_bound(n, s):
    c = 2 * abs(float(coth_coefficient(n + 1)))
    assert abs(coth_remainder(n, s)) <= c * s ** (2 * n + 1)


@given(st.integers(min_value=0, max_value=6), st.floats(min_value=1e-6, max_value=40.0))
def test_coth_remainder_scaled_consistent(n, s):
    assert coth_remainder_scaled(n, s) * s ** (2 * n + 1) == pytest.approx(coth_remainder(n, s), rel=1e-12)


# -- branch-switch continuity ----------------------------------------------


def _straddle(switch):
    return np.linspace(0.97 * switch, 1.03 * switch, 10)


def test_coth_safe_branches_agree_at_threshold():
    cfg = KernelConfig()
    s = _straddle(cfg.series_threshold)
    series = sk._coth_series(s, cfg.series_terms)
    direct = sk._coth_direct(s)
    assert np.max(np.abs(series - direct) / np.abs(direct)) <= 1e-12


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 6])
def test_coth_remainder_branches_agree(n):
    switch, terms = series_switch(n)
    s = _straddle(switch)
    series = sk._coth_rem_scaled_series(n, s, terms)
    direct = sk._coth_rem_scaled_direct(n, s)
    assert np.max(np.abs(series - direct) / np.abs(series)) <= 1e-11


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 6])
def test_log_sinh_remainder_branches_agree(n):
    switch, terms = series_switch(n)
    t = _straddle(switch) ** 2
    series = np.polyval(sk._log_sinh_coeffs(n + terms)[n:][::-1], t)
    direct = sk._log_sinh_rem_scaled_direct(n, t)
    assert np.max(np.abs(series - direct) / np.abs(series)) <= 1e-11


@pytest.mark.parametrize("threshold", [0.3, 0.5, 1.0, 1.5])
def test_resolvent_kernels_continuous_across_threshold(threshold):
    """Each kernel evaluated with a tiny and a large threshold sees both branches."""
    lo, hi = KernelConfig(series_threshold=0.05), KernelConfig(series_threshold=1.7, series_terms=80)
    t = _straddle(threshold) ** 2
    for kern in (resolvent_trace_kernel, resolvent_trace2_kernel, log_sinh):
        a, b = kern(t, lo), kern(t, hi)
        assert np.max(np.abs(a - b) / np.abs(b)) <= 1e-11, kern.__name__


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_trace_derivative_continuous_across_switch(n):
    switch, _ = series_switch(n)
    t = _straddle(switch) ** 2
    vals = trace_derivative_kernel(n, t)
    exact = np.array([eigen_sum(n + 1, x, n) for x in t])
    assert np.max(np.abs(vals - exact) / np.abs(exact)) <= 1e-11


def test_series_switch_orders():
    for order in range(0, 8):
        switch, terms = series_switch(order)
        assert 0.5 <= switch <= 2.5
        assert terms >= 24
        assert (switch / math.pi) ** (2 * terms) < 1e-17


def test_kernel_config_rejects_threshold_outside_radius():
    with pytest.raises((ValueError, DomainError)):
        KernelConfig(series_threshold=3.2)
    with pytest.raises((ValueError, DomainError)):
        KernelConfig(series_threshold=0.0)


# -- resolvent traces ------------------------------------------------------


def test_resolvent_trace_kernel_examples():
    assert resolvent_trace_kernel(1e-14) == pytest.approx(1 / 6, rel=1e-13)
    assert resolvent_trace_kernel(1.0) == pytest.approx(0.1565176, abs=1e-7)
    assert resolvent_trace_kernel(1.0) == pytest.approx(eigen_sum(1, 1.0), rel=1e-14)
    t = 1e8
    assert resolvent_trace_kernel(t) == pytest.approx(0.5 * t**-0.5 - 0.5 / t, rel=1e-14)


def test_resolvent_trace2_kernel_examples():
    assert abs(resolvent_trace2_kernel(1.0) - eigen_sum(2, 1.0)) <= 1e-10
    assert resolvent_trace2_kernel(1e-12) == pytest.approx(1 / 90, rel=1e-11)
    t = 1e10
    assert resolvent_trace2_kernel(t) * t**1.5 == pytest.approx(0.25, rel=1e-4)


@given(log_grid)
def test_resolvent_trace_kernels_match_eigen_sums(s):
    t = s * s
    assert resolvent_trace_kernel(t) == pytest.approx(eigen_sum(1, t), rel=1e-13)
    assert resolvent_trace2_kernel(t) == pytest.approx(eigen_sum(2, t), rel=1e-12)


@pytest.mark.parametrize("bad", [0.0, -2.0])
def test_resolvent_kernels_domain(bad):
    for kern in (resolvent_trace_kernel, resolvent_trace2_kernel, log_sinh):
        with pytest.raises(DomainError):
            kern(bad)
    with pytest.raises(DomainError):
        trace_derivative_kernel(1, bad)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("t", [0.5, 1.0, 5.0, 20.0])
def test_trace_derivative_matches_termwise_sum(n, t):
    assert trace_derivative_kernel(n, t) == pytest.approx(eigen_sum(n + 1, t, n), rel=1e-10)


def test_trace_derivative_zeroth_is_resolvent_kernel():
    t = np.array([1e-6, 0.2, 1.0, 7.0, 300.0])
    assert np.allclose(trace_derivative_kernel(0, t), resolvent_trace_kernel(t), rtol=1e-14, atol=0)


def test_trace_derivative_first_example():
    assert trace_derivative_kernel(1, 1.0) == pytest.approx(-eigen_sum(2, 1.0), rel=1e-13)


@given(st.integers(min_value=0, max_value=5), log_grid)
def test_trace_derivative_property(n, s):
    t = s * s
    assert trace_derivative_kernel(n, t) == pytest.approx(eigen_sum(n + 1, t, n), rel=1e-10)


# -- CothPolynomial algebra -----------------------------------------------


def test_coth_polynomial_derivative_rules():
    coth = CothPolynomial({(0, 1): 1})
    assert coth.derivative() == CothPolynomial({(0, 0): 1, (0, 2): -1})
    inv = CothPolynomial({(1, 0): 1})
    assert inv.derivative() == CothPolynomial({(2, 0): -1})


@given(st.integers(min_value=0, max_value=4), st.floats(min_value=1.5, max_value=6.0))
def test_coth_polynomial_derivative_matches_finite_difference(n, s):
    p = sk.resolvent_derivative_polynomial(n)
    h = 1e-5 * s
    fd = (p.evaluate(s + h) - p.evaluate(s - h)) / (2 * h)
    assert float(p.derivative().evaluate(s)) == pytest.approx(float(fd), rel=1e-6, abs=1e-9)


def test_second_derivative_contains_cross_terms():
    # d^2/dt^2 of the resolvent trace carries s^-3 coth(s) csch(s)^2 = s^-3 (coth^3 - coth)
    p = sk.resolvent_derivative_polynomial(2)
    assert (3, 3) in p.terms and (3, 1) in p.terms


@given(st.integers(min_value=0, max_value=4), st.floats(min_value=1.0, max_value=30.0))
def test_coth_polynomial_asymptotic_split(n, s):
    p = sk.resolvent_derivative_polynomial(n)
    powers = sum(float(c) * s ** (-i) for i, c in p.asymptotic_powers().items())
    total = powers + float(p.evaluate_exponential_part(s))
    assert total == pytest.approx(float(p.evaluate(s)), rel=1e-9, abs=1e-14)


# -- log sinh --------------------------------------------------------------


def test_log_sinh_remainder_examples():
    t = 0.8
    s = math.sqrt(t)
    assert log_sinh_remainder(1, t) == pytest.approx(math.log(math.sinh(s) / s) - t / 6, rel=1e-12)
    direct = float(mp_log_sinh(4.0) - mp_log_sinh_trunc(2, 4.0))
    assert abs(log_sinh_remainder(2, 4.0) - direct) <= 1e-12


@pytest.mark.parametrize("n", [0, 1, 2, 4])
def test_log_sinh_remainder_order(n):
    lead = float(coth_coefficient(n + 1)) / (2 * n + 2)
    for t in [1e-4, 1e-8]:
        assert log_sinh_remainder(n, t) == pytest.approx(lead * t ** (n + 1), rel=1e-3)


@given(st.integers(min_value=0, max_value=6), log_grid)
def test_log_sinh_remainder_against_oracle(n, s):
    t = s * s
    exact = mp_log_sinh_remainder(n, t)
    assert log_sinh_remainder(n, t) == pytest.approx(exact, rel=1e-11, abs=1e-300)
    assert log_sinh_remainder_scaled(n, t) * t ** (n + 1) == pytest.approx(exact, rel=1e-11, abs=1e-300)


@given(log_grid)
def test_log_sinh_against_oracle(s):
    t = s * s
    assert log_sinh(t) == pytest.approx(float(mp_log_sinh(t)), rel=1e-13)


def test_log_sinh_large_argument():
    t = 1e6
    assert log_sinh(t) == pytest.approx(float(mp_log_sinh(t)), rel=1e-15)


def test_log_sinh_trunc_first_term():
    assert log_sinh_trunc(1, 0.3) == pytest.approx(0.05)
    assert log_sinh_trunc(0, 0.3) == 0.0


# -- theta ------------------------------------------------------------------


def test_theta_sum_at_one():
    brute = math.fsum(math.exp(-k * k * math.pi) for k in range(1, 21))
    assert theta_sum(1.0) == pytest.approx(brute, rel=1e-15)
    # e^{-pi} = 0.0432139 is only the first summand; the sum is 0.0432174
    assert theta_sum(1.0) == pytest.approx(0.0432174, abs=1e-7)


def test_theta_sum_large_t():
    t = 4.0
    lead = math.exp(-math.pi * t)
    assert theta_sum(t) == pytest.approx(lead * (1 + math.exp(-3 * math.pi * t)), rel=1e-15)


@given(st.floats(min_value=1e-3, max_value=50.0))
def test_theta_sum_against_oracle(t):
    # exp(-pi t) has condition number pi t in t
    assert theta_sum(t) == pytest.approx(mp_theta(t), rel=1e-15 * (1 + math.pi * t), abs=1e-300)


def test_theta_sum_domain():
    with pytest.raises(DomainError):
        theta_sum(0.0)
