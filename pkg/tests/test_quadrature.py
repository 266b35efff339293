import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetatrace.errors import DomainError, IntegrandError
from zetatrace.quadrature import (
    IntervalSpec,
    QuadratureConfig,
    QuadratureResult,
    contour_circle,
    integrate,
    integrate_tensor,
)
from zetatrace.special_kernels import coth_remainder

ZETA3 = float(mpmath.zeta(3))
EULER_GAMMA = float(mpmath.euler)

inf = math.inf
semi = IntervalSpec.semi_infinite
fin = IntervalSpec.finite


def _bose(z):
    return lambda s: s ** (z - 1) / np.expm1(s)


# (name, integrand, interval, exact value)
GOLDEN = [
    ("gamma2", lambda s: s * np.exp(-s), semi(decay="exponential"), 1.0),
    ("gamma_half", lambda s: s**-0.5 * np.exp(-s), semi(left_endpoint_power=-0.5, decay="exponential"), math.sqrt(math.pi)),
    (
        "coth_remainder_zeta3",
        lambda s: coth_remainder(1, s) / s**3,
        semi(decay="algebraic", decay_power=2.0),
        -ZETA3 / math.pi**2,
    ),
    ("lorentz", lambda s: 1.0 / (1.0 + s * s), semi(decay="algebraic", decay_power=2.0), math.pi / 2),
    ("log_gamma", lambda s: np.log(s) * np.exp(-s), semi(decay="exponential"), -EULER_GAMMA),
    ("power_09", lambda s: s**-0.9, fin(0.0, 1.0, left_endpoint_power=-0.9), 10.0),
    ("sine", np.sin, fin(0.0, math.pi), 2.0),
    ("gauss", lambda s: np.exp(-s * s), semi(decay="exponential"), math.sqrt(math.pi) / 2),
    (
        "bose_complex",
        _bose(2.5 + 1j),
        semi(left_endpoint_power=0.5, decay="exponential"),
        complex(mpmath.gamma(2.5 + 1j) * mpmath.zeta(2.5 + 1j)),
    ),
    ("slow_algebraic", lambda s: (1.0 + s) ** -1.5, semi(decay="algebraic", decay_power=1.5), 2.0),
    ("damped_cos", lambda s: np.cos(s) * np.exp(-s), semi(decay="exponential"), 0.5),
    ("dilog", lambda s: np.log1p(s) / s, fin(0.0, 1.0), math.pi**2 / 12),
    ("quarter_disc", lambda s: np.sqrt(np.maximum(1.0 - s * s, 0.0)), fin(0.0, 1.0), math.pi / 4),
    (
        "stieltjes",
        lambda s: s**-0.5 / (1.0 + s),
        semi(left_endpoint_power=-0.5, decay="algebraic", decay_power=1.5),
        math.pi,
    ),
    ("gamma_35", lambda s: s**2.5 * np.exp(-s), semi(decay="exponential"), math.gamma(3.5)),
    ("sech", lambda s: 1.0 / np.cosh(s), semi(decay="exponential"), math.pi / 2),
    ("fermi", lambda s: s * s / (np.exp(s) + 1.0), semi(decay="exponential"), 1.5 * ZETA3),
    ("kink", lambda s: np.abs(s - 1.0), fin(0.0, 2.0, breakpoints=(1.0,)), 1.0),
    ("log_root", lambda s: s**-0.5 * np.log(s), fin(0.0, 1.0, left_endpoint_power=-0.5), -4.0),
    ("gamma_03", lambda s: s**-0.7 * np.exp(-s), semi(left_endpoint_power=-0.7, decay="exponential"), math.gamma(0.3)),
]
GOLDEN_IDS = [g[0] for g in GOLDEN]


@pytest.mark.parametrize("name,f,spec,exact", GOLDEN, ids=GOLDEN_IDS)
def test_golden_integrals(name, f, spec, exact):
    res = integrate(f, spec)
    assert res.converged
    assert abs(res.value - exact) <= 1e-11 * max(1.0, abs(exact))


@pytest.mark.parametrize("name,f,spec,exact", GOLDEN, ids=GOLDEN_IDS)
def test_converged_meets_tolerance_contract(name, f, spec, exact):
    cfg = QuadratureConfig(rel_tol=1e-9)
    res = integrate(f, spec, cfg)
    assert res.converged
    assert res.error_estimate <= max(cfg.abs_tol, cfg.rel_tol * abs(res.value))
    assert res.evals > 0


def test_error_estimate_honesty():
    """True error is at most 10x the estimate on at least 95% of golden cases."""
    honest = 0
    total = 0
    for rel_tol in (1e-6, 1e-9, 1e-12):
        cfg = QuadratureConfig(rel_tol=rel_tol)
        for _, f, spec, exact in GOLDEN:
            res = integrate(f, spec, cfg)
            total += 1
            honest += abs(res.value - exact) <= 10 * res.error_estimate
    assert honest / total >= 0.95, f"{honest}/{total} honest"


@pytest.mark.parametrize("name,f,spec,exact", GOLDEN, ids=GOLDEN_IDS)
def test_monotone_refinement(name, f, spec, exact):
    prev = inf
    for rel_tol in (1e-4, 5e-5, 2.5e-5, 1e-6, 5e-7, 1e-9, 5e-10, 1e-12):
        err = abs(integrate(f, spec, QuadratureConfig(rel_tol=rel_tol)).value - exact)
        # below a few ulps the residual is rounding noise
        assert err <= max(prev, 8 * np.finfo(float).eps * max(1.0, abs(exact)))
        prev = err


@given(
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=-3, max_value=3),
    st.sampled_from(range(len(GOLDEN))),
    st.sampled_from(range(len(GOLDEN))),
)
def test_linearity(alpha, beta, i, j):
    _, f, spec_f, _ = GOLDEN[i]
    _, g, spec_g, _ = GOLDEN[j]
    if spec_f != spec_g:
        spec_f = spec_g = semi(decay="exponential")
        f, g = GOLDEN[0][1], GOLDEN[7][1]
    rf, rg = integrate(f, spec_f), integrate(g, spec_f)
    rh = integrate(lambda s: alpha * f(s) + beta * g(s), spec_f)
    combined = alpha * rf.value + beta * rg.value
    slack = 2 * (abs(alpha) * rf.error_estimate + abs(beta) * rg.error_estimate + rh.error_estimate)
    assert abs(rh.value - combined) <= slack + 1e-14 * (abs(alpha) + abs(beta) + 1)


@given(st.floats(min_value=-0.95, max_value=3.0))
def test_endpoint_power_hint(alpha):
    spec = fin(0.0, 1.0, left_endpoint_power=alpha)
    res = integrate(lambda s: s**alpha, spec)
    assert res.converged
    assert res.value.real == pytest.approx(1.0 / (alpha + 1.0), rel=1e-11)


@given(st.floats(min_value=1.2, max_value=4.0))
def test_algebraic_tail(p):
    res = integrate(lambda s: (1.0 + s) ** -p, semi(decay="algebraic", decay_power=p))
    assert res.value.real == pytest.approx(1.0 / (p - 1.0), rel=1e-10)


@given(st.floats(min_value=1.05, max_value=4.0), st.floats(min_value=-3.0, max_value=3.0))
def test_complex_bose_against_mpmath(x, y):
    z = complex(x, y)
    res = integrate(_bose(z), semi(left_endpoint_power=x - 2.0, decay="exponential"))
    exact = complex(mpmath.gamma(z) * mpmath.zeta(z))
    assert abs(res.value - exact) <= 1e-9 * max(1.0, abs(exact))


def test_shifted_semi_infinite():
    res = integrate(lambda s: np.exp(-s), semi(2.0, decay="exponential"))
    assert res.value.real == pytest.approx(math.exp(-2.0), rel=1e-13)


def test_nonconvergence_is_flagged():
    res = integrate(lambda s: np.sin(1.0 / s), fin(0.0, 1.0), QuadratureConfig(max_evals=2000))
    assert not res.converged
    assert math.isfinite(res.value.real)


def test_non_finite_interior_value_raises():
    def f(s):
        return np.where(np.abs(s - 0.3) < 0.05, np.nan, 1.0)

    with pytest.raises(IntegrandError) as info:
        integrate(f, fin(0.0, 1.0))
    assert abs(info.value.node - 0.3) < 0.05


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(a=1.0, b=1.0),
        dict(a=-1.0, b=inf),
        dict(a=0.0, b=1.0, left_endpoint_power=-1.0),
        dict(a=0.0, b=inf, decay="algebraic", decay_power=1.0),
        dict(a=0.0, b=inf, decay="oscillating"),
        dict(a=0.0, b=1.0, breakpoints=(2.0,)),
    ],
)
def test_interval_spec_validation(kwargs):
    with pytest.raises(DomainError):
        IntervalSpec(**kwargs)


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureConfig(abs_tol=-1.0)


def test_result_arithmetic():
    a = QuadratureResult(1.0 + 0j, 1e-12, 10, True)
    b = QuadratureResult(2.0 + 0j, 2e-12, 5, False)
    c = a + b
    assert c.value == 3.0 and c.evals == 15 and not c.converged
    assert c.error_estimate == pytest.approx(3e-12)
    d = a.scaled(-2.0)
    assert d.value == -2.0 and d.error_estimate == pytest.approx(2e-12)


# -- tensor ------------------------------------------------------------------


def test_tensor_dilog_square():
    exact = 2.0 * (math.pi**2 / 12 - math.log(2.0) ** 2 / 2)
    res = integrate_tensor(lambda x, y: 1.0 / (1.0 - x * y / 2), 2, QuadratureConfig(rel_tol=1e-10))
    assert res.converged
    assert res.value.real == pytest.approx(exact, rel=1e-10)


def test_tensor_double_zeta3():
    res = integrate_tensor(lambda x, y: -np.log(x * y) / (2.0 * (1.0 - x * y)), 2)
    assert abs(res.value.real - ZETA3) <= 1e-6


def test_tensor_triple_zeta3():
    res = integrate_tensor(lambda x, y, z: 1.0 / (1.0 - x * y * z), 3)
    assert abs(res.value.real - ZETA3) <= 1e-5


def test_tensor_error_estimate_covers_error():
    res = integrate_tensor(lambda x, y: -np.log(x * y) / (2.0 * (1.0 - x * y)), 2)
    assert abs(res.value.real - ZETA3) <= 10 * res.error_estimate + 1e-12


def test_tensor_dimension_check():
    with pytest.raises(DomainError):
        integrate_tensor(lambda x: x, 1)


# -- contour -------------------------------------------------------------------


def _cot_resolvent(w):
    r = np.sqrt(w)
    return (1.0 - r / np.tan(r)) / (2.0 * w * w)


@pytest.mark.parametrize("radius", [0.5, 1.0, 3.0])
def test_contour_residues(radius):
    assert abs(contour_circle(lambda w: 1.0 / w, radius) - 1.0) <= 1e-14
    assert abs(contour_circle(lambda w: 1.0 / w**2, radius)) <= 1e-14


def test_contour_cot_resolvent():
    assert abs(contour_circle(_cot_resolvent, 1.0) - 1.0 / 6.0) <= 1e-13


@pytest.mark.parametrize(
    "g",
    [lambda w: 1.0 / w, lambda w: np.exp(w) / w**3, _cot_resolvent, lambda w: 1.0 / (w * (w - 4.0))],
)
def test_contour_node_doubling_stable(g):
    for n in (32, 64, 128):
        assert abs(contour_circle(g, 1.0, n) - contour_circle(g, 1.0, 2 * n)) < 1e-12


def test_contour_validation():
    with pytest.raises(DomainError):
        contour_circle(lambda w: 1 / w, radius=0.0)
    with pytest.raises(DomainError):
        contour_circle(lambda w: 1 / w, nodes=4)
    with pytest.raises(IntegrandError):
        contour_circle(lambda w: np.full_like(w, np.nan), 1.0)
