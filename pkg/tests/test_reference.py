import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import mp_zeta
from zetatrace.errors import DomainError, PoleError
from zetatrace.reference import (
    APERY,
    known_values,
    reciprocal_gamma,
    reference_gamma,
    reference_zeta,
    sinpi,
    zeta_euler_maclaurin,
    zeta_eta,
    zeta_even_exact,
    zeta_functional,
)


def rel(a, b):
    return abs(complex(a) - complex(b)) / abs(complex(b))


# -- gamma ----------------------------------------------------------------------


def test_gamma_examples():
    assert reference_gamma(1) == pytest.approx(1.0, rel=1e-15)
    assert reference_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert reference_gamma(5) == pytest.approx(24.0, rel=1e-14)


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        reference_gamma(z)
    assert reciprocal_gamma(z) == 0


@given(st.floats(min_value=-8.5, max_value=30), st.floats(min_value=-10, max_value=10))
def test_gamma_against_mpmath(x, y):
    z = complex(x, y)
    assume(abs(z - round(x)) > 1e-3 or x > 0.5)
    assert rel(reference_gamma(z), mpmath.gamma(z)) <= 1e-13


@given(st.floats(min_value=-6.5, max_value=20), st.floats(min_value=-8, max_value=8))
def test_gamma_recurrence(x, y):
    z = complex(x, y)
    assume(abs(z - round(x)) > 1e-3)
    assert rel(reference_gamma(z + 1), z * reference_gamma(z)) <= 1e-13


@given(st.floats(min_value=-0.95, max_value=0.95), st.floats(min_value=-3, max_value=3))
def test_gamma_reflection(x, y):
    z = complex(x, y)
    assume(abs(z) > 1e-3)
    lhs = reference_gamma(z) * reference_gamma(1 - z)
    assert rel(lhs, cmath.pi / sinpi(z)) <= 1e-13


@given(st.floats(min_value=-10, max_value=10), st.floats(min_value=-5, max_value=5))
def test_reciprocal_gamma_consistent(x, y):
    z = complex(x, y)
    assume(abs(z - round(x)) > 1e-3)
    assert rel(reciprocal_gamma(z) * reference_gamma(z), 1.0) <= 1e-13


def test_sinpi_exact_at_integers():
    for k in range(-10, 11):
        assert sinpi(k) == 0
    assert sinpi(0.5) == 1.0


# -- zeta -----------------------------------------------------------------------


def test_zeta_examples():
    assert reference_zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert abs(reference_zeta(3) - 1.2020569032) <= 5e-11
    assert reference_zeta(3) == pytest.approx(APERY, rel=1e-15)
    assert reference_zeta(0) == -0.5


def test_zeta_pole():
    with pytest.raises(PoleError):
        reference_zeta(1)
    with pytest.raises(PoleError):
        zeta_euler_maclaurin(1)


@given(st.floats(min_value=-10, max_value=30), st.floats(min_value=-10, max_value=10))
def test_zeta_against_mpmath(x, y):
    z = complex(x, y)
    assume(abs(z - 1) > 1e-3)
    exact = mp_zeta(z)
    scale = abs(exact)
    if x < -1:
        # near the trivial zeros only sin(pi z/2) is small; the rest sets the conditioning
        w = mpmath.mpc(z)
        scale = max(scale, abs(complex(2**w * mpmath.pi ** (w - 1) * mpmath.gamma(1 - w) * mpmath.zeta(1 - w))))
    assert abs(reference_zeta(z) - exact) <= 1e-13 * scale


@pytest.mark.parametrize("x", [0.2, 0.6, 0.9, 1.3, 1.7, 2.1, 2.6, 3.0, 3.5, 4.0, 4.5, 5.0])
@pytest.mark.parametrize("y", [-5.0, 0.0, 5.0])
def test_em_and_eta_agree(x, y):
    z = complex(x, y)
    assert abs(zeta_euler_maclaurin(z) - zeta_eta(z)) <= 1e-12 * max(1.0, abs(zeta_eta(z)))


@pytest.mark.parametrize(
    "z", [-0.5, -1.5, -2.5 + 1j, -3.3, -0.1 - 2j, -4.7 + 0.5j, -6.2, -8.9 + 3j, -1.0, -9.5 - 1j]
)
def test_functional_equation_self_consistency(z):
    lhs = complex(mpmath.zeta(z))
    assert abs(zeta_functional(z) - lhs) <= 1e-11 * max(1.0, abs(lhs))
    assert abs(reference_zeta(z) - lhs) <= 1e-13 * max(1.0, abs(lhs))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_trivial_zeros(n):
    assert reference_zeta(-2 * n) == 0
    assert abs(zeta_functional(-2 * n + 1e-12)) <= 1e-11


@pytest.mark.parametrize("z", [1e-300, -5e-73, -5e-73 + 5e-73j, 1e-9j, -0.05 + 0.3j])
def test_zeta_near_zero(z):
    assert abs(reference_zeta(z) - mp_zeta(z)) <= 1e-14


def test_zeta_minus_one():
    assert reference_zeta(-1) == pytest.approx(-1.0 / 12.0, rel=1e-14)


@pytest.mark.parametrize("m", range(1, 13))
def test_even_exact_rationals(m):
    b = mpmath.bernoulli(2 * m)
    exact = abs(b) * 2 ** (2 * m - 1) / mpmath.factorial(2 * m)
    assert float(zeta_even_exact(m)) == pytest.approx(float(exact), rel=1e-15)
    assert reference_zeta(2 * m) == pytest.approx(float(zeta_even_exact(m)) * math.pi ** (2 * m), rel=1e-14)


def test_even_exact_domain():
    with pytest.raises(DomainError):
        zeta_even_exact(0)


def test_known_values_table():
    table = known_values()
    zs = [kv.z for kv in table]
    assert 0 in zs
    assert all(complex(-2 * n) in zs for n in range(1, 5))
    assert all(complex(2 * m) in zs for m in range(1, 7))
    for kv in table:
        assert abs(reference_zeta(kv.z) - kv.value) <= kv.tolerance + 1e-14 * max(1.0, abs(kv.value)), kv
