"""Independent oracle for zeta and gamma values.

Nothing here touches the integral representations: zeta comes from
Euler-Maclaurin summation (with the functional equation for Re z < 0) and,
as a cross-check on Re z > 0, from the Borwein acceleration of the
alternating eta series.  Gamma uses a Lanczos approximation with reflection.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import DomainError, PoleError
from .special_kernels import bernoulli_numbers

__all__ = [
    "APERY",
    "KnownValue",
    "known_values",
    "reference_zeta",
    "reference_gamma",
    "reciprocal_gamma",
    "zeta_euler_maclaurin",
    "zeta_eta",
    "zeta_functional",
    "zeta_even_exact",
    "sinpi",
    "cospi",
]

APERY = 1.2020569031595942853997381615114499907649862923405

# Lanczos approximation, g = 7, 9 coefficients
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

EM_CUT = 50
EM_TERMS = 12
ETA_TERMS = 60
_FE_SWITCH = -0.1


# --------------------------------------------------------------------------
# trigonometric helpers exact at integers
# --------------------------------------------------------------------------


def _sinpi_real(x: float) -> float:
    r = math.fmod(x, 2.0)
    if r == math.floor(r):
        return 0.0
    if r < -1.0:
        r += 2.0
    elif r > 1.0:
        r -= 2.0
    # r in [-1, 1]; reduce to [-1/2, 1/2] by symmetry sin(pi(1 - r)) = sin(pi r)
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _cospi_real(x: float) -> float:
    return _sinpi_real(x + 0.5) if abs(x) < 2**52 else 1.0


def sinpi(z: complex) -> complex:
    """``sin(pi z)``, exactly zero at integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0:
        return complex(_sinpi_real(x))
    return complex(_sinpi_real(x) * math.cosh(math.pi * y), _cospi_real(x) * math.sinh(math.pi * y))


def cospi(z: complex) -> complex:
    """``cos(pi z)``, exactly zero at half-integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0:
        return complex(_cospi_real(x))
    return complex(_cospi_real(x) * math.cosh(math.pi * y), -_sinpi_real(x) * math.sinh(math.pi * y))


# --------------------------------------------------------------------------
# gamma
# --------------------------------------------------------------------------


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _gamma_right(z: complex) -> complex:
    """Lanczos for Re z >= 1/2."""
    z = z - 1.0
    acc = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc


def reference_gamma(z: complex) -> complex:
    """Complex gamma function.

    Parameters
    ----------
    z : complex
        Must not be a nonpositive integer.

    Raises
    ------
    PoleError
        At ``z = 0, -1, -2, ...``.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at z = {z.real:g}")
    if z.real < 0.5:
        return math.pi / (sinpi(z) * _gamma_right(1.0 - z))
    return _gamma_right(z)


def reciprocal_gamma(z: complex) -> complex:
    """``1 / gamma(z)``, entire; zero at the nonpositive integers."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        return 0j
    if z.real < 0.5:
        return sinpi(z) * _gamma_right(1.0 - z) / math.pi
    return 1.0 / _gamma_right(z)


# --------------------------------------------------------------------------
# zeta
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _em_coefficients(terms: int) -> Tuple[float, ...]:
    b = bernoulli_numbers(2 * terms)
    return tuple(float(b[2 * j] / math.factorial(2 * j)) for j in range(1, terms + 1))


def zeta_euler_maclaurin(z: complex, cut: int = EM_CUT, terms: int = EM_TERMS) -> complex:
    """Euler-Maclaurin summation of ``sum k^-z``.

    ``sum_{k<N} k^-z + N^(1-z)/(z-1) + N^-z/2 + sum_j B_2j/(2j)! (z)_(2j-1) N^(-z-2j+1)``
    where ``(z)_m`` is the rising factorial.  Valid for all z != 1, but for
    Re z < 0 the partial sum grows like ``N^(1 - Re z)`` and rounding error
    grows with it, so :func:`reference_zeta` switches to the functional
    equation there.
    """
    z = complex(z)
    if z == 1:
        raise PoleError("zeta has a pole at z = 1")
    n = float(cut)
    acc = 0j
    # sum smallest terms first
    for k in range(cut - 1, 0, -1):
        acc += cmath.exp(-z * math.log(k))
    log_n = math.log(n)
    n_mz = cmath.exp(-z * log_n)
    acc += n * n_mz / (z - 1.0) + 0.5 * n_mz
    rising = z
    power = n_mz / n
    for j, coeff in enumerate(_em_coefficients(terms), start=1):
        acc += coeff * rising * power
        rising *= (z + 2 * j - 1) * (z + 2 * j)
        power /= n * n
    return acc


@lru_cache(maxsize=None)
def _eta_weights(n: int) -> Tuple[float, ...]:
    """``(d_k - d_n) / d_n`` for the Borwein alternating-series acceleration."""
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    return tuple(float((d[k] - dn) / dn) for k in range(n))


def zeta_eta(z: complex, terms: int = ETA_TERMS) -> complex:
    """``zeta(z) = eta(z) / (1 - 2^(1-z))`` with Borwein-accelerated eta.

    Intended for Re z > 0 and moderate ``|Im z|``.
    """
    z = complex(z)
    denom = 1.0 - cmath.exp((1.0 - z) * math.log(2.0))
    if abs(denom) < 1e-14:
        raise PoleError(f"1 - 2^(1-z) vanishes at z = {z}")
    w = _eta_weights(terms)
    acc = 0j
    for k in range(terms - 1, -1, -1):
        term = w[k] * cmath.exp(-z * math.log(k + 1))
        acc += -term if k % 2 == 0 else term
    return acc / denom


def zeta_functional(z: complex) -> complex:
    """``2^z pi^(z-1) sin(pi z/2) gamma(1-z) zeta(1-z)`` with zeta(1-z) by Euler-Maclaurin."""
    z = complex(z)
    if z == 1:
        raise PoleError("zeta has a pole at z = 1")
    if z == 0:
        return complex(-0.5)
    s = sinpi(0.5 * z)
    if s == 0:
        return 0j
    factor = cmath.exp(z * math.log(2.0) + (z - 1.0) * math.log(math.pi))
    return factor * s * reference_gamma(1.0 - z) * zeta_euler_maclaurin(1.0 - z)


def reference_zeta(z: complex) -> complex:
    """Riemann zeta with relative accuracy near 1e-15 on the working region.

    Euler-Maclaurin for ``Re z >= -0.1``, functional equation further left.
    Near z = 0 the functional equation is useless because ``1 - z`` rounds
    onto the pole, while the Euler-Maclaurin partial sum is still tame.

    Raises
    ------
    PoleError
        At z = 1.
    """
    z = complex(z)
    if z == 1:
        raise PoleError("zeta has a pole at z = 1")
    if z.real >= _FE_SWITCH:
        return zeta_euler_maclaurin(z)
    return zeta_functional(z)


def zeta_even_exact(m: int) -> Fraction:
    """Rational ``r`` with ``zeta(2m) = r pi^(2m)``, m >= 1."""
    if m < 1:
        raise DomainError("m must be >= 1")
    b = bernoulli_numbers(2 * m)[2 * m]
    sign = 1 if m % 2 == 1 else -1
    return sign * b * 2 ** (2 * m - 1) / math.factorial(2 * m)


# --------------------------------------------------------------------------
# known values
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class KnownValue:
    """A tabulated value of zeta.

    ``tolerance`` is the absolute accuracy of ``value`` itself, so rounded
    decimal displays can be compared honestly.
    """

    z: complex
    value: float
    closed_form: str
    provenance: str
    tolerance: float = 0.0


@lru_cache(maxsize=1)
def known_values() -> Tuple[KnownValue, ...]:
    rows = [KnownValue(0j, -0.5, "-1/2", "special value")]
    rows += [KnownValue(complex(-2 * n), 0.0, "0", "trivial zero") for n in range(1, 5)]
    rows += [KnownValue(complex(-1), -1.0 / 12.0, "-1/12", "-B_2/2")]
    for m in range(1, 7):
        r = zeta_even_exact(m)
        rows.append(KnownValue(complex(2 * m), float(r) * math.pi ** (2 * m), f"{r} pi^{2 * m}", "Bernoulli closed form"))
    rows.append(KnownValue(3 + 0j, 1.2020569032, "1.2020569032", "ten-digit display", 5e-11))
    rows.append(KnownValue(3 + 0j, APERY, "Apery constant", "high-precision constant"))
    return tuple(rows)
