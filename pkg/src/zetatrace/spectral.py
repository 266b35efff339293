"""The Dirichlet Laplacian on (0, 1): spectrum, traces and spectral zeta.

The eigenvalues of ``-d^2/dx^2`` with zero boundary values are
``lambda_k = (k pi)^2``.  Traces of functions of the operator are available in
closed form (via the hyperbolic kernels) and as truncated eigenvalue sums with
an integral-comparison tail bound, so the two can be checked against each
other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, PoleError, StripError
from .quadrature import DEFAULT_QUADRATURE_CONFIG, IntervalSpec, QuadratureConfig, QuadratureResult, integrate
from .reference import reciprocal_gamma
from .special_kernels import bernoulli_numbers, resolvent_trace_kernel, trace_derivative_kernel

__all__ = [
    "DirichletSpectrum",
    "TraceValue",
    "eigenvalue",
    "resolvent_trace",
    "resolvent_tail_integral",
    "heat_trace",
    "heat_trace_mellin",
    "spectral_zeta",
    "resolvent_kernel_value",
    "DEFAULT_TRUNCATION",
]

DEFAULT_TRUNCATION = 10_000
_EPS = np.finfo(float).eps


def eigenvalue(k: int) -> float:
    """``(k pi)^2`` for k >= 1."""
    if int(k) != k or k < 1:
        raise DomainError(f"eigenvalue index must be a positive integer, got {k!r}")
    return (k * math.pi) ** 2


@dataclass(frozen=True)
class TraceValue:
    """A trace together with an error bound.

    For the eigenvalue-sum route ``partial_sum`` is the plain sum over
    ``k <= K`` and ``value`` adds the midpoint of the integral bracket for the
    dropped tail; ``bound`` is a rigorous bound on ``|value - exact|``.
    """

    value: float
    bound: float
    route: str
    partial_sum: Optional[float] = None
    terms: Optional[int] = None


def resolvent_tail_integral(n: int, t: float, K: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> float:
    """``int_K^inf (pi^2 x^2 + t)^-n dx`` for ``K > 0``.

    Uses the binomial expansion in ``c / x^2`` (``c = t / pi^2``) when it
    converges fast, quadrature otherwise.
    """
    c = t / math.pi**2
    ratio = c / (K * K)
    if ratio < 0.25:
        acc = 0.0
        coeff = 1.0  # binom(-n, j)
        term_pow = K ** (1 - 2 * n)
        j = 0
        while True:
            term = coeff * term_pow / (2 * n + 2 * j - 1)
            acc += term
            if abs(term) <= 1e-18 * abs(acc):
                break
            coeff *= -(n + j) / (j + 1)
            term_pow *= ratio
            j += 1
        return acc * math.pi ** (-2 * n)
    res = integrate(
        lambda x: (math.pi**2 * x * x + t) ** (-n),
        IntervalSpec(a=K, decay_power=2 * n),
        cfg,
    )
    return res.value.real


class DirichletSpectrum:
    """Spectrum ``lambda_k = (k pi)^2`` with eigenvalue-sum traces."""

    def eigenvalue(self, k: int) -> float:
        return eigenvalue(k)

    def eigenvalues(self, K: int) -> np.ndarray:
        k = np.arange(1, K + 1, dtype=float)
        return (k * math.pi) ** 2

    def truncation_tail_bound(self, n: int, t: float, K: int) -> float:
        """Upper bound on ``sum_{k>K} (lambda_k + t)^-n``."""
        return resolvent_tail_integral(n, t, K)

    def resolvent_sum(self, n: int, t: float, K: int) -> TraceValue:
        lam = self.eigenvalues(K)
        partial = math.fsum((lam + t) ** (-n))
        # the summand decreases in k, so the tail lies in [T(K+1), T(K)]
        upper = resolvent_tail_integral(n, t, K)
        lower = resolvent_tail_integral(n, t, K + 1)
        value = partial + 0.5 * (upper + lower)
        bound = 0.5 * (upper - lower) + 8 * _EPS * abs(value)
        return TraceValue(value, bound, f"sum({K})", partial, K)


_SPECTRUM = DirichletSpectrum()


def resolvent_trace(n: int, t: float, route: str = "closed", K: int = DEFAULT_TRUNCATION) -> TraceValue:
    """``tr (-Delta_D + t)^-n = sum_k (pi^2 k^2 + t)^-n``.

    Parameters
    ----------
    n : int
        Power, ``n >= 1``.
    t : float
        Spectral shift, ``t > 0``.
    route : {"closed", "sum"}
        ``closed`` differentiates the ``n = 1`` closed form ``n - 1`` times;
        ``sum`` adds up ``K`` eigenvalues and brackets the tail.
    """
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    if not t > 0:
        raise DomainError("t must be positive")
    if route == "closed":
        if n == 1:
            value = float(resolvent_trace_kernel(t))
        else:
            sign = -1.0 if (n - 1) % 2 else 1.0
            value = sign / math.factorial(n - 1) * float(trace_derivative_kernel(n - 1, t))
        return TraceValue(value, 1000.0 * _EPS * abs(value), "closed")
    if route == "sum":
        if int(K) != K or K < 1:
            raise DomainError("K must be a positive integer")
        return _SPECTRUM.resolvent_sum(n, t, int(K))
    raise DomainError(f"unknown route {route!r}")


def heat_trace(t):
    """``sum_k exp(-pi^2 k^2 t)`` (vectorised).

    Large t sums directly; small t uses the Jacobi transformation
    ``sum_{k>=1} e^{-pi^2 k^2 t} = (1/(2 sqrt(pi t))) (1 + 2 sum_{k>=1} e^{-k^2/t}) - 1/2``.
    """
    t = np.asarray(t, dtype=float)
    if not np.all(t > 0):
        raise DomainError("heat_trace requires t > 0")
    out = np.empty(t.shape)
    direct = t >= 0.3
    td = t[direct]
    if td.size:
        kmax = math.ceil(math.sqrt(40.0 / (math.pi**2 * td.min()))) + 2
        k = np.arange(1, kmax + 1, dtype=float)
        out[direct] = np.exp(-np.outer(td, (math.pi * k) ** 2)).sum(axis=1)
    ts = t[~direct]
    if ts.size:
        kmax = math.ceil(math.sqrt(40.0 * ts.max())) + 2
        k = np.arange(1, kmax + 1, dtype=float)
        dual = np.exp(-np.outer(1.0 / ts, k * k)).sum(axis=1)
        out[~direct] = (0.5 + dual) / np.sqrt(math.pi * ts) - 0.5
    return float(out) if out.ndim == 0 else out


def heat_trace_mellin(z: complex, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> QuadratureResult:
    """``Gamma(z)^-1 int_0^inf t^(z-1) heat_trace(t) dt`` (equals ``pi^(-2z) zeta(2z)``).

    Valid for ``Re z > 1/2``.
    """
    z = complex(z)
    if not z.real > 0.5:
        raise StripError("heat-trace Mellin transform", z, "Re z > 1/2")

    # on (0, 1] subtract the Jacobi terms 1/(2 sqrt(pi t)) - 1/2; the rest is O(e^(-1/t))
    def head(t):
        return np.exp((z - 1.0) * np.log(t)) * (heat_trace(t) - 0.5 / np.sqrt(math.pi * t) + 0.5)

    def tail(t):
        return np.exp((z - 1.0) * np.log(t)) * heat_trace(t)

    res = integrate(head, IntervalSpec(a=0.0, b=1.0), cfg) + integrate(tail, IntervalSpec(a=1.0, decay="exponential"), cfg)
    closed = 0.5 / (math.sqrt(math.pi) * (z - 0.5)) - 0.5 / z
    return (res + QuadratureResult(closed, 0.0, 0, True)).scaled(reciprocal_gamma(z))


def _series_spectral_zeta(z: complex, cut: int = 30, terms: int = 14) -> complex:
    """``sum_k lambda_k^-z`` by Euler-Maclaurin applied to ``f(x) = (pi x)^(-2z)``."""
    w = 2.0 * z
    k = np.arange(1, cut, dtype=float)
    head = complex(np.sum(np.exp(-w * np.log(math.pi * k))[::-1]))
    n = float(cut)
    fn = cmath.exp(-w * math.log(math.pi * n))
    acc = head + n * fn / (w - 1.0) + 0.5 * fn
    b = bernoulli_numbers(2 * terms)
    rising = w
    power = fn / n
    for j in range(1, terms + 1):
        acc += float(b[2 * j] / math.factorial(2 * j)) * rising * power
        rising *= (w + 2 * j - 1) * (w + 2 * j)
        power /= n * n
    return acc


def spectral_zeta(z: complex, route: str = "series", n: int = 2, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> complex:
    """``sum_k lambda_k^-z = pi^(-2z) zeta(2z)``.

    ``route="series"`` sums the eigenvalues (Re z > 1/2).  ``route="resolvent"``
    integrates the n-th resolvent trace,
    ``Gamma(n) / (Gamma(n-z) Gamma(z)) int_0^inf t^(n-1-z) tr (-Delta_D + t)^-n dt``,
    valid for ``1/2 < Re z < n``.
    """
    z = complex(z)
    if route == "series":
        if not z.real > 0.5:
            raise StripError("spectral zeta (series)", z, "Re z > 1/2")
        return _series_spectral_zeta(z)
    if route != "resolvent":
        raise DomainError(f"unknown route {route!r}")
    if int(n) != n or n < 1 or not (0.5 < z.real < n):
        raise StripError(f"spectral zeta (resolvent, n={n})", z, f"1/2 < Re z < {n}")
    sign = -1.0 if (n - 1) % 2 else 1.0
    scale = sign / math.factorial(n - 1)

    def f(t):
        return np.exp((n - 1 - z) * np.log(t)) * (scale * trace_derivative_kernel(n - 1, t))

    res = integrate(f, IntervalSpec(left_endpoint_power=n - 1 - z.real, decay_power=z.real + 0.5), cfg)
    pref = math.factorial(n - 1) * reciprocal_gamma(n - z) * reciprocal_gamma(z)
    return res.value * pref


def _sinc(u: complex) -> complex:
    if abs(u) < 1e-4:
        u2 = u * u
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0
    return cmath.sin(u) / u


def resolvent_kernel_value(z: complex, x: float, y: float) -> complex:
    """Green's function of ``-Delta_D - z`` on (0, 1).

    ``G(x, y) = sin(w x_<) sin(w (1 - x_>)) / (w sin w)`` with ``w = sqrt(z)``
    (even in ``w``, so the branch is irrelevant).

    Raises
    ------
    PoleError
        When z is an eigenvalue ``(k pi)^2``.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError("x and y must lie in [0, 1]")
    z = complex(z)
    lo, hi = min(x, y), max(x, y)
    w = cmath.sqrt(z)
    if w.imag < 0:
        w = -w
    if abs(w) < 1.0:
        # below the first eigenvalue; the sinc form has no 0/0 as z -> 0
        return lo * (1.0 - hi) * _sinc(w * lo) * _sinc(w * (1.0 - hi)) / _sinc(w)
    if w.imag <= 20.0:
        s = cmath.sin(w)
        if abs(s) < 1e-12 * max(1.0, abs(w)):
            raise PoleError(f"z = {z} is an eigenvalue of the Dirichlet Laplacian")
        return cmath.sin(w * lo) * cmath.sin(w * (1.0 - hi)) / (w * s)
    # exponential form: every exponential has modulus <= 1 when Im w >= 0
    e = cmath.exp(-1j * w * (lo - hi))
    p1 = 1.0 - cmath.exp(2j * w * lo)
    p2 = 1.0 - cmath.exp(2j * w * (1.0 - hi))
    p3 = 1.0 - cmath.exp(2j * w)
    return -e * p1 * p2 / (2j * w * p3)
