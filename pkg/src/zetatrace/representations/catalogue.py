"""The catalogue of zeta representations.

Every entry is ``value = offset + prefactor * integral`` where the integral is
an adaptive quadrature (or a series / contour evaluation).  Integrands are
written so that nothing overflows on the mapped tail: for large abscissae the
hyperbolic kernels are expanded into separate power terms, and near the origin
the cancellation-safe kernels supply the scaled remainders.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError, PoleError, UnknownRepresentation
from ..quadrature import IntervalSpec, QuadratureConfig, QuadratureResult, contour_circle, integrate, integrate_tensor
from ..reference import reciprocal_gamma, sinpi, zeta_even_exact
from ..spectral import heat_trace_mellin, spectral_zeta
from ..special_kernels import (
    bernoulli_poly_coefficients,
    coth_coefficient,
    coth_remainder_scaled,
    log_sinh_remainder_scaled,
    resolvent_derivative_polynomial,
    resolvent_trace2_kernel,
    resolvent_trace_kernel,
    series_switch,
    theta_sum,
    trace_derivative_kernel,
)
from ._base import (
    Domain,
    ParamSlot,
    RepresentationDescriptor,
    bose,
    coth_minus_one,
    cpow,
    csch2,
    exact,
    fermi,
    piecewise,
)

__all__ = ["catalogue", "lookup", "catalogue_ids", "euler_even_value", "residue_even_value", "odd_points"]

_PI = math.pi
_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)

Params = Mapping[str, Any]


# --------------------------------------------------------------------------
# small scalar helpers
# --------------------------------------------------------------------------


def _pi_pow(w: complex) -> complex:
    return cmath.exp(w * _LNPI)


def _two_pow(w: complex) -> complex:
    return cmath.exp(w * _LN2)


def _sin_half(z: complex) -> complex:
    """``sin(pi z / 2)``, exactly zero at even integers."""
    return sinpi(0.5 * z)


def _sq(s: np.ndarray) -> np.ndarray:
    """``s^2`` floored at 1e-300: the t-kernels are smooth at 0 but reject t = 0."""
    return np.maximum(s * s, 1e-300)


def _alpha(a: float) -> Optional[float]:
    """Endpoint power hint; only negative powers need the substitution."""
    return a if a < 0 else None


@lru_cache(maxsize=None)
def _c(k: int) -> float:
    return float(coth_coefficient(k))


def _f(k: int) -> float:
    return _c(k) / (2 * k)


def _one_minus_two_pow(w: complex) -> complex:
    """``1 - 2^w``."""
    return 1.0 - _two_pow(w)


def _semi(f, cfg, alpha=None, decay="exponential", p=2.0, a=0.0) -> QuadratureResult:
    return integrate(f, IntervalSpec(a=a, left_endpoint_power=_alpha(alpha) if alpha is not None else None, decay=decay, decay_power=p), cfg)


def _finite(f, a, b, cfg, alpha=None) -> QuadratureResult:
    return integrate(f, IntervalSpec(a=a, b=b, left_endpoint_power=_alpha(alpha) if alpha is not None else None), cfg)


def _strip(lo=-math.inf, hi=math.inf, excluded=(), real_only=False) -> Callable[[Params], Domain]:
    dom = Domain(lo, hi, tuple(complex(e) for e in excluded), real_only=real_only)
    return lambda p: dom


def _points(pts, rule="") -> Callable[[Params], Domain]:
    dom = Domain(points=tuple(complex(x) for x in pts), point_rule=rule)
    return lambda p: dom


def odd_points(max_value: int = 9) -> Tuple[int, ...]:
    return tuple(range(3, max_value + 1, 2))


_ODD = odd_points(9)


def _odd_n(z: complex) -> int:
    """``n`` with ``z = 2n + 1``."""
    n = int(round((z.real - 1) / 2))
    return n


# --------------------------------------------------------------------------
# series helpers
# --------------------------------------------------------------------------


def _linear_series(z: complex, alpha: float, beta: float, cut: int = 40, terms: int = 10) -> complex:
    """``sum_{k>=0} (alpha k + beta)^-z`` by partial sum plus Euler-Maclaurin tail."""
    k = np.arange(cut, dtype=float)
    head = complex(np.sum(cpow(alpha * k + beta, -z)[::-1]))
    x = alpha * cut + beta
    tail = cmath.exp((1.0 - z) * math.log(x)) / (alpha * (z - 1.0)) + 0.5 * cmath.exp(-z * math.log(x))
    # f^(m)(K) = (-z)(-z-1)...(-z-m+1) alpha^m x^(-z-m)
    from ..special_kernels import bernoulli_numbers

    b = bernoulli_numbers(2 * terms)
    deriv = -z * alpha * cmath.exp((-z - 1.0) * math.log(x))  # f'(K)
    for j in range(1, terms + 1):
        tail -= float(b[2 * j] / math.factorial(2 * j)) * deriv
        # advance from f^(2j-1) to f^(2j+1)
        m = 2 * j - 1
        deriv *= (-z - m) * (-z - m - 1) * alpha * alpha / (x * x)
    return head + tail


def _cvz_alternating(z: complex, terms: int = 64) -> complex:
    """``sum_{k>=0} (-1)^k (k+1)^-z`` by Cohen-Villegas-Zagier acceleration."""
    d = (3.0 + math.sqrt(8.0)) ** terms
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = 0j
    for k in range(terms):
        c = b - c
        acc += c * cmath.exp(-z * math.log(k + 1))
        b = (k + terms) * (k - terms) * b / ((k + 0.5) * (k + 1.0))
    return acc / d


def euler_even_value(m: int) -> float:
    """``zeta(2m) = (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)``."""
    return float(zeta_even_exact(m)) * _PI ** (2 * m)


def _residue_kernel(m: int) -> Callable:
    def g(w):
        r = np.sqrt(w)
        return w ** (-m) * (1.0 - r / np.tan(r)) / (2.0 * w)

    return g


def residue_even_value(m: int, radius: float = 1.0, nodes: int = 64) -> complex:
    """``pi^(2m)`` times the circle integral of ``w^-m (1 - sqrt(w) cot sqrt(w)) / (2w)``."""
    if m < 1:
        raise DomainError("m must be >= 1")
    if not 0 < radius < _PI**2:
        raise DomainError("radius must lie in (0, pi^2) to exclude the first eigenvalue")
    return contour_circle(_residue_kernel(m), radius, nodes) * _PI ** (2 * m)


# --------------------------------------------------------------------------
# kernels of the resolvent/coth family
# --------------------------------------------------------------------------


# Power term ``coef * s^w * log(s)^k`` (k in {0, 1}) of an integrand's large-s expansion.
PowerTerm = Tuple[complex, complex, int]


def _power_sum(terms: Sequence[PowerTerm]) -> Callable:
    def g(s):
        acc = np.zeros(s.shape, dtype=complex)
        ls = np.log(s)
        for coef, w, k in terms:
            acc = acc + coef * np.exp(w * ls) * (ls if k else 1.0)
        return acc

    return g


def _power_tail(terms: Sequence[PowerTerm], c: float) -> complex:
    """``int_c^inf sum coef s^w log(s)^k ds`` in closed form (each Re w < -1)."""
    lc = math.log(c)
    acc = 0j
    for coef, w, k in terms:
        e = w + 1.0
        cw = cmath.exp(e * lc)
        acc += -coef * cw / e if k == 0 else -coef * cw * (lc / e - 1.0 / (e * e))
    return acc


def _algebraic(
    small: Callable,
    exp_part: Callable,
    terms: Sequence[PowerTerm],
    cut: float,
    cfg: QuadratureConfig,
    alpha: Optional[float] = None,
    a: float = 0.0,
) -> QuadratureResult:
    """``int_a^inf f`` where ``f = small`` on ``(0, cut]`` and ``exp_part + sum(terms)`` beyond.

    The power terms are integrated in closed form past ``max(a, cut)``, so the
    quadrature never sees a slowly decaying (and possibly log-oscillating)
    tail.
    """
    c = max(a, cut)
    res = integrate(exp_part, IntervalSpec(a=c, decay="exponential"), cfg)
    if c > a:
        head = integrate(small, IntervalSpec(a=a, b=c, left_endpoint_power=_alpha(alpha) if (alpha is not None and a == 0) else None), cfg)
        res = res + head
    return res + exact(_power_tail(terms, c))


def _algebraic_integrand(small: Callable, exp_part: Callable, terms: Sequence[PowerTerm], cut: float) -> Callable:
    """The same function as one callable (used by checks and plots of the integrand)."""
    tail = _power_sum(terms)
    return lambda s: piecewise(s, cut, small, lambda x: exp_part(x) + tail(x))


def _resolvent_parts(z: complex):
    """``s^(-z-1) [s coth s - 1]`` split as (small, exponential part, power terms)."""

    def small(s):
        return cpow(s, 1.0 - z) * (2.0 * resolvent_trace_kernel(_sq(s)))

    def exp_part(s):
        return cpow(s, -z) * coth_minus_one(s)

    return small, exp_part, [(1.0, -z, 0), (-1.0, -z - 1.0, 0)]


def _coth_remainder_parts(z: complex, n: int):
    """``s^-z [coth s - coth_n s]`` split as (small, exponential part, power terms, cut)."""
    cut = max(1.0, series_switch(n)[0])

    def small(s):
        return cpow(s, 2 * n + 1 - z) * coth_remainder_scaled(n, s)

    def exp_part(s):
        return cpow(s, -z) * coth_minus_one(s)

    terms = [(1.0, -z, 0), (-1.0, -z - 1.0, 0)] + [(-_c(k), 2 * k - 1 - z, 0) for k in range(1, n + 1)]
    return small, exp_part, terms, cut


def _l23_integral(z, p, cfg):
    small, exp_part, terms = _resolvent_parts(z)
    return _algebraic(small, exp_part, terms, 1.0, cfg, alpha=1.0 - z.real)


def _e210_integral(z, p, cfg):
    def small(t):
        return cpow(t, -0.5 * z) * (2.0 * resolvent_trace_kernel(t))

    def exp_part(t):
        return cpow(t, -0.5 * z - 0.5) * coth_minus_one(np.sqrt(t))

    terms = [(1.0, -0.5 * z - 0.5, 0), (-1.0, -0.5 * z - 1.0, 0)]
    return _algebraic(small, exp_part, terms, 1.0, cfg, alpha=-0.5 * z.real)


def _l25_prefactor(z, p):
    # sin(pi z/2) / (2 - z) = sin(pi w/2) / w with w = 2 - z, finite at z = 2
    w = 2.0 - z
    ratio = 0.5 * _PI * (1.0 - (0.5 * _PI * w) ** 2 / 6.0) if abs(w) < 1e-8 else sinpi(0.5 * w) / w
    return ratio * _pi_pow(z - 1.0)


def _l25_integral(z, p, cfg):
    def small(s):
        return cpow(s, 3.0 - z) * (4.0 * resolvent_trace2_kernel(_sq(s)))

    def exp_part(s):
        return cpow(s, -z) * coth_minus_one(s) + cpow(s, 1.0 - z) * csch2(s)

    terms = [(1.0, -z, 0), (-2.0, -z - 1.0, 0)]
    return _algebraic(small, exp_part, terms, 1.0, cfg, alpha=3.0 - z.real)


def _e222_integral(z, p, cfg):
    def small(t):
        return cpow(t, 1.0 - 0.5 * z) * (4.0 * resolvent_trace2_kernel(t))

    def exp_part(t):
        s = np.sqrt(t)
        return cpow(t, -0.5 - 0.5 * z) * coth_minus_one(s) + cpow(t, -0.5 * z) * csch2(s)

    terms = [(1.0, -0.5 - 0.5 * z, 0), (-2.0, -1.0 - 0.5 * z, 0)]
    return _algebraic(small, exp_part, terms, 1.0, cfg, alpha=1.0 - 0.5 * z.real)


def _t28_w(z, p) -> complex:
    return 0.5 * z - p["n"]


def _t28_prefactor(z, p):
    n = p["n"]
    w = _t28_w(z, p)
    return (-1) ** n * _pi_pow(z) * reciprocal_gamma(1.0 - w) * reciprocal_gamma(n + w)


def _derivative_parts(n: int, e: complex):
    """``s^e P_n(s)`` with ``P_n = ((1/s) d/ds)^n [s^-2 (s coth s - 1)]``, split at ``s`` large."""
    poly = resolvent_derivative_polynomial(n)
    scale = 2.0 ** (n + 1)

    def small(s):
        return cpow(s, e) * (scale * trace_derivative_kernel(n, _sq(s)))

    def exp_part(s):
        return cpow(s, e) * poly.evaluate_exponential_part(s)

    terms = [(float(c), e - i, 0) for i, c in poly.asymptotic_powers().items()]
    return small, exp_part, terms, max(1.0, series_switch(n)[0])


def _t28_integral(z, p, cfg):
    n = p["n"]
    w = _t28_w(z, p)
    poly = resolvent_derivative_polynomial(n)
    h = 2.0 ** (-n - 1)

    def small(t):
        return cpow(t, -w) * trace_derivative_kernel(n, t)

    def exp_part(t):
        return cpow(t, -w) * (h * poly.evaluate_exponential_part(np.sqrt(t)))

    terms = [(h * float(c), -w - 0.5 * i, 0) for i, c in poly.asymptotic_powers().items()]
    cut = max(1.0, series_switch(n)[0]) ** 2
    return _algebraic(small, exp_part, terms, cut, cfg, alpha=-w.real)


def _t28s_prefactor(z, p):
    return _t28_prefactor(z, p) * 2.0 ** (-p["n"])


def _t28s_integral(z, p, cfg):
    n = p["n"]
    w = _t28_w(z, p)
    small, exp_part, terms, cut = _derivative_parts(n, 1.0 - 2.0 * w)
    return _algebraic(small, exp_part, terms, cut, cfg, alpha=1.0 - 2.0 * w.real)


def _sin_pi_prefactor(z, p):
    return _sin_half(z) * _pi_pow(z - 1.0)


def _t29_integral(z, p, cfg):
    n = p["n"]
    small, exp_part, terms, cut = _coth_remainder_parts(z, n)
    return _algebraic(small, exp_part, terms, cut, cfg, alpha=2 * n + 1 - z.real)


def _t210_prefactor(z, p):
    return 0.5 * z * _sin_half(z) * _pi_pow(z - 1.0)


def _t210_integral(z, p, cfg):
    # log(sinh(s)/s) = s - log 2 - log s + log(1 - e^(-2s)), s = sqrt(t)
    n = p["n"]
    cut = max(1.0, series_switch(n)[0]) ** 2

    def small(t):
        return cpow(t, n - 0.5 * z) * log_sinh_remainder_scaled(n, t)

    def exp_part(t):
        return cpow(t, -0.5 * z - 1.0) * np.log1p(-np.exp(-2.0 * np.sqrt(t)))

    terms = [(1.0, -0.5 * z - 0.5, 0), (-_LN2, -0.5 * z - 1.0, 0), (-0.5, -0.5 * z - 1.0, 1)]
    terms += [(-_f(k), k - 0.5 * z - 1.0, 0) for k in range(1, n + 1)]
    return _algebraic(small, exp_part, terms, cut, cfg, alpha=n - 0.5 * z.real)


def _t210s_integral(z, p, cfg):
    n = p["n"]
    cut = max(1.0, series_switch(n)[0])

    def small(s):
        return 2.0 * cpow(s, 2 * n + 1 - z) * log_sinh_remainder_scaled(n, _sq(s))

    def exp_part(s):
        return 2.0 * cpow(s, -z - 1.0) * np.log1p(-np.exp(-2.0 * s))

    terms = [(2.0, -z, 0), (-2.0 * _LN2, -z - 1.0, 0), (-2.0, -z - 1.0, 1)]
    terms += [(-2.0 * _f(k), 2 * k - z - 1.0, 0) for k in range(1, n + 1)]
    return _algebraic(small, exp_part, terms, cut, cfg, alpha=2 * n + 1 - z.real)


def _e257_check(z: complex, n: int) -> None:
    for ell in range(1, n + 1):
        if abs(z - 2 * ell) < 1e-10:
            raise PoleError(
                f"z = {z} is within 1e-10 of the removable singularity 2*{ell}; use euler_even({ell})"
            )


def _e257_integral(z, p, cfg):
    n, a = p["n"], p["a"]
    _e257_check(z, n)
    small, exp_part, terms = _resolvent_parts(z)
    outer = _algebraic(small, exp_part, terms, 1.0, cfg, a=a)
    # s^(-z-1) [s coth s - 1 - sum c_k s^2k] = s^-z [coth s - coth_n s] on (0, a)
    rsmall, rexp, rterms, rcut = _coth_remainder_parts(z, n)
    inner = integrate(
        _algebraic_integrand(rsmall, rexp, rterms, rcut),
        IntervalSpec(a=0.0, b=a, left_endpoint_power=_alpha(2 * n + 1 - z.real)),
        cfg,
    )
    poly = sum(_c(k) * cmath.exp((2 * k - z) * math.log(a)) / (2 * k - z) for k in range(1, n + 1))
    return outer + inner + exact(poly)


def _e212_integral(z, p, cfg):
    return heat_trace_mellin(0.5 * z, cfg)


def _e217_integral(z, p, cfg):
    return exact(spectral_zeta(0.5 * z, route="resolvent", n=p["n"], cfg=cfg))


# --------------------------------------------------------------------------
# appendix kernels
# --------------------------------------------------------------------------


def _mellin(power: Callable[[complex, Params], complex], kernel: Callable[[np.ndarray, Params], np.ndarray], lead: float):
    """``int_0^inf t^power k(t) dt`` for ``k ~ t^-lead`` at 0 with exponential decay.

    ``kernel`` is the regular product ``t^lead k(t)``, so nothing overflows
    near the origin, and its value at 0 is integrated in closed form.
    """

    def integral(z, p, cfg):
        w = power(z, p) - lead
        k0 = complex(np.asarray(kernel(np.array([1e-300]), p))[0])
        # subtract the value at 0 on (0, 1]: the rest is O(t^(w+1)) and bounded
        head = _finite(lambda t: cpow(t, w) * (kernel(t, p) - k0), 0.0, 1.0, cfg)
        tail = _semi(lambda t: cpow(t, w) * kernel(t, p), cfg, a=1.0)
        return head + tail + exact(k0 / (w + 1.0))

    return integral


def _xbose(x: np.ndarray) -> np.ndarray:
    """``x / (e^x - 1)``."""
    with np.errstate(over="ignore"):
        return x / np.expm1(x)


def _sech(x: np.ndarray) -> np.ndarray:
    """``1 / cosh(x)`` for x >= 0."""
    e = np.exp(-x)
    return 2.0 * e / (1.0 + e * e)


def _xcsch(x: np.ndarray) -> np.ndarray:
    """``x / sinh(x)``."""
    return 2.0 * x * np.exp(-x) / -np.expm1(-2.0 * x)


def _expm1c(w: np.ndarray) -> np.ndarray:
    """``exp(w) - 1`` for complex w without cancellation."""
    x, y = w.real, w.imag
    em = np.expm1(x)
    return em * np.cos(y) - 2.0 * np.sin(0.5 * y) ** 2 + 1j * np.exp(x) * np.sin(y)


def _xbose_mu(t, p):
    """``t / (e^(mu t) - 1)``."""
    mu = p["mu"]
    if mu.imag == 0:
        return _xbose(mu.real * t) / mu.real
    return t * np.exp(-mu * t) / -_expm1c(-mu * t)


def _fermi_mu(t, p):
    mu = p["mu"]
    e = np.exp(-mu * t)
    return e / (1.0 + e)


def _jensen(z: complex, r: float) -> Callable:
    """``sin(z atan(t/r)) / (r^2 + t^2)^(z/2)``."""
    return lambda t: np.sin(z * np.arctan(t / r)) * np.exp(-0.5 * z * np.log(r * r + t * t))


def _theta_integral(z, p, cfg):
    # split at 1 with theta(1/u) = sqrt(u) theta(u) + (sqrt(u) - 1)/2
    f = lambda u: (cpow(u, 0.5 * z - 1.0) + cpow(u, -0.5 * z - 0.5)) * theta_sum(u)
    res = _semi(f, cfg, a=1.0, decay="exponential")
    return QuadratureResult(res.value + 1.0 / (z - 1.0) - 1.0 / z, res.error_estimate, res.evals, res.converged)


def _theta_termwise_integral(z, p, cfg):
    first = _semi(lambda t: cpow(t, 0.5 * z - 1.0) * np.exp(-_PI * t), cfg, alpha=0.5 * z.real - 1.0)
    series = _linear_series(z, 1.0, 1.0)
    return QuadratureResult(first.value * series, first.error_estimate * abs(series), first.evals, first.converged)


def _a25_integral(z, p, cfg):
    # split at 1/2; the half next to t = 1 is written in u = 1 - t
    left = _finite(lambda t: cpow(-np.log(t), z - 1.0) * t / (1.0 - t * t), 0.0, 0.5, cfg)
    right = _finite(
        lambda u: cpow(-np.log1p(-u), z - 1.0) * (1.0 - u) / (u * (2.0 - u)), 0.0, 0.5, cfg, alpha=z.real - 2.0
    )
    return left + right


def _a10_integral(z, p, cfg):
    x = z.real
    tcfg = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-12)
    return integrate_tensor(lambda s, t: (-np.log(s * t)) ** (x - 2.0) / (1.0 - s * t), 2, tcfg)


def _a11_integral(z, p, cfg):
    x = z.real
    # principal branch: log(t)^(x-1) = exp(i pi (x-1)) |log t|^(x-1); the phase cancels the prefactor
    left = _finite(lambda t: (-np.log(t)) ** (x - 1.0) / (1.0 - t), 0.0, 0.5, cfg)
    right = _finite(lambda u: (-np.log1p(-u)) ** (x - 1.0) / u, 0.0, 0.5, cfg, alpha=x - 2.0)
    res = left + right
    phase = cmath.exp(1j * _PI * (x - 1.0))
    return res.scaled(phase)


# --------------------------------------------------------------------------
# odd-value formulas
# --------------------------------------------------------------------------


def _a39_integral(z, p, cfg):
    n = _odd_n(z)
    coeffs = [float(c) for c in bernoulli_poly_coefficients(2 * n + 1)]
    # B_{2n+1}(1-t) cot(pi(1-t)) = B_{2n+1}(t) cot(pi t): integrate over (0, 1/2) and double
    f = lambda t: np.polyval(coeffs, t) / np.tan(_PI * t)
    return _finite(f, 0.0, 0.5, cfg).scaled(2.0)


def _a38b_integral(z, p, cfg):
    k = _odd_n(z) * 2 + 1
    N = k + 1
    res = _semi(lambda t: cpow(t, float(N)) * np.exp(-3.0 * t) / np.expm1(-t) ** 4, cfg)
    even = euler_even_value((k - 1) // 2) + 2.0 * euler_even_value((k + 1) // 2)
    value = (even - 6.0 * res.value / math.factorial(N)) / 3.0
    return QuadratureResult(value, 2.0 * res.error_estimate / math.factorial(N), res.evals, res.converged)


# --------------------------------------------------------------------------
# zeta(3) catalogue helpers
# --------------------------------------------------------------------------


def _const(v: complex) -> Callable[[complex, Params], complex]:
    return lambda z, p: v


def _one(z, p):
    return 1.0


def _rational_kernel_a53(t):
    return t * (t**4 - 4 * t**2 + 1) / (1 + t * t) ** 4


def _a54_kernel(t):
    it2 = 1.0 / (t * t)
    return (1.0 - 4.0 * it2 + it2 * it2) / (t**3 * (1.0 + it2) ** 4)


# --------------------------------------------------------------------------
# assembly
# --------------------------------------------------------------------------


def _n_slot(desc: str = "truncation order n", minimum: int = 0) -> ParamSlot:
    return ParamSlot("n", "int", desc, minimum=minimum)


def _auto_n(z: complex) -> Dict[str, Any]:
    return {"n": max(0, int(math.floor(z.real / 2.0)))}


def _auto_n_e257(z: complex) -> Dict[str, Any]:
    return {"n": max(1, int(math.floor(z.real / 2.0)))}


def _auto_n_e217(z: complex) -> Dict[str, Any]:
    return {"n": max(1, int(math.floor(z.real / 2.0)) + 1)}


def _t_domain(p: Params) -> Domain:
    n = p["n"]
    return Domain(max(1.0, 2.0 * n), 2.0 * n + 2.0)


def _e257_domain(p: Params) -> Domain:
    n = p["n"]
    return Domain(1.0, 2.0 * n + 2.0, tuple(complex(2 * l) for l in range(1, n + 1)))


def _e217_domain(p: Params) -> Domain:
    return Domain(1.0, 2.0 * p["n"])


_N_GRID = tuple({"n": n} for n in range(4))
_A_SLOT = ParamSlot("a", "real", "scale a > 0", default=1.0, positive=True)
_A_GRID = ({"a": 0.5}, {"a": 1.0}, {"a": 2.0})
_MU_SLOT = ParamSlot("mu", "complex", "scale mu, Re mu > 0", default=1.0, positive=True)
_MU_GRID = ({"mu": 0.5}, {"mu": 1.0}, {"mu": 2.0})


def _build() -> List[RepresentationDescriptor]:
    D = RepresentationDescriptor
    out: List[RepresentationDescriptor] = []
    add = out.append

    # ---- trace-formula representations ------------------------------------------------
    add(D("L2.3", "resolvent trace, s-form", "sin(pi z/2) pi^(z-1) int_0^inf s^(-z-1) [s coth s - 1] ds",
          "exponential", _strip(1, 2), _sin_pi_prefactor, _l23_integral, group="trace"))
    add(D("E2.10", "resolvent trace, t-form", "(1/2) sin(pi z/2) pi^(z-1) int_0^inf t^(-z/2-1) [sqrt(t) coth sqrt(t) - 1] dt",
          "exponential", _strip(1, 2), lambda z, p: 0.5 * _sin_pi_prefactor(z, p), _e210_integral, group="trace"))
    add(D("L2.5", "squared resolvent trace, s-form",
          "sin(pi z/2)/(2-z) pi^(z-1) int_0^inf s^(-z-1) [s coth s + s^2 csch^2 s - 2] ds",
          "exponential", _strip(1, 4), _l25_prefactor, _l25_integral, group="trace"))
    add(D("E2.22", "squared resolvent trace, t-form",
          "sin(pi z/2)/(2(2-z)) pi^(z-1) int_0^inf t^(-1-z/2) [sqrt(t) coth sqrt(t) + t csch^2 sqrt(t) - 2] dt",
          "exponential", _strip(1, 4), lambda z, p: 0.5 * _l25_prefactor(z, p), _e222_integral, group="trace"))
    add(D("T2.8", "n-th derivative of the resolvent trace, t-form",
          "(-1)^n pi^z / (Gamma(1-w) Gamma(n+w)) int_0^inf t^-w d^n/dt^n [(sqrt(t) coth sqrt(t) - 1)/(2t)] dt, w = z/2 - n",
          "exponential", _t_domain, _t28_prefactor, _t28_integral, (_n_slot(),), auto_params=_auto_n,
          param_grid=_N_GRID, group="trace"))
    add(D("T2.8s", "n-th derivative of the resolvent trace, s-form",
          "(-1)^n 2^-n pi^z / (Gamma(1-w) Gamma(n+w)) int_0^inf s^(1-2w) (d/(s ds))^n [s^-2 (s coth s - 1)] ds",
          "exponential", _t_domain, _t28s_prefactor, _t28s_integral, (_n_slot(),), auto_params=_auto_n,
          param_grid=_N_GRID, group="trace"))
    add(D("T2.9", "coth minus its n-term truncation",
          "sin(pi z/2) pi^(z-1) int_0^inf s^-z [coth s - coth_n s] ds",
          "exponential", _t_domain, _sin_pi_prefactor, _t29_integral, (_n_slot(),), auto_params=_auto_n,
          param_grid=_N_GRID, group="trace"))
    add(D("T2.10", "log-sinh minus its n-term truncation, t-form",
          "(z/2) pi^(z-1) sin(pi z/2) int_0^inf t^(-z/2-1) [F(t) - F_n(t)] dt, F(t) = log(sinh(sqrt t)/sqrt t)",
          "exponential", _t_domain, _t210_prefactor, _t210_integral, (_n_slot(),), auto_params=_auto_n,
          param_grid=_N_GRID, group="trace"))
    add(D("T2.10s", "log-sinh minus its n-term truncation, s-form",
          "z pi^(z-1) sin(pi z/2) int_0^inf s^(-z-1) [F(s^2) - F_n(s^2)] ds",
          "exponential", _t_domain, _t210_prefactor, _t210s_integral, (_n_slot(),), auto_params=_auto_n,
          param_grid=_N_GRID, group="trace"))
    add(D("E2.57", "split continuation at s = a",
          "sin(pi z/2) pi^(z-1) { int_a^inf s^(-z-1)[s coth s - 1] + int_0^a s^-z [coth s - coth_n s] + sum_k c_k a^(2k-z)/(2k-z) }",
          "exponential", _e257_domain, _sin_pi_prefactor, _e257_integral,
          (_n_slot(minimum=1), ParamSlot("a", "real", "split point a > 0", default=1.0, positive=True)),
          auto_params=_auto_n_e257,
          param_grid=tuple({"n": n, "a": a} for n in (1, 2) for a in (0.5, 1.0, 2.0, 5.0)), group="trace"))
    add(D("E2.12", "heat-trace Mellin transform",
          "pi^z Gamma(z/2)^-1 int_0^inf t^(z/2-1) sum_k exp(-pi^2 k^2 t) dt",
          "exponential", _strip(1), lambda z, p: _pi_pow(z), _e212_integral, group="trace"))
    add(D("E2.17", "n-th power resolvent trace Mellin transform",
          "pi^z Gamma(n)/(Gamma(n-z/2) Gamma(z/2)) int_0^inf t^(n-1-z/2) tr (-Delta_D + t)^-n dt",
          "exponential", _e217_domain, lambda z, p: _pi_pow(z), _e217_integral, (_n_slot(minimum=1),),
          auto_params=_auto_n_e217, param_grid=({"n": 1}, {"n": 2}, {"n": 3}), group="trace"))
    add(D("R2.6", "residue of the cot-resolvent at w = 0",
          "pi^(2m) (2 pi i)^-1 oint_|w|=1 w^-m (1 - sqrt(w) cot sqrt(w)) / (2w) dw, z = 2m",
          "contour", _points((2, 4, 6, 8), "z in {2, 4, 6, 8}"), _const(1.0),
          lambda z, p, cfg: exact(residue_even_value(int(round(z.real / 2)))), group="trace"))

    # ---- series ---------------------------------------------------------------------------
    add(D("A.1", "Dirichlet series", "sum_{k>=1} k^-z", "series", _strip(1), _one,
          lambda z, p, cfg: exact(_linear_series(z, 1.0, 1.0))))
    add(D("A.2", "odd-term Dirichlet series", "(1 - 2^-z)^-1 sum_{k>=0} (2k+1)^-z", "series", _strip(1),
          lambda z, p: 1.0 / _one_minus_two_pow(-z), lambda z, p, cfg: exact(_linear_series(z, 2.0, 1.0))))
    add(D("A.3", "alternating series", "(1 - 2^(1-z))^-1 sum_{k>=1} (-1)^(k+1) k^-z", "series", _strip(0, excluded=(1,)),
          lambda z, p: 1.0 / _one_minus_two_pow(1.0 - z), lambda z, p, cfg: exact(_cvz_alternating(z))))

    # ---- Bose/Fermi integrals ---------------------------------------------------------------------------
    add(D("A.5", "Bose integral", "Gamma(z)^-1 int_0^inf t^(z-1)/(e^t - 1) dt", "exponential", _strip(1),
          lambda z, p: reciprocal_gamma(z), _mellin(lambda z, p: z - 1.0, lambda t, p: _xbose(t), 1)))
    add(D("A.6", "scaled Bose integral", "mu^z Gamma(z)^-1 int_0^inf t^(z-1)/(e^(mu t) - 1) dt", "exponential", _strip(1),
          lambda z, p: cmath.exp(z * cmath.log(p["mu"])) * reciprocal_gamma(z),
          _mellin(lambda z, p: z - 1.0, _xbose_mu, 1), (_MU_SLOT,), param_grid=_MU_GRID))
    add(D("A.7", "Fermi integral", "Gamma(z)^-1 (1 - 2^(1-z))^-1 int_0^inf t^(z-1)/(e^t + 1) dt", "exponential",
          _strip(0, excluded=(1,)), lambda z, p: reciprocal_gamma(z) / _one_minus_two_pow(1.0 - z),
          _mellin(lambda z, p: z - 1.0, lambda t, p: fermi(t), 0)))
    add(D("A.8", "scaled Fermi integral", "mu^z Gamma(z)^-1 (1 - 2^(1-z))^-1 int_0^inf t^(z-1)/(e^(mu t) + 1) dt",
          "exponential", _strip(0, excluded=(1,)),
          lambda z, p: cmath.exp(z * cmath.log(p["mu"])) * reciprocal_gamma(z) / _one_minus_two_pow(1.0 - z),
          _mellin(lambda z, p: z - 1.0, _fermi_mu, 0), (_MU_SLOT,), param_grid=_MU_GRID))
    add(D("A.10", "double logarithmic integral (|log| convention)",
          "Gamma(x)^-1 int_0^1 int_0^1 |log(st)|^(x-2) / (1 - st) ds dt", "tensor", _strip(3, real_only=True),
          lambda z, p: reciprocal_gamma(z.real), _a10_integral, enabled=False,
          note="sign convention of the logarithm power is ambiguous; experiment only"))
    add(D("A.11", "logarithmic integral with phase (principal branch)",
          "exp(i pi (1-x)) Gamma(x)^-1 int_0^1 log(t)^(x-1) / (1 - t) dt", "finite", _strip(1, real_only=True),
          lambda z, p: cmath.exp(1j * _PI * (1.0 - z.real)) * reciprocal_gamma(z.real), _a11_integral, enabled=False,
          note="branch of log(t)^(x-1) is ambiguous; principal branch is an experiment only"))

    # ---- theta ------------------------------------------------------------------------------
    add(D("A.12", "theta-function Mellin transform", "pi^(z/2) Gamma(z/2)^-1 int_0^inf t^(z/2-1) sum_k exp(-k^2 pi t) dt",
          "exponential", _strip(1), lambda z, p: _pi_pow(0.5 * z) * reciprocal_gamma(0.5 * z), _theta_integral))
    add(D("A.13", "termwise theta transform", "pi^(z/2) Gamma(z/2)^-1 sum_k int_0^inf t^(z/2-1) exp(-k^2 pi t) dt",
          "exponential", _strip(1), lambda z, p: _pi_pow(0.5 * z) * reciprocal_gamma(0.5 * z), _theta_termwise_integral))

    # ---- arctan kernels ----------------------------------------------------------------------------
    add(D("A.14", "arctan kernel with Fermi weight",
          "2^(z-1)/(z-1) - 2^z int_0^inf sin(z atan t) / ((1+t^2)^(z/2) (e^(pi t) + 1)) dt",
          "arctan", _strip(excluded=(1,)), lambda z, p: -_two_pow(z),
          lambda z, p, cfg: _semi(lambda t: _jensen(z, 1.0)(t) * fermi(_PI * t), cfg),
          offset=lambda z, p: _two_pow(z - 1.0) / (z - 1.0)))
    add(D("A.15", "arctan kernel with sech weight",
          "2^(z-1)/(1 - 2^(1-z)) int_0^inf cos(z atan t) / ((1+t^2)^(z/2) cosh(pi t/2)) dt",
          "arctan", _strip(excluded=(1,)), lambda z, p: _two_pow(z - 1.0) / _one_minus_two_pow(1.0 - z),
          lambda z, p, cfg: _semi(lambda t: np.cos(z * np.arctan(t)) * np.exp(-0.5 * z * np.log1p(t * t)) * _sech(0.5 * _PI * t), cfg)))
    add(D("A.16", "Jensen's formula", "1/2 + 1/(z-1) + 2 int_0^inf sin(z atan t) / ((1+t^2)^(z/2) (e^(2 pi t) - 1)) dt",
          "arctan", _strip(excluded=(1,)), _const(2.0),
          lambda z, p, cfg: _semi(lambda t: _jensen(z, 1.0)(t) * bose(2.0 * _PI * t), cfg),
          offset=lambda z, p: 0.5 + 1.0 / (z - 1.0)))

    # ---- hyperbolic kernels ----------------------------------------------------------------------------
    add(D("A.17", "1/sinh(at) kernel", "a^z 2^(z-1)/(2^z - 1) Gamma(z)^-1 int_0^inf t^(z-1)/sinh(at) dt", "exponential",
          _strip(1), lambda z, p: cmath.exp(z * math.log(p["a"])) * _two_pow(z - 1.0) / (_two_pow(z) - 1.0) * reciprocal_gamma(z),
          _mellin(lambda z, p: z - 1.0, lambda t, p: _xcsch(p["a"] * t) / p["a"], 1),
          (_A_SLOT,), param_grid=_A_GRID))
    add(D("A.18", "1/sinh^2(at) kernel", "(2a)^(z+1)/4 Gamma(z+1)^-1 int_0^inf t^z / sinh^2(at) dt", "exponential",
          _strip(1), lambda z, p: 0.25 * cmath.exp((z + 1.0) * math.log(2.0 * p["a"])) * reciprocal_gamma(z + 1.0),
          _mellin(lambda z, p: z, lambda t, p: (_xcsch(p["a"] * t) / p["a"]) ** 2, 2), (_A_SLOT,), param_grid=_A_GRID,
          note="validity corrected to Re z > 1 (the integral diverges at t = 0 otherwise)"))
    add(D("A.19", "1/cosh^2(at) kernel", "(2a)^(z+1)/4 Gamma(z+1)^-1 (1 - 2^(1-z))^-1 int_0^inf t^z / cosh^2(at) dt",
          "exponential", _strip(-1, excluded=(1,)),
          lambda z, p: 0.25 * cmath.exp((z + 1.0) * math.log(2.0 * p["a"])) * reciprocal_gamma(z + 1.0) / _one_minus_two_pow(1.0 - z),
          _mellin(lambda z, p: z, lambda t, p: 4.0 * np.exp(-2.0 * p["a"] * t) / (1.0 + np.exp(-2.0 * p["a"] * t)) ** 2, 0),
          (_A_SLOT,), param_grid=_A_GRID))
    add(D("A.20", "1/(cosh t + 1) kernel", "Gamma(z+1)^-1 (2 - 2^(2-z))^-1 int_0^inf t^z / (cosh t + 1) dt", "exponential",
          _strip(0, excluded=(1,)), lambda z, p: reciprocal_gamma(z + 1.0) / (2.0 - _two_pow(2.0 - z)),
          _mellin(lambda z, p: z, lambda t, p: 2.0 * np.exp(-t) / (1.0 + np.exp(-t)) ** 2, 0)))
    add(D("A.21", "e^(-2t) coth t kernel", "1/2 + 2^(z-1) Gamma(z)^-1 int_0^inf t^(z-1) e^(-2t) coth t dt", "exponential",
          _strip(1), lambda z, p: _two_pow(z - 1.0) * reciprocal_gamma(z),
          _mellin(lambda z, p: z - 1.0, lambda t, p: np.exp(-2.0 * t) * (t + _xbose(2.0 * t)), 1),
          offset=lambda z, p: 0.5, note="the formula is listed twice in the source table; stored once"))
    add(D("A.23", "e^(-t)/sinh t kernel", "2^(z-1) Gamma(z)^-1 int_0^inf t^(z-1) e^(-t)/sinh t dt", "exponential",
          _strip(1), lambda z, p: _two_pow(z - 1.0) * reciprocal_gamma(z),
          _mellin(lambda z, p: z - 1.0, lambda t, p: _xbose(2.0 * t), 1)))
    add(D("A.24", "e^(-t)/cosh t kernel", "2^(z-1) Gamma(z)^-1 (1 - 2^(1-z))^-1 int_0^inf t^(z-1) e^(-t)/cosh t dt",
          "exponential", _strip(0, excluded=(1,)),
          lambda z, p: _two_pow(z - 1.0) * reciprocal_gamma(z) / _one_minus_two_pow(1.0 - z),
          _mellin(lambda z, p: z - 1.0, lambda t, p: 2.0 * np.exp(-2.0 * t) / (1.0 + np.exp(-2.0 * t)), 0)))
    add(D("A.25", "log(1/t) kernel on (0,1)", "2^z Gamma(z)^-1 int_0^1 log(1/t)^(z-1) t/(1-t^2) dt", "finite",
          _strip(1), lambda z, p: _two_pow(z) * reciprocal_gamma(z), _a25_integral,
          note="validity corrected to Re z > 1 (the integrand behaves like (1-t)^(z-2) at t = 1)"))
    add(D("A.26", "Bose derivative kernel", "Gamma(z+1)^-1 int_0^inf t^z e^t/(e^t - 1)^2 dt", "exponential",
          _strip(1), lambda z, p: reciprocal_gamma(z + 1.0),
          _mellin(lambda z, p: z, lambda t, p: np.exp(-t) * (t / np.expm1(-t)) ** 2, 2)))
    add(D("A.27", "Fermi derivative kernel", "Gamma(z+1)^-1 (1 - 2^(1-z))^-1 int_0^inf t^z e^t/(e^t + 1)^2 dt",
          "exponential", _strip(0, excluded=(1,)), lambda z, p: reciprocal_gamma(z + 1.0) / _one_minus_two_pow(1.0 - z),
          _mellin(lambda z, p: z, lambda t, p: np.exp(-t) / (1.0 + np.exp(-t)) ** 2, 0)))
    add(D("A.28", "negative-half-plane Bose integral", "2 sin(pi z/2) int_0^inf t^-z/(e^(2 pi t) - 1) dt", "exponential",
          _strip(hi=0), lambda z, p: 2.0 * _sin_half(z),
          _mellin(lambda z, p: -z, lambda t, p: _xbose(2.0 * _PI * t) / (2.0 * _PI), 1)))
    add(D("A.29", "arctan(2t) kernel", "2^(z-1) z/((2^z - 1)(z-1)) + 2/(2^z - 1) int_0^inf sin(z atan 2t)/((1/4+t^2)^(z/2)(e^(2 pi t) - 1)) dt",
          "arctan", _strip(excluded=(0, 1)), lambda z, p: 2.0 / (_two_pow(z) - 1.0),
          lambda z, p, cfg: _semi(lambda t: _jensen(z, 0.5)(t) * bose(2.0 * _PI * t), cfg),
          offset=lambda z, p: _two_pow(z - 1.0) * z / ((_two_pow(z) - 1.0) * (z - 1.0))))

    # ---- odd values ------------------------------------------------------------------------------
    odd = _points(_ODD, "z = 2n+1, n in {1, 2, 3, 4}")
    add(D("A.38a", "Bose moment for odd values", "(2n)!^-1 int_0^inf t^(2n)/(e^t - 1) dt, z = 2n+1", "exponential", odd,
          lambda z, p: 1.0 / math.factorial(2 * _odd_n(z)),
          lambda z, p, cfg: _semi(lambda t: t ** (2 * _odd_n(z)) * bose(t), cfg)))
    add(D("A.38b", "fourth-power Bose moment identity",
          "zeta(k) = [zeta(k-1) + 2 zeta(k+1) - 6 I/(k+1)!]/3, I = int_0^inf t^(k+1) e^t/(e^t-1)^4 dt, k odd",
          "exponential", odd, _one, _a38b_integral))
    add(D("A.39", "Bernoulli polynomial cotangent integral",
          "(-1)^(n+1) (2 pi)^(2n+1) / (2 (2n+1)!) int_0^1 B_(2n+1)(t) cot(pi t) dt, z = 2n+1", "finite", odd,
          lambda z, p: (-1) ** (_odd_n(z) + 1) * (2 * _PI) ** (2 * _odd_n(z) + 1) / (2.0 * math.factorial(2 * _odd_n(z) + 1)),
          _a39_integral))
    add(D("A.40", "cosh/sinh^2 moment",
          "a^(2n+2) / (2 (1 - 2^(-2n-1)) (2n+1)!) int_0^inf t^(2n+1) cosh(at)/sinh^2(at) dt, z = 2n+1", "exponential", odd,
          lambda z, p: p["a"] ** (2 * _odd_n(z) + 2) / (2.0 * (1.0 - 2.0 ** (-2 * _odd_n(z) - 1)) * math.factorial(2 * _odd_n(z) + 1)),
          lambda z, p, cfg: _semi(
              lambda t: t ** (2 * _odd_n(z) + 1) * 2.0 * np.exp(-p["a"] * t) * (1.0 + np.exp(-2.0 * p["a"] * t)) / np.expm1(-2.0 * p["a"] * t) ** 2,
              cfg),
          (_A_SLOT,), param_grid=_A_GRID,
          note="prefactor corrected: the printed one evaluates to -2^(2n+1) zeta(2n+1)"))
    add(D("A.41", "log^(2n)/(1+t) integral", "2^(2n)/((2^(2n) - 1)(2n)!) int_0^1 log(t)^(2n)/(1+t) dt, z = 2n+1", "finite", odd,
          lambda z, p: 4.0 ** _odd_n(z) / ((4.0 ** _odd_n(z) - 1.0) * math.factorial(2 * _odd_n(z))),
          lambda z, p, cfg: _finite(lambda t: np.log(t) ** (2 * _odd_n(z)) / (1.0 + t), 0.0, 1.0, cfg)))
    add(D("A.42", "log^(2n)/(1-t^2) integral", "2^(2n+1)/((2^(2n+1) - 1)(2n)!) int_0^1 log(t)^(2n)/(1-t^2) dt, z = 2n+1",
          "finite", odd,
          lambda z, p: 2.0 ** (2 * _odd_n(z) + 1) / ((2.0 ** (2 * _odd_n(z) + 1) - 1.0) * math.factorial(2 * _odd_n(z))),
          lambda z, p, cfg: _finite(lambda t: np.log(t) ** (2 * _odd_n(z)) / (1.0 - t * t), 0.0, 1.0, cfg)))
    add(D("A.43", "log(1/t)^(n-1)/(1-t) integral", "(n-1)!^-1 int_0^1 log(1/t)^(n-1)/(1-t) dt, z = n", "finite",
          _points(range(2, 10), "z = n, n in {2, ..., 9}"), lambda z, p: 1.0 / math.factorial(int(round(z.real)) - 1),
          lambda z, p, cfg: _finite(lambda t: (-np.log(t)) ** (int(round(z.real)) - 1) / (1.0 - t), 0.0, 1.0, cfg)))

    # ---- zeta(3) ---------------------------------------------------------------------------------
    three = _points((3,), "z = 3")

    def z3(id_, title, formula, tol_class, pref, integral, offset=None):
        add(D(id_, title, formula, tol_class, three, _const(pref), integral,
              offset=None if offset is None else _const(offset), group="zeta3"))

    z3("A.45a", "cubic reciprocals", "sum_k k^-3", "series", 1.0, lambda z, p, cfg: exact(_linear_series(3.0, 1.0, 1.0)))
    z3("A.45b", "odd cubic reciprocals", "(8/7) sum_{k>=0} (2k+1)^-3", "series", 8.0 / 7.0,
       lambda z, p, cfg: exact(_linear_series(3.0, 2.0, 1.0)))
    z3("A.45c", "alternating cubic reciprocals", "(4/3) sum_{k>=0} (-1)^k (k+1)^-3", "series", 4.0 / 3.0,
       lambda z, p, cfg: exact(_cvz_alternating(3.0)))
    z3("A.46", "Bose moment", "(1/2) int_0^inf t^2/(e^t - 1) dt", "exponential", 0.5,
       lambda z, p, cfg: _semi(lambda t: t * t * bose(t), cfg))
    z3("A.47", "Fermi moment", "(2/3) int_0^inf t^2/(e^t + 1) dt", "exponential", 2.0 / 3.0,
       lambda z, p, cfg: _semi(lambda t: t * t * fermi(t), cfg))
    # log(sec t + tan t) = log(cot(u/2)) with u = pi/2 - t
    z3("A.48", "log(sec + tan) integral", "(4/7) int_0^(pi/2) t log(sec t + tan t) dt", "finite", 4.0 / 7.0,
       lambda z, p, cfg: _finite(lambda u: (0.5 * _PI - u) * np.log(1.0 / np.tan(0.5 * u)), 0.0, 0.5 * _PI, cfg))
    z3("A.49", "log sin integral", "(8/7) [pi^2 log(2)/4 + 2 int_0^(pi/2) t log(sin t) dt]", "finite", 16.0 / 7.0,
       lambda z, p, cfg: _finite(lambda t: t * np.log(np.sin(t)), 0.0, 0.5 * _PI, cfg), offset=2.0 * _PI**2 * _LN2 / 7.0)
    z3("A.50", "double integral", "-(1/2) int_0^1 int_0^1 log(xy)/(1 - xy) dx dy", "tensor", -0.5,
       lambda z, p, cfg: integrate_tensor(lambda x, y: np.log(x * y) / (1.0 - x * y), 2, QuadratureConfig(rel_tol=1e-8)))
    z3("A.51", "triple integral", "int_0^1 int_0^1 int_0^1 1/(1 - xyz) dx dy dz", "tensor", 1.0,
       lambda z, p, cfg: integrate_tensor(lambda x, y, w: 1.0 / (1.0 - x * y * w), 3, QuadratureConfig(rel_tol=1e-8)))
    z3("A.52", "cos(2 atan t) sech^2 integral", "pi int_0^inf cos(2 atan t) / ((1+t^2) cosh^2(pi t/2)) dt", "arctan", _PI,
       lambda z, p, cfg: _semi(lambda t: np.cos(2.0 * np.arctan(t)) / (1.0 + t * t) * _sech(0.5 * _PI * t) ** 2, cfg))
    z3("A.53", "log log integral on (0,1)", "(8 pi^2/7) int_0^1 t(t^4 - 4t^2 + 1) log(log(1/t)) / (1+t^2)^4 dt", "finite",
       8.0 * _PI**2 / 7.0, lambda z, p, cfg: _finite(lambda t: _rational_kernel_a53(t) * np.log(-np.log(t)), 0.0, 1.0, cfg))
    z3("A.54", "log log integral on (1,inf)", "(8 pi^2/7) int_1^inf t(t^4 - 4t^2 + 1) log(log t) / (1+t^2)^4 dt", "finite",
       8.0 * _PI**2 / 7.0,
       lambda z, p, cfg: integrate(lambda t: _a54_kernel(t) * np.log(np.log(t)), IntervalSpec(a=1.0, decay_power=3.0), cfg))
    z3("A.60", "arcsinh^2 integral", "10 int_0^(1/2) arcsinh(t)^2 / t dt", "finite", 10.0,
       lambda z, p, cfg: _finite(lambda t: np.arcsinh(t) ** 2 / t, 0.0, 0.5, cfg))
    z3("A.61", "log sin(t/2) integral", "(2/7) pi^2 log 2 + (4/7) int_0^pi t log(sin(t/2)) dt", "finite", 4.0 / 7.0,
       lambda z, p, cfg: _finite(lambda t: t * np.log(np.sin(0.5 * t)), 0.0, _PI, cfg), offset=2.0 * _PI**2 * _LN2 / 7.0)
    z3("A.62", "arcsin^2 integral", "(2/7) pi^2 log 2 - (8/7) int_0^1 arcsin(t)^2 / t dt", "finite", -8.0 / 7.0,
       lambda z, p, cfg: _finite(lambda t: np.arcsin(t) ** 2 / t, 0.0, 1.0, cfg), offset=2.0 * _PI**2 * _LN2 / 7.0)
    z3("A.63", "t^2 cot t integral", "(2/7) pi^2 log 2 - (8/7) int_0^(pi/2) t^2 cot t dt", "finite", -8.0 / 7.0,
       lambda z, p, cfg: _finite(lambda t: t * t / np.tan(t), 0.0, 0.5 * _PI, cfg), offset=2.0 * _PI**2 * _LN2 / 7.0)
    z3("A.64", "artanh log integral", "-(2/7) pi^2 log 2 - (16/7) int_0^1 artanh(t) log(t) / (t (1-t^2)) dt", "finite",
       -16.0 / 7.0, lambda z, p, cfg: _finite(lambda t: np.arctanh(t) * np.log(t) / (t * (1.0 - t * t)), 0.0, 1.0, cfg),
       offset=-2.0 * _PI**2 * _LN2 / 7.0)
    z3("A.65", "log t log(1+t) / t", "-(4/3) int_0^1 log(t) log(1+t) / t dt", "finite", -4.0 / 3.0,
       lambda z, p, cfg: _finite(lambda t: np.log(t) * np.log1p(t) / t, 0.0, 1.0, cfg))
    z3("A.66", "log t log(1+t) / (1+t)", "-8 int_0^1 log(t) log(1+t) / (1+t) dt", "finite", -8.0,
       lambda z, p, cfg: _finite(lambda t: np.log(t) * np.log1p(t) / (1.0 + t), 0.0, 1.0, cfg))
    z3("A.67a", "log t log(1-t) / (1-t)", "int_0^1 log(t) log(1-t) / (1-t) dt", "finite", 1.0,
       lambda z, p, cfg: _finite(lambda u: np.log1p(-u) * np.log(u) / u, 0.0, 1.0, cfg))
    z3("A.67b", "log t log(1-t) / t", "int_0^1 log(t) log(1-t) / t dt", "finite", 1.0,
       lambda z, p, cfg: _finite(lambda t: np.log(t) * np.log1p(-t) / t, 0.0, 1.0, cfg))
    z3("A.68", "log t log(1+t) / (1-t)", "(1/4) pi^2 log 2 + int_0^1 log(t) log(1+t) / (1-t) dt", "finite", 1.0,
       lambda z, p, cfg: _finite(lambda t: np.log(t) * np.log1p(t) / (1.0 - t), 0.0, 1.0, cfg), offset=0.25 * _PI**2 * _LN2)
    z3("A.68b", "log t log(1-t) / (1+t)", "(2/13) pi^2 log 2 + (8/13) int_0^1 log(t) log(1-t) / (1+t) dt", "finite",
       8.0 / 13.0, lambda z, p, cfg: _finite(lambda t: np.log(t) * np.log1p(-t) / (1.0 + t), 0.0, 1.0, cfg),
       offset=2.0 * _PI**2 * _LN2 / 13.0)
    z3("A.69", "t(pi - t)/sin t integral", "(2/7) int_0^(pi/2) t (pi - t) / sin t dt", "finite", 2.0 / 7.0,
       lambda z, p, cfg: _finite(lambda t: t * (_PI - t) / np.sin(t), 0.0, 0.5 * _PI, cfg))
    z3("A.70", "rational kernel with Bose weight", "1 + int_0^inf (6t - 2t^3) / (1+t^2)^3 / (e^(2 pi t) - 1) dt", "arctan", 1.0,
       lambda z, p, cfg: _semi(lambda t: (6.0 - 2.0 * t * t) / (1.0 + t * t) ** 3 * (t * bose(2.0 * _PI * t)), cfg), offset=1.0)
    z3("A.71", "arctan(2t) kernel at z = 3", "6/7 + (2/7) int_0^inf sin(3 atan 2t) / (1/4 + t^2)^(3/2) / (e^(2 pi t) - 1) dt",
       "arctan", 2.0 / 7.0, lambda z, p, cfg: _semi(lambda t: _jensen(3.0, 0.5)(t) * bose(2.0 * _PI * t), cfg), offset=6.0 / 7.0)
    z3("A.72", "arctan kernel with e^(pi t) - 1", "6/7 + (8/7) int_0^inf sin(3 atan t) / (1+t^2)^(3/2) / (e^(pi t) - 1) dt",
       "arctan", 8.0 / 7.0, lambda z, p, cfg: _semi(lambda t: _jensen(3.0, 1.0)(t) * bose(_PI * t), cfg), offset=6.0 / 7.0)
    z3("A.73", "arctan kernel with e^(pi t) + 1", "2 - 8 int_0^inf sin(3 atan t) / (1+t^2)^(3/2) / (e^(pi t) + 1) dt",
       "arctan", -8.0, lambda z, p, cfg: _semi(lambda t: _jensen(3.0, 1.0)(t) * fermi(_PI * t), cfg), offset=2.0)
    z3("A.74", "arctan kernel with e^(2 pi t) - 1", "1 + 2 int_0^inf sin(3 atan t) / (1+t^2)^(3/2) / (e^(2 pi t) - 1) dt",
       "arctan", 2.0, lambda z, p, cfg: _semi(lambda t: _jensen(3.0, 1.0)(t) * bose(2.0 * _PI * t), cfg), offset=1.0)
    return out


@lru_cache(maxsize=1)
def _table() -> Tuple[RepresentationDescriptor, ...]:
    entries = tuple(_build())
    ids = [d.id for d in entries]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate representation ids")
    return entries


@lru_cache(maxsize=1)
def _index() -> Dict[str, RepresentationDescriptor]:
    return {d.id: d for d in _table()}


def catalogue(include_disabled: bool = True) -> List[RepresentationDescriptor]:
    """All descriptors in a stable order."""
    return [d for d in _table() if include_disabled or d.enabled]


def catalogue_ids() -> List[str]:
    return [d.id for d in _table()]


def lookup(rep_id: str) -> RepresentationDescriptor:
    try:
        return _index()[rep_id]
    except KeyError:
        raise UnknownRepresentation(rep_id) from None
