"""Cancellation-safe hyperbolic kernels and exact Bernoulli data.

Every integrand in the catalogue is assembled from a handful of kernels built
on coth(s), 1/sinh(s)^2 and log(sinh(s)/s).  Near s = 0 these are differences
of nearly equal quantities, so each kernel has two branches:

* a *series* branch, a Horner evaluation of the Bernoulli power series
  ``coth(s) = 1/s + sum_k c_k s^(2k-1)`` with ``c_k = 2^(2k) B_2k / (2k)!``;
* a *direct* branch using numpy's hyperbolic functions.

The series converges for ``s < pi``.  The switch point for a remainder that
removes the first ``n`` series terms grows with ``n`` because the direct
branch loses roughly ``(pi/s)^(2n+2)`` in relative accuracy.

All kernels accept scalars or numpy arrays and are vectorised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

import numpy as np

from .errors import DomainError

__all__ = [
    "BernoulliTable",
    "KernelConfig",
    "CothPolynomial",
    "DEFAULT_KERNEL_CONFIG",
    "bernoulli_numbers",
    "bernoulli_poly",
    "bernoulli_poly_coefficients",
    "coth_coefficient",
    "coth_safe",
    "coth_trunc",
    "coth_remainder",
    "coth_remainder_scaled",
    "resolvent_trace_kernel",
    "resolvent_trace2_kernel",
    "trace_derivative_kernel",
    "log_sinh",
    "log_sinh_trunc",
    "log_sinh_remainder",
    "log_sinh_remainder_scaled",
    "theta_sum",
    "series_switch",
]

_EPS = np.finfo(float).eps
# direct branch must not lose more than this factor in relative accuracy
_MAX_CANCELLATION = 900.0
_MAX_SWITCH = 2.5


# --------------------------------------------------------------------------
# Bernoulli numbers
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BernoulliTable:
    """Exact Bernoulli numbers ``B_0 .. B_max_index`` (convention B_1 = -1/2)."""

    numbers: Tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.numbers) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.numbers[m]

    def __len__(self) -> int:
        return len(self.numbers)

    def recurrence_residual(self, m: int) -> Fraction:
        """``sum_{j<=m} C(m+1, j) B_j``; exactly zero for every m >= 1."""
        return sum((math.comb(m + 1, j) * self.numbers[j] for j in range(m + 1)), Fraction(0))

    def as_floats(self) -> np.ndarray:
        return np.array([float(b) for b in self.numbers])


@lru_cache(maxsize=None)
def _bernoulli_tuple(max_index: int) -> Tuple[Fraction, ...]:
    if max_index > 0:
        prev = _bernoulli_tuple(max_index - 1)
    else:
        return (Fraction(1),)
    m = max_index
    if m > 1 and m % 2 == 1:
        return prev + (Fraction(0),)
    acc = sum((math.comb(m + 1, j) * prev[j] for j in range(m)), Fraction(0))
    return prev + (-acc / (m + 1),)


def bernoulli_numbers(max_index: int) -> BernoulliTable:
    """Return the exact table ``B_0 .. B_max_index``.

    Uses ``sum_{j=0}^{m} C(m+1, j) B_j = 0`` which follows from the generating
    function ``w / (e^w - 1)``.  Odd indices above 1 are set to zero directly.

    >>> bernoulli_numbers(6)[6]
    Fraction(1, 42)
    """
    if max_index < 0:
        raise DomainError("max_index must be >= 0")
    # build iteratively to keep recursion depth bounded for large tables
    for m in range(0, max_index + 1, 64):
        _bernoulli_tuple(m)
    return BernoulliTable(_bernoulli_tuple(max_index))


def bernoulli_poly_coefficients(m: int) -> Tuple[Fraction, ...]:
    """Exact coefficients of ``B_m(x)``, highest power first."""
    if m < 0:
        raise DomainError("m must be >= 0")
    b = bernoulli_numbers(m)
    # B_m(x) = sum_j C(m, j) B_j x^(m-j); index j is the coefficient of x^(m-j)
    return tuple(math.comb(m, j) * b[j] for j in range(m + 1))


def bernoulli_poly(m: int, x):
    """Evaluate the Bernoulli polynomial ``B_m(x)`` (vectorised in x)."""
    coeffs = [float(c) for c in bernoulli_poly_coefficients(m)]
    out = np.polyval(coeffs, np.asarray(x, dtype=float))
    return float(out) if np.ndim(out) == 0 else out


def coth_coefficient(k: int, table: BernoulliTable | None = None) -> Fraction:
    """``2^(2k) B_2k / (2k)!``, the coefficient of s^(2k-1) in coth(s)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    b = table[2 * k] if table is not None and table.max_index >= 2 * k else bernoulli_numbers(2 * k)[2 * k]
    return Fraction(2 ** (2 * k)) * b / math.factorial(2 * k)


@lru_cache(maxsize=None)
def _coth_coeffs(count: int) -> np.ndarray:
    """Float array ``[c_1, ..., c_count]``."""
    table = bernoulli_numbers(2 * count)
    return np.array([float(coth_coefficient(k, table)) for k in range(1, count + 1)])


# --------------------------------------------------------------------------
# configuration and branch planning
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelConfig:
    """Branch selection for the kernels.

    ``series_threshold`` is the smallest argument at which the direct branch is
    allowed; ``series_terms`` is the minimum number of series terms kept.
    """

    series_threshold: float = 0.5
    series_terms: int = 24

    def __post_init__(self):
        if not (0.0 < self.series_threshold < math.pi):
            raise DomainError("series_threshold must lie in (0, pi)")
        if self.series_terms < 1:
            raise DomainError("series_terms must be positive")


DEFAULT_KERNEL_CONFIG = KernelConfig()


def series_switch(order: int, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG) -> Tuple[float, int]:
    """Switch point (in s) and series length for a kernel that removes ``order`` terms.

    Below the returned switch point the series branch is used.  The number of
    terms is large enough that the dropped tail is below 1e-17 relative to the
    leading retained term at the switch point.
    """
    return _series_switch(order, cfg.series_threshold, cfg.series_terms)


@lru_cache(maxsize=None)
def _series_switch(order: int, threshold: float, min_terms: int) -> Tuple[float, int]:
    s_sw = math.pi * _MAX_CANCELLATION ** (-1.0 / (2 * order + 2))
    s_sw = min(max(threshold, s_sw), _MAX_SWITCH)
    ratio = (s_sw / math.pi) ** 2
    terms = max(min_terms, math.ceil(math.log(1e-17) / math.log(ratio)) + 2)
    return s_sw, terms


def _positive(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):
        raise DomainError(f"{name}: argument must be positive, got {x!r}")
    return arr


def _ret(out: np.ndarray):
    return float(out) if np.ndim(out) == 0 else out


def _split(s: np.ndarray, switch: float):
    """Boolean mask of the series branch plus an output buffer."""
    return s < switch, np.empty(s.shape, dtype=float)


# --------------------------------------------------------------------------
# coth and its truncations
# --------------------------------------------------------------------------


def _coth_series(s: np.ndarray, terms: int) -> np.ndarray:
    c = _coth_coeffs(terms)
    return 1.0 / s + s * np.polyval(c[::-1], s * s)


def _coth_direct(s: np.ndarray) -> np.ndarray:
    return 1.0 / np.tanh(s)


def coth_safe(s, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """coth(s) for s > 0 with a series branch below ``cfg.series_threshold``."""
    s = _positive(s, "coth_safe")
    small, out = _split(s, cfg.series_threshold)
    out[small] = _coth_series(s[small], cfg.series_terms)
    out[~small] = _coth_direct(s[~small])
    return _ret(out)


def coth_trunc(n: int, s, table: BernoulliTable | None = None):
    """``coth_n(s) = 1/s + sum_{k=1}^{n} c_k s^(2k-1)``."""
    if n < 0:
        raise DomainError("n must be >= 0")
    s = _positive(s, "coth_trunc")
    if table is None:
        c = _coth_coeffs(n) if n else np.zeros(0)
    else:
        c = np.array([float(coth_coefficient(k, table)) for k in range(1, n + 1)])
    out = 1.0 / s + (s * np.polyval(c[::-1], s * s) if n else 0.0)
    return _ret(np.asarray(out, dtype=float))


def _coth_rem_scaled_series(n: int, s: np.ndarray, terms: int) -> np.ndarray:
    c = _coth_coeffs(n + terms)[n:]
    return np.polyval(c[::-1], s * s)


def _coth_rem_scaled_direct(n: int, s: np.ndarray) -> np.ndarray:
    out = np.empty_like(s)
    mid = s <= 1.0
    sm = s[mid]
    out[mid] = (_coth_direct(sm) - coth_trunc(n, sm)) / sm ** (2 * n + 1)
    # termwise for s > 1 so nothing overflows
    sl = s[~mid]
    acc = (_coth_direct(sl) - 1.0 / sl) * sl ** (-(2 * n + 1))
    c = _coth_coeffs(n) if n else np.zeros(0)
    for k in range(1, n + 1):
        acc = acc - c[k - 1] * sl ** (2 * k - 2 * n - 2)
    out[~mid] = acc
    return out


def coth_remainder_scaled(n: int, s, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """``[coth(s) - coth_n(s)] / s^(2n+1)``, finite and smooth at s = 0."""
    if n < 0:
        raise DomainError("n must be >= 0")
    s = _positive(s, "coth_remainder")
    switch, terms = series_switch(n, cfg)
    small, out = _split(s, switch)
    out[small] = _coth_rem_scaled_series(n, s[small], terms)
    out[~small] = _coth_rem_scaled_direct(n, s[~small])
    return _ret(out)


def coth_remainder(n: int, s, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG, table: BernoulliTable | None = None):
    """``coth(s) - coth_n(s)`` without catastrophic cancellation near s = 0."""
    if n < 0:
        raise DomainError("n must be >= 0")
    s = _positive(s, "coth_remainder")
    switch, terms = series_switch(n, cfg)
    small, out = _split(s, switch)
    ss = s[small]
    out[small] = ss ** (2 * n + 1) * _coth_rem_scaled_series(n, ss, terms)
    sl = s[~small]
    out[~small] = _coth_direct(sl) - coth_trunc(n, sl, table)
    return _ret(out)


# --------------------------------------------------------------------------
# resolvent traces of the Dirichlet Laplacian
# --------------------------------------------------------------------------


def resolvent_trace_kernel(t, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """``(2t)^-1 [sqrt(t) coth(sqrt(t)) - 1]``; tends to 1/6 as t -> 0."""
    t = _positive(t, "resolvent_trace_kernel")
    s = np.sqrt(t)
    small, out = _split(s, cfg.series_threshold)
    c = _coth_coeffs(cfg.series_terms)
    out[small] = 0.5 * np.polyval(c[::-1], t[small])
    sl, tl = s[~small], t[~small]
    out[~small] = (sl / np.tanh(sl) - 1.0) / (2.0 * tl)
    return _ret(out)


def resolvent_trace2_kernel(t, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """``(4t^2)^-1 [sqrt(t) coth(sqrt(t)) + t / sinh(sqrt(t))^2 - 2]``; tends to 1/90."""
    t = _positive(t, "resolvent_trace2_kernel")
    s = np.sqrt(t)
    switch, terms = series_switch(1, cfg)
    small, out = _split(s, switch)
    c = _coth_coeffs(terms + 1)
    k = np.arange(2, terms + 2)
    out[small] = -0.5 * np.polyval(((k - 1) * c[1:])[::-1], t[small])
    sl, tl = s[~small], t[~small]
    with np.errstate(over="ignore"):
        csch2 = 1.0 / np.sinh(sl) ** 2
    out[~small] = (sl / np.tanh(sl) + tl * csch2 - 2.0) / (4.0 * tl * tl)
    return _ret(out)


class CothPolynomial:
    """Polynomial in ``1/s`` and ``coth(s)`` with exact rational coefficients.

    ``terms`` maps ``(i, j)`` to the coefficient of ``s^-i coth(s)^j``.  The set
    is closed under d/ds since ``coth' = 1 - coth^2`` and ``(s^-i)' = -i s^-(i+1)``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], Fraction | int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Tuple[int, int], Fraction] = {}
        for key, coef in items:
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coef)
        self._terms = {k: v for k, v in sorted(acc.items()) if v != 0}

    @classmethod
    def resolvent_base(cls) -> "CothPolynomial":
        """``s^-2 [s coth(s) - 1] = s^-1 coth(s) - s^-2``."""
        return cls({(1, 1): 1, (2, 0): -1})

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, CothPolynomial) and self._terms == other._terms

    def __repr__(self) -> str:
        parts = [f"{c}*s^-{i}*coth^{j}" for (i, j), c in self._terms.items()]
        return "CothPolynomial(" + " + ".join(parts or ["0"]) + ")"

    def __add__(self, other: "CothPolynomial") -> "CothPolynomial":
        return CothPolynomial(list(self._terms.items()) + list(other._terms.items()))

    def scale(self, factor) -> "CothPolynomial":
        return CothPolynomial({k: v * Fraction(factor) for k, v in self._terms.items()})

    def derivative(self) -> "CothPolynomial":
        out = []
        for (i, j), c in self._terms.items():
            if i:
                out.append(((i + 1, j), -i * c))
            if j:
                out.append(((i, j - 1), j * c))
                out.append(((i, j + 1), -j * c))
        return CothPolynomial(out)

    def over_s(self) -> "CothPolynomial":
        return CothPolynomial({(i + 1, j): c for (i, j), c in self._terms.items()})

    def d_over_s(self) -> "CothPolynomial":
        """The operator ``(1/s) d/ds``."""
        return self.derivative().over_s()

    def evaluate(self, s) -> np.ndarray:
        """Direct evaluation; accurate only away from s = 0."""
        s = np.asarray(s, dtype=float)
        coth = 1.0 / np.tanh(s)
        inv = 1.0 / s
        out = np.zeros_like(s)
        for (i, j), c in self._terms.items():
            out = out + float(c) * inv**i * coth**j
        return out

    def asymptotic_powers(self) -> Dict[int, Fraction]:
        """Coefficients of ``s^-i`` obtained by setting ``coth = 1`` (cancelled terms dropped)."""
        acc: Dict[int, Fraction] = {}
        for (i, _), c in self._terms.items():
            acc[i] = acc.get(i, Fraction(0)) + c
        return {i: c for i, c in sorted(acc.items()) if c != 0}

    def evaluate_exponential_part(self, s) -> np.ndarray:
        """``sum c s^-i (coth^j - 1)``: the exponentially small rest after :meth:`asymptotic_powers`."""
        s = np.asarray(s, dtype=float)
        with np.errstate(over="ignore"):
            delta = 2.0 / np.expm1(2.0 * s)
        lp = np.log1p(delta)
        inv = 1.0 / s
        out = np.zeros_like(s)
        for (i, j), c in self._terms.items():
            if j:
                out = out + float(c) * inv**i * np.expm1(j * lp)
        return out


@lru_cache(maxsize=None)
def resolvent_derivative_polynomial(n: int) -> CothPolynomial:
    """``((1/s) d/ds)^n [s^-2 (s coth s - 1)]`` as a CothPolynomial."""
    if n == 0:
        return CothPolynomial.resolvent_base()
    return resolvent_derivative_polynomial(n - 1).d_over_s()


def trace_derivative_kernel(n: int, t, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """Exact n-th t-derivative of ``(2t)^-1 [sqrt(t) coth(sqrt(t)) - 1]``.

    With ``s = sqrt(t)`` one has ``d/dt = (1/(2s)) d/ds``, so the derivative is
    ``2^-(n+1)`` times the CothPolynomial ``((1/s) d/ds)^n [s^-2 (s coth s - 1)]``.
    Small arguments use the termwise-differentiated power series in t.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    t = _positive(t, "trace_derivative_kernel")
    s = np.sqrt(t)
    switch, terms = series_switch(n, cfg)
    small, out = _split(s, switch)
    c = _coth_coeffs(n + terms)
    k = np.arange(n + 1, n + terms + 1)
    # d^n/dt^n t^(k-1) = (k-1)!/(k-1-n)! t^(k-1-n)
    falling = np.array([math.perm(int(kk) - 1, n) for kk in k], dtype=float)
    out[small] = np.polyval((0.5 * c[n:] * falling)[::-1], t[small])
    poly = resolvent_derivative_polynomial(n)
    out[~small] = 2.0 ** (-n - 1) * poly.evaluate(s[~small])
    return _ret(out)


# --------------------------------------------------------------------------
# F(t) = log(t^-1/2 sinh(t^1/2)) and its truncations
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _log_sinh_coeffs(count: int) -> np.ndarray:
    """``[f_1, ..., f_count]`` with ``f_k = c_k / (2k)``."""
    c = _coth_coeffs(count)
    return c / (2.0 * np.arange(1, count + 1))


def _log_sinh_direct(s: np.ndarray) -> np.ndarray:
    out = np.empty_like(s)
    big = s > 20.0
    sb = s[big]
    out[big] = sb - math.log(2.0) - np.log(sb) + np.log1p(-np.exp(-2.0 * sb))
    out[~big] = np.log(np.sinh(s[~big]) / s[~big])
    return out


def log_sinh(t, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """``F(t) = log(t^-1/2 sinh(t^1/2))``."""
    t = _positive(t, "log_sinh")
    s = np.sqrt(t)
    small, out = _split(s, cfg.series_threshold)
    f = _log_sinh_coeffs(cfg.series_terms)
    out[small] = t[small] * np.polyval(f[::-1], t[small])
    out[~small] = _log_sinh_direct(s[~small])
    return _ret(out)


def log_sinh_trunc(n: int, t):
    """``F_n(t) = sum_{k=1}^{n} c_k t^k / (2k)``."""
    if n < 0:
        raise DomainError("n must be >= 0")
    t = np.asarray(t, dtype=float)
    if n == 0:
        return _ret(np.zeros_like(t))
    f = _log_sinh_coeffs(n)
    return _ret(t * np.polyval(f[::-1], t))


def _log_sinh_rem_scaled_direct(n: int, t: np.ndarray) -> np.ndarray:
    s = np.sqrt(t)
    out = np.empty_like(t)
    mid = t <= 1.0
    tm = t[mid]
    out[mid] = (_log_sinh_direct(s[mid]) - log_sinh_trunc(n, tm)) / tm ** (n + 1)
    tl = t[~mid]
    acc = _log_sinh_direct(s[~mid]) * tl ** (-(n + 1))
    f = _log_sinh_coeffs(n) if n else np.zeros(0)
    for k in range(1, n + 1):
        acc = acc - f[k - 1] * tl ** (k - n - 1)
    out[~mid] = acc
    return out


def log_sinh_remainder_scaled(n: int, t, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG):
    """``[F(t) - F_n(t)] / t^(n+1)``, finite at t = 0."""
    if n < 0:
        raise DomainError("n must be >= 0")
    t = _positive(t, "log_sinh_remainder")
    switch, terms = series_switch(n, cfg)
    small, out = _split(np.sqrt(t), switch)
    f = _log_sinh_coeffs(n + terms)[n:]
    out[small] = np.polyval(f[::-1], t[small])
    out[~small] = _log_sinh_rem_scaled_direct(n, t[~small])
    return _ret(out)


def log_sinh_remainder(n: int, t, cfg: KernelConfig = DEFAULT_KERNEL_CONFIG, table: BernoulliTable | None = None):
    """``F(t) - F_n(t)``; of order t^(n+1) as t -> 0."""
    if n < 0:
        raise DomainError("n must be >= 0")
    t = _positive(t, "log_sinh_remainder")
    switch, terms = series_switch(n, cfg)
    small, out = _split(np.sqrt(t), switch)
    f = _log_sinh_coeffs(n + terms)[n:]
    ts = t[small]
    out[small] = ts ** (n + 1) * np.polyval(f[::-1], ts)
    tl = t[~small]
    out[~small] = _log_sinh_direct(np.sqrt(tl)) - log_sinh_trunc(n, tl)
    return _ret(out)


# --------------------------------------------------------------------------
# theta series
# --------------------------------------------------------------------------


def theta_sum(t):
    """``sum_{k>=1} exp(-k^2 pi t)``.

    The sum is cut at ``k_max = ceil(sqrt(37 / (pi t))) + 2`` so the dropped tail
    is below e^-37 relative to the first term.  No modular transformation is
    applied, so very small t is expensive; callers split the range instead.
    """
    t = _positive(t, "theta_sum")
    k_max = math.ceil(math.sqrt(37.0 / (math.pi * float(np.min(t))))) + 2
    k = np.arange(1, k_max + 1, dtype=float)
    flat = t.reshape(-1)
    vals = np.exp(-math.pi * np.outer(flat, k * k)).sum(axis=1)
    return _ret(vals.reshape(t.shape))
