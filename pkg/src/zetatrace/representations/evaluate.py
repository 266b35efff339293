"""Evaluation of catalogue entries and the verification drivers built on it."""

from __future__ import annotations

import fnmatch
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError, IntegrandError, UnknownRepresentation
from ..quadrature import DEFAULT_QUADRATURE_CONFIG, IntervalSpec, QuadratureConfig, integrate
from ..reference import reference_zeta, zeta_eta, zeta_functional
from ._base import EvalRecord, RepresentationDescriptor, coth_minus_one, csch2, piecewise
from .catalogue import catalogue, euler_even_value, lookup, residue_even_value

__all__ = [
    "evaluate",
    "eval_split",
    "euler_even",
    "zeta_even_by_residue",
    "functional_equation_check",
    "trivial_values_check",
    "odd_zeta_table",
    "even_zeta_table",
    "cross_verify",
    "VerificationReport",
    "integration_by_parts_identity",
    "moment_identity_check",
    "residual_of",
]

FE_ETA_TERMS = 32


def residual_of(value: complex, reference: complex) -> float:
    """``|value - reference| / max(1, |reference|)``."""
    return abs(value - reference) / max(1.0, abs(reference))


def evaluate(
    rep_id: str,
    z: complex,
    params: Optional[Mapping[str, Any]] = None,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG,
    tol: Optional[float] = None,
) -> EvalRecord:
    """Evaluate one representation at ``z`` and compare with the reference oracle.

    Parameters
    ----------
    rep_id : str
        Catalogue id, e.g. ``"T2.9"``.
    z : complex
    params : mapping, optional
        Parameter values; missing ones are chosen from ``z`` or the defaults.
    cfg : QuadratureConfig
    tol : float, optional
        Pass threshold stored on the record; defaults to the entry's class tolerance.

    Raises
    ------
    StripError, PoleError
        When ``z`` is outside the validity region or at an excluded point.
    """
    desc = lookup(rep_id)
    z = complex(z)
    p = desc.resolve_params(z, params)
    desc.domain(p).check(desc.id, z)
    tolerance = desc.tolerance if tol is None else float(tol)
    reference = reference_zeta(z)
    try:
        res = desc.integral(z, p, cfg)
    except IntegrandError:
        nan = complex(math.nan, math.nan)
        return EvalRecord(desc.id, z, p, nan, reference, math.inf, 0, False, math.inf, tolerance)
    value = desc.prefactor(z, p) * res.value
    if desc.offset is not None:
        value += desc.offset(z, p)
    value = complex(value)
    residual = residual_of(value, reference) if np.isfinite(value) else math.inf
    return EvalRecord(
        desc.id, z, p, value, reference, residual, res.evals, bool(res.converged),
        res.error_estimate, tolerance,
    )


def eval_split(n: int, a: float, z: complex, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> EvalRecord:
    """The split continuation at ``s = a`` (entry ``E2.57``)."""
    return evaluate("E2.57", z, {"n": n, "a": a}, cfg)


def euler_even(m: int, table=None) -> float:
    """``zeta(2m)`` from the Bernoulli closed form.

    ``table`` is accepted for interface symmetry; the numbers are cached.
    """
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    return euler_even_value(int(m))


def zeta_even_by_residue(m: int, radius: float = 1.0, nodes: int = 64) -> float:
    """``zeta(2m)`` as ``pi^(2m)`` times a residue of the cot-resolvent, by the trapezoidal rule on a circle."""
    if int(m) != m or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    return residue_even_value(int(m), radius, nodes).real


def functional_equation_check(z: complex, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> float:
    """Residual of the functional equation at ``Re z < 0``.

    The left side uses the accelerated alternating series (independent of the
    functional equation); the right side is ``2^z pi^(z-1) sin(pi z/2)
    Gamma(1-z) zeta(1-z)``.  The left side is accurate to about 1e-11 for
    ``-4 <= Re z < 0`` and ``|Im z| <= 3``.
    """
    z = complex(z)
    if not z.real < 0:
        raise DomainError(f"functional_equation_check requires Re z < 0, got {z}")
    lhs = zeta_eta(z, FE_ETA_TERMS)
    rhs = zeta_functional(z)
    return residual_of(lhs, rhs)


@dataclass(frozen=True)
class TrivialValue:
    z: float
    value: float
    expected: float
    residual: float


def trivial_values_check(max_n: int = 4) -> List[TrivialValue]:
    """``zeta(0) = -1/2`` and ``zeta(-2n) = 0`` for ``n = 1..max_n`` from the oracle.

    At ``-2n`` the oracle is also evaluated at ``-2n + 1e-12``, so the check
    does not rely only on the exact zero of ``sin(pi z/2)``.
    """
    rows = [TrivialValue(0.0, reference_zeta(0).real, -0.5, abs(reference_zeta(0).real + 0.5))]
    for n in range(1, max_n + 1):
        v = reference_zeta(-2 * n).real
        near = abs(reference_zeta(complex(-2 * n + 1e-12)))
        rows.append(TrivialValue(float(-2 * n), v, 0.0, max(abs(v), near)))
    return rows


# --------------------------------------------------------------------------
# tables
# --------------------------------------------------------------------------


_ODD_ROUTES = (
    "T2.8", "T2.8s", "T2.9", "T2.10", "T2.10s", "E2.57", "L2.5",
    "A.1", "A.38a", "A.38b", "A.39", "A.40", "A.41", "A.42", "A.43",
)


def _record(rep_id: str, z: complex, value: complex, evals: int = 0, tol: float = 1e-12) -> EvalRecord:
    ref = reference_zeta(z)
    return EvalRecord(rep_id, complex(z), {}, complex(value), ref, residual_of(value, ref), evals, True, 0.0, tol)


def _applicable(desc: RepresentationDescriptor, z: complex) -> Optional[Dict[str, Any]]:
    try:
        p = desc.resolve_params(z, None)
        desc.domain(p).check(desc.id, z)
    except DomainError:
        return None
    return p


def odd_zeta_table(max_n: int = 9, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG, include_catalogue: bool = True) -> List[EvalRecord]:
    """``zeta(3), zeta(5), ...`` up to ``zeta(max_n)`` by every applicable route.

    ``max_n`` is the largest odd argument.  Rows are ordered by ``(z, id)``;
    the zeta(3) catalogue is included when ``include_catalogue`` is set.
    """
    if int(max_n) != max_n or max_n < 3:
        raise DomainError(f"max_n must be an integer >= 3, got {max_n!r}")
    rows: List[EvalRecord] = []
    for k in range(3, int(max_n) + 1, 2):
        ids = list(_ODD_ROUTES)
        if k == 3 and include_catalogue:
            ids += [d.id for d in catalogue(include_disabled=False) if d.group == "zeta3"]
        for rep_id in ids:
            desc = lookup(rep_id)
            p = _applicable(desc, complex(k))
            if p is None:
                continue
            rows.append(evaluate(rep_id, k, p, cfg))
    return rows


def even_zeta_table(max_n: int = 12, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> List[EvalRecord]:
    """``zeta(2), zeta(4), ...`` up to ``zeta(max_n)``: closed form, residue and integral routes."""
    if int(max_n) != max_n or max_n < 2:
        raise DomainError(f"max_n must be an integer >= 2, got {max_n!r}")
    rows: List[EvalRecord] = []
    for k in range(2, int(max_n) + 1, 2):
        m = k // 2
        rows.append(_record("euler_even", k, euler_even(m)))
        rows.append(_record("residue", k, zeta_even_by_residue(m), evals=64, tol=1e-10))
        for rep_id in ("L2.5", "E2.22", "A.1", "A.5", "A.16", "A.43"):
            desc = lookup(rep_id)
            p = _applicable(desc, complex(k))
            if p is not None:
                rows.append(evaluate(rep_id, k, p, cfg))
    return rows


# --------------------------------------------------------------------------
# identities used as checks
# --------------------------------------------------------------------------


def integration_by_parts_identity(cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG):
    """``int_0^inf [s^-2 coth s + s^-1 csch^2 s - 2 s^-3] ds`` (equals 1/3).

    Near the origin the integrand is ``s^-3 (s coth s + s^2 csch^2 s - 2)``,
    evaluated through the squared-resolvent kernel.
    """
    from ..special_kernels import resolvent_trace2_kernel

    def small(s):
        return s * (4.0 * resolvent_trace2_kernel(s * s))

    def large(s):
        return (coth_minus_one(s) + 1.0) / (s * s) + csch2(s) / s - 2.0 / s**3

    f = lambda s: piecewise(s, 1.0, small, large).real
    return integrate(f, IntervalSpec(decay="algebraic", decay_power=2.0), cfg)


def moment_identity_check(n: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG) -> Tuple[float, float, float]:
    """``int_0^inf t^n e^t / (e^t - 1)^4 dt`` against ``(n!/6)[zeta(n-2) - 3 zeta(n-1) + 2 zeta(n)]``.

    Returns ``(integral, closed form, relative difference)``; requires ``n >= 4``.
    """
    if int(n) != n or n < 4:
        raise DomainError("the moment identity needs an integer n >= 4")
    res = integrate(lambda t: t**n * np.exp(-3.0 * t) / np.expm1(-t) ** 4, IntervalSpec(decay="exponential"), cfg)
    z = lambda k: reference_zeta(k).real
    closed = math.factorial(n) / 6.0 * (z(n - 2) - 3.0 * z(n - 1) + 2.0 * z(n))
    value = res.value.real
    return value, closed, abs(value - closed) / abs(closed)


# --------------------------------------------------------------------------
# cross verification
# --------------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Rows of a verification sweep, ordered by ``(id, params, z)``."""

    records: List[EvalRecord]
    errors: List[Tuple[str, complex, Dict[str, Any], str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors and all(r.passed for r in self.records)

    @property
    def failures(self) -> List[EvalRecord]:
        return [r for r in self.records if not r.passed]

    def max_residual(self) -> Dict[str, float]:
        out: Dict[str, float] = {}
        for r in self.records:
            out[r.id] = max(out.get(r.id, 0.0), r.residual)
        return out

    def any_unconverged(self) -> bool:
        return any(not r.converged for r in self.records)


def _task(args):
    rep_id, z, params, cfg, tol = args
    try:
        return evaluate(rep_id, z, params, cfg, tol), None
    except DomainError as exc:
        return None, str(exc)


def _order(rec_params: Mapping[str, Any]) -> Tuple:
    return tuple((k, str(v)) for k, v in sorted(rec_params.items()))


def _matches(rep_id: str, patterns: Optional[Sequence[str]]) -> bool:
    if not patterns:
        return True
    return any(fnmatch.fnmatchcase(rep_id, pat) for pat in patterns)


def cross_verify(
    z_samples: Optional[Iterable[complex]] = None,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE_CONFIG,
    filter: Optional[Sequence[str] | str] = None,
    jobs: int = 1,
    tol: Optional[float] = None,
    include_disabled: bool = False,
) -> VerificationReport:
    """Evaluate every matching descriptor at the sample points inside its domain.

    Parameters
    ----------
    z_samples : iterable of complex, optional
        Points to try; those outside an entry's domain are skipped.  By default
        each entry uses :meth:`Domain.samples` (5 real and 2 complex points,
        margin 0.1 from the strip edges).
    filter : str or sequence of str, optional
        Glob pattern(s) on the id.
    jobs : int
        Worker processes; ordering of the report does not depend on it.

    Raises
    ------
    UnknownRepresentation
        If a filter pattern matches no id.
    """
    patterns = [filter] if isinstance(filter, str) else filter
    descs = catalogue(include_disabled=include_disabled)
    for pat in patterns or ():
        if not any(fnmatch.fnmatchcase(d.id, pat) for d in descs):
            raise UnknownRepresentation(pat)
    given = None if z_samples is None else [complex(z) for z in z_samples]
    tasks = []
    for desc in descs:
        if not _matches(desc.id, patterns):
            continue
        for grid_params in desc.param_grid:
            p = desc.resolve_params(None, grid_params)
            dom = desc.domain(p)
            pts = dom.samples() if given is None else [z for z in given if dom.in_strip(z, 0.0) and dom.near_excluded(z) is None]
            for z in pts:
                tasks.append((desc.id, z, p, cfg, tol))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_task(t) for t in tasks]
    records, errors = [], []
    for (rep_id, z, p, _, _), (rec, err) in zip(tasks, results):
        if rec is not None:
            records.append(rec)
        else:
            errors.append((rep_id, z, p, err))
    order = {d.id: i for i, d in enumerate(catalogue(include_disabled=True))}
    records.sort(key=lambda r: (order[r.id], _order(r.params), r.z.real, r.z.imag))
    return VerificationReport(records, errors)


def default_jobs() -> int:
    """Worker count from ``ZETATRACE_JOBS`` (default 1)."""
    raw = os.environ.get("ZETATRACE_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"ZETATRACE_JOBS must be an integer, got {raw!r}") from None
