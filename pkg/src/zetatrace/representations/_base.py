"""Descriptor types and numerical helpers shared by the catalogue."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError, PoleError, StripError
from ..quadrature import QuadratureConfig, QuadratureResult

__all__ = [
    "Domain",
    "ParamSlot",
    "RepresentationDescriptor",
    "EvalRecord",
    "TOLERANCES",
    "cpow",
    "bose",
    "fermi",
    "coth_minus_one",
    "csch2",
    "piecewise",
    "exact",
]

#: residual tolerance per kernel class
TOLERANCES: Dict[str, float] = {
    "exponential": 1e-9,
    "finite": 1e-9,
    "series": 1e-9,
    "contour": 1e-9,
    "arctan": 1e-7,
    "tensor": 1e-5,
}

POLE_GUARD = 1e-10


def _fmt(x: float) -> str:
    return f"{x:g}"


@dataclass(frozen=True)
class Domain:
    """Validity region of a representation.

    Either a vertical strip ``lo < Re z < hi`` minus ``excluded`` points, or a
    finite set of admissible ``points`` (formulas for specific integers).
    """

    lo: float = -math.inf
    hi: float = math.inf
    excluded: Tuple[complex, ...] = ()
    points: Optional[Tuple[complex, ...]] = None
    real_only: bool = False
    point_rule: str = ""

    def describe(self) -> str:
        if self.points is not None:
            return self.point_rule or "z in {" + ", ".join(_fmt(p.real) for p in self.points) + "}"
        if math.isinf(self.lo) and math.isinf(self.hi):
            base = "all z"
        elif math.isinf(self.hi):
            base = f"Re z > {_fmt(self.lo)}"
        elif math.isinf(self.lo):
            base = f"Re z < {_fmt(self.hi)}"
        else:
            base = f"({_fmt(self.lo)}, {_fmt(self.hi)})"
        if self.real_only:
            base += ", z real"
        if self.excluded:
            base += ", z != " + ", ".join(_fmt(e.real) if e.imag == 0 else str(e) for e in self.excluded)
        return base

    __str__ = describe

    def in_strip(self, z: complex, margin: float = 0.0) -> bool:
        if self.points is not None:
            return any(abs(z - p) < 1e-12 for p in self.points)
        if self.real_only and z.imag != 0:
            return False
        return self.lo + margin < z.real < self.hi - margin

    def near_excluded(self, z: complex, guard: float = POLE_GUARD) -> Optional[complex]:
        for e in self.excluded:
            if abs(z - e) < guard:
                return e
        return None

    def check(self, rep_id: str, z: complex) -> None:
        if not self.in_strip(z):
            raise StripError(rep_id, z, self.describe())
        e = self.near_excluded(z)
        if e is not None:
            raise PoleError(f"{rep_id}: z = {z} is at the excluded point {e}")

    def samples(self, margin: float = 0.1, n_real: int = 5, complex_imag: Sequence[float] = (1.5, -3.0)) -> Tuple[complex, ...]:
        """Default verification points: real points plus complex ones, margin from the edges."""
        if self.points is not None:
            return tuple(self.points)
        lo, hi = self.lo, self.hi
        if math.isinf(lo) and math.isinf(hi):
            lo, hi = -4.0, 6.0
        elif math.isinf(hi):
            hi = lo + 6.0 + 2 * margin
        elif math.isinf(lo):
            lo = hi - 6.0 - 2 * margin
        reals = list(np.linspace(lo + margin, hi - margin, n_real))
        pts = [complex(self._nudge(x)) for x in reals]
        if not self.real_only:
            for j, im in enumerate(complex_imag):
                frac = (j + 1) / (len(complex_imag) + 1)
                x = self._nudge(lo + margin + frac * (hi - lo - 2 * margin))
                pts.append(complex(x, im))
        return tuple(pts)

    def _nudge(self, x: float) -> float:
        for e in self.excluded:
            if abs(x - e.real) < 0.1:
                x = e.real + 0.1 if x >= e.real else e.real - 0.1
        return float(x)


@dataclass(frozen=True)
class ParamSlot:
    """A named parameter: ``kind`` is "int", "real" or "complex"."""

    name: str
    kind: str
    description: str
    default: Any = None
    minimum: Optional[float] = None
    positive: bool = False

    def coerce(self, value: Any) -> Any:
        if self.kind == "int":
            f = float(value) if not isinstance(value, int) else value
            if int(f) != f:
                raise DomainError(f"parameter {self.name} must be an integer, got {value!r}")
            v: Any = int(f)
        elif self.kind == "real":
            v = float(value)
        else:
            v = complex(str(value).replace(" ", "").replace("i", "j")) if isinstance(value, str) else complex(value)
        if self.minimum is not None and (v.real if isinstance(v, complex) else v) < self.minimum:
            raise DomainError(f"parameter {self.name} must be >= {self.minimum}, got {value!r}")
        if self.positive and not ((v.real if isinstance(v, complex) else v) > 0):
            raise DomainError(f"parameter {self.name} must have positive real part, got {value!r}")
        return v


@dataclass(frozen=True)
class RepresentationDescriptor:
    """One catalogue entry: ``value = offset + prefactor * integral``.

    Attributes
    ----------
    id : str
        Stable identifier.
    title : str
        Short description of the kernel.
    formula : str
        Plain-text formula.
    tol_class : str
        Key into :data:`TOLERANCES`.
    params : tuple of ParamSlot
    domain : callable
        ``params -> Domain``.
    prefactor : callable
        ``(z, params) -> complex``.
    integral : callable
        ``(z, params, cfg) -> QuadratureResult``.
    offset : callable, optional
        ``(z, params) -> complex`` added after scaling.
    auto_params : callable, optional
        ``z -> dict`` choosing default parameters for a given z.
    param_grid : tuple of dict
        Parameter sets used by the verification sweep.
    """

    id: str
    title: str
    formula: str
    tol_class: str
    domain: Callable[[Mapping[str, Any]], Domain]
    prefactor: Callable[[complex, Mapping[str, Any]], complex]
    integral: Callable[[complex, Mapping[str, Any], QuadratureConfig], QuadratureResult]
    params: Tuple[ParamSlot, ...] = ()
    offset: Optional[Callable[[complex, Mapping[str, Any]], complex]] = None
    auto_params: Optional[Callable[[complex], Dict[str, Any]]] = None
    param_grid: Tuple[Dict[str, Any], ...] = ({},)
    enabled: bool = True
    note: str = ""
    group: str = "appendix"

    @property
    def tolerance(self) -> float:
        return TOLERANCES[self.tol_class]

    def resolve_params(self, z: Optional[complex], given: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        given = dict(given or {})
        names = {p.name for p in self.params}
        unknown = set(given) - names
        if unknown:
            raise DomainError(f"{self.id}: unknown parameter(s) {sorted(unknown)}; accepted: {sorted(names) or 'none'}")
        out: Dict[str, Any] = {}
        auto = self.auto_params(z) if (self.auto_params is not None and z is not None) else {}
        for slot in self.params:
            if slot.name in given:
                out[slot.name] = slot.coerce(given[slot.name])
            elif slot.name in auto:
                out[slot.name] = slot.coerce(auto[slot.name])
            elif slot.default is not None:
                out[slot.name] = slot.coerce(slot.default)
            else:
                raise DomainError(f"{self.id}: parameter {slot.name} is required")
        return out

    def lookup(self, **params) -> Domain:
        """Validity domain for the given parameters."""
        return self.domain(self.resolve_params(None, params))


@dataclass(frozen=True)
class EvalRecord:
    id: str
    z: complex
    params: Dict[str, Any]
    value: complex
    reference: complex
    residual: float
    evals: int
    converged: bool
    error_estimate: float = 0.0
    tolerance: float = 0.0

    @property
    def passed(self) -> bool:
        return self.converged and self.residual <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        """Serialisation with exactly the public report fields."""
        return {
            "id": self.id,
            "z": [self.z.real, self.z.imag],
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "value": [self.value.real, self.value.imag],
            "reference": [self.reference.real, self.reference.imag],
            "residual": self.residual,
            "evals": self.evals,
            "converged": self.converged,
        }


def _jsonable(v: Any) -> Any:
    if isinstance(v, complex):
        return [v.real, v.imag] if v.imag else v.real
    return v


# --------------------------------------------------------------------------
# vectorised numerical helpers (real positive abscissae, complex exponents)
# --------------------------------------------------------------------------


def cpow(s: np.ndarray, w: complex) -> np.ndarray:
    """``s^w`` for positive s, computed as ``exp(w log s)``."""
    return np.exp(w * np.log(s))


def bose(t: np.ndarray) -> np.ndarray:
    """``1 / (e^t - 1)``."""
    with np.errstate(over="ignore"):
        return 1.0 / np.expm1(t)


def fermi(t: np.ndarray) -> np.ndarray:
    """``1 / (e^t + 1)``."""
    e = np.exp(-t)
    return e / (1.0 + e)


def coth_minus_one(s: np.ndarray) -> np.ndarray:
    """``coth(s) - 1 = 2 / (e^(2s) - 1)``."""
    return 2.0 * bose(2.0 * s)


def csch2(s: np.ndarray) -> np.ndarray:
    """``1 / sinh(s)^2 = 4 e^(-2s) / (1 - e^(-2s))^2``."""
    return 4.0 * np.exp(-2.0 * s) / np.expm1(-2.0 * s) ** 2


def piecewise(s: np.ndarray, cut: float, small: Callable, large: Callable) -> np.ndarray:
    """Complex array built from ``small`` on ``s <= cut`` and ``large`` elsewhere."""
    out = np.empty(s.shape, dtype=complex)
    m = s <= cut
    if np.any(m):
        out[m] = small(s[m])
    if not np.all(m):
        out[~m] = large(s[~m])
    return out


def exact(value: complex) -> QuadratureResult:
    """Wrap a closed-form or series value as a zero-cost quadrature result."""
    return QuadratureResult(complex(value), 0.0, 0, True)
