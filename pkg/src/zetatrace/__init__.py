"""Integral, series, contour and spectral representations of the Riemann zeta function."""

from .errors import DomainError, IntegrandError, PoleError, StripError, UnknownRepresentation, ZetaTraceError
from .quadrature import IntervalSpec, QuadratureConfig, QuadratureResult, contour_circle, integrate, integrate_tensor
from .reference import reference_gamma, reference_zeta
from .representations import catalogue, cross_verify, euler_even, eval_split, evaluate, lookup, odd_zeta_table

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "IntegrandError",
    "PoleError",
    "StripError",
    "UnknownRepresentation",
    "ZetaTraceError",
    "IntervalSpec",
    "QuadratureConfig",
    "QuadratureResult",
    "contour_circle",
    "integrate",
    "integrate_tensor",
    "reference_gamma",
    "reference_zeta",
    "catalogue",
    "cross_verify",
    "euler_even",
    "eval_split",
    "evaluate",
    "lookup",
    "odd_zeta_table",
]
