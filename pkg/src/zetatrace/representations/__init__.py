"""Catalogue of zeta representations, their evaluation and cross-verification."""

from ._base import TOLERANCES, Domain, EvalRecord, ParamSlot, RepresentationDescriptor
from .catalogue import catalogue, catalogue_ids, lookup
from .evaluate import (
    VerificationReport,
    cross_verify,
    default_jobs,
    euler_even,
    eval_split,
    evaluate,
    even_zeta_table,
    functional_equation_check,
    integration_by_parts_identity,
    moment_identity_check,
    odd_zeta_table,
    residual_of,
    trivial_values_check,
    zeta_even_by_residue,
)

__all__ = [
    "TOLERANCES",
    "Domain",
    "EvalRecord",
    "ParamSlot",
    "RepresentationDescriptor",
    "catalogue",
    "catalogue_ids",
    "lookup",
    "VerificationReport",
    "cross_verify",
    "default_jobs",
    "euler_even",
    "eval_split",
    "evaluate",
    "even_zeta_table",
    "functional_equation_check",
    "integration_by_parts_identity",
    "moment_identity_check",
    "odd_zeta_table",
    "residual_of",
    "trivial_values_check",
    "zeta_even_by_residue",
]
