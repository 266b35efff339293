"""Exception hierarchy shared by all zetatrace modules."""

from __future__ import annotations


class ZetaTraceError(Exception):
    """Base class for every error raised by the package."""


class DomainError(ZetaTraceError, ValueError):
    """An argument lies outside the domain of a kernel or special function."""


class PoleError(DomainError):
    """Evaluation requested at (or numerically too close to) a pole."""


class StripError(DomainError):
    """A representation was evaluated outside its validity strip."""

    def __init__(self, rep_id: str, z: complex, strip: str):
        self.rep_id = rep_id
        self.z = z
        self.strip = strip
        super().__init__(f"{rep_id}: z = {_fmt(z)} is outside the validity region {strip}")


class IntegrandError(ZetaTraceError, ArithmeticError):
    """The integrand returned a non-finite value at an interior node."""

    def __init__(self, node: float, value: complex):
        self.node = node
        self.value = value
        super().__init__(f"integrand is not finite at s = {node!r} (value {value!r})")


class UnknownRepresentation(ZetaTraceError, KeyError):
    def __init__(self, rep_id: str):
        self.rep_id = rep_id
        super().__init__(rep_id)

    def __str__(self) -> str:
        return f"unknown representation id {self.rep_id!r}"


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"
