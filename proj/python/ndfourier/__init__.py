"""Non-Diophantine arithmetic, calculus and Fourier analysis on Cantor sets.

Exact values cross the boundary as fractions.Fraction.
"""

from ._core import (
    Branch,
    Context,
    ContextMismatch,
    DivisionByZeroPrime,
    DomainError,
    Error,
    FourierSeries,
    NotInCantorSet,
    Number,
    ParseError,
    QuadratureNonConvergent,
    UnsupportedContext,
    analyze_sawtooth,
    cli,
    digits,
    double_digits,
    halve_digits,
    nat,
    selftest,
    spectrum,
)

__all__ = [
    "Branch",
    "Context",
    "ContextMismatch",
    "DivisionByZeroPrime",
    "DomainError",
    "Error",
    "FourierSeries",
    "NotInCantorSet",
    "Number",
    "ParseError",
    "QuadratureNonConvergent",
    "UnsupportedContext",
    "analyze_sawtooth",
    "cli",
    "digits",
    "double_digits",
    "halve_digits",
    "nat",
    "selftest",
    "spectrum",
]
