"""Exception types shared across the package."""


class DeformedAlgebraError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DeformedAlgebraError, ValueError):
    """A parameter lies outside the domain where the formulas are defined."""


class PoleError(DomainError):
    """A formula was evaluated at a pole of one of its denominators."""


class RecipeDivisionError(DomainError):
    """A coefficient function hit zero inside the reconstruction recipe."""


class NegativeStructureFunctionError(DomainError):
    """A structure-function value is negative where a square root is needed."""


class EvaluationOverflowError(DeformedAlgebraError, OverflowError):
    """An intermediate power left the double-precision range."""
