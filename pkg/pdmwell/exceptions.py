"""Exception hierarchy shared by every pdmwell module."""
from __future__ import annotations

from typing import List, Sequence

__all__ = [
    "PdmWellError",
    "DomainError",
    "ParameterError",
    "SingularExtensionError",
    "DegenerateConstructionError",
    "NumericalError",
]


class PdmWellError(Exception):
    """Base class for all package errors."""


class DomainError(PdmWellError, ValueError):
    """Argument outside the open interval where a formula is defined."""


class ParameterError(PdmWellError, ValueError):
    """Model parameters violate one or more named inequalities."""

    def __init__(self, message: str, violations: Sequence[str] = ()):
        super().__init__(message)
        self.violations: List[str] = list(violations)


class SingularExtensionError(PdmWellError, ArithmeticError):
    """A rational extension's denominator vanishes inside the interval."""


class DegenerateConstructionError(PdmWellError, ArithmeticError):
    """Collocation nullspace does not have dimension one."""


class NumericalError(PdmWellError, ArithmeticError):
    """An eigen-solve or iteration failed to converge."""
