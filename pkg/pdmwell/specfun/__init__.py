"""Special-functions sub-package.

Public API:
    log_gamma        - ln Gamma(x) for x > 0
    jacobi_p         - classical Jacobi polynomial by recurrence
    jacobi_p_deriv   - first/second derivative via the parameter shift
    gauss_legendre   - cached n-point Gauss-Legendre rule
    x1_jacobi        - X1-Jacobi exceptional polynomial by collocation

Convenience helper ``integrate_weighted`` integrates against the Jacobi
weight after the substitution z = sin(theta), which keeps the integrand
smooth at the endpoints for half-integer exponents.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from .core import JacobiIndex, QuadratureRule, gauss_legendre, jacobi_p, jacobi_p_deriv, log_gamma
from .exceptional import (
    scarf_from_jacobi,
    x1_jacobi,
    x1_norm_constant,
    x1_ode_residual,
    x1_to_alt_normalization,
)

__all__ = [
    "JacobiIndex",
    "QuadratureRule",
    "gauss_legendre",
    "integrate_weighted",
    "jacobi_p",
    "jacobi_p_deriv",
    "log_gamma",
    "scarf_from_jacobi",
    "x1_jacobi",
    "x1_norm_constant",
    "x1_ode_residual",
    "x1_to_alt_normalization",
]


def integrate_weighted(
    func: Callable[[np.ndarray], np.ndarray],
    alpha: float,
    beta: float,
    nodes: int = 200,
) -> float:
    """Integral of (1-z)^alpha (1+z)^beta func(z) over [-1, 1]."""
    theta, weights = gauss_legendre(nodes).mapped(-np.pi / 2, np.pi / 2)
    z = np.sin(theta)
    integrand = (1 - z) ** alpha * (1 + z) ** beta * func(z) * np.cos(theta)
    return float(np.dot(weights, integrand))
