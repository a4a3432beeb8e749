"""Constructive X1-Jacobi exceptional orthogonal polynomials.

The degree-(n+1) polynomial q is obtained as the one-dimensional nullspace
of a collocation system for the rationally extended Scarf I equation,
written in s = sin u:

    phi(u) = F(s) q(s),   F(s) = (1-s)^((A-B)/2) (1+s)^((A+B)/2) / (2A-1-2Bs)

with A = (alpha+beta+1)/2 and B = (beta-alpha)/2. Dividing the Schroedinger
equation by F leaves a linear second-order operator on q whose rows are
scaled by (2A-1-2Bs)^3 (1-s^2) so that every coefficient stays bounded.
"""
from __future__ import annotations

import logging
from typing import Tuple

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial
from numpy.polynomial import chebyshev as cheb
from scipy import linalg

import config
from ..exceptions import DegenerateConstructionError, DomainError, ParameterError
from .core import gauss_legendre, log_gamma

__all__ = [
    "scarf_from_jacobi",
    "x1_norm_constant",
    "x1_jacobi",
    "x1_ode_residual",
    "x1_to_alt_normalization",
]

logger = logging.getLogger(__name__)


def scarf_from_jacobi(alpha: float, beta: float) -> Tuple[float, float]:
    """Invert alpha = A - B - 1/2, beta = A + B - 1/2."""
    return (alpha + beta + 1.0) / 2.0, (beta - alpha) / 2.0


def _check_parameters(alpha: float, beta: float) -> Tuple[float, float]:
    big_a, big_b = scarf_from_jacobi(alpha, beta)
    violations = []
    if beta == alpha:
        violations.append("beta != alpha")
    if not 0 < big_b < big_a - 1:
        violations.append("0 < B < A - 1")
    if violations:
        raise ParameterError(
            f"X1-Jacobi parameters (alpha={alpha}, beta={beta}) are not admissible", violations
        )
    return big_a, big_b


def x1_norm_constant(n: int, alpha: float, beta: float) -> float:
    """Normalisation constant of the extended Scarf I eigenfunction, in log-space."""
    big_a, big_b = scarf_from_jacobi(alpha, beta)
    log_n = (
        np.log(big_b)
        - (big_a - 2.0) * np.log(2.0)
        + 0.5 * (np.log(2 * big_a + 2 * n) + log_gamma(n + 1) + log_gamma(2 * big_a + n))
        - 0.5 * np.log((big_a - big_b + n + 0.5) * (big_a + big_b + n + 0.5))
        - 0.5 * (log_gamma(big_a - big_b + n - 0.5) + log_gamma(big_a + big_b + n - 0.5))
    )
    return float(np.exp(log_n))


def _ode_coefficients(s: np.ndarray, big_a: float, big_b: float, energy: float):
    """Coefficients (c2, c1, c0) of the q-equation, already row-scaled."""
    lin = 2 * big_a - 1 - 2 * big_b * s
    one_m, one_p, c_sq = 1.0 - s, 1.0 + s, 1.0 - s * s
    p, q = (big_a - big_b) / 2.0, (big_a + big_b) / 2.0

    f1 = -p / one_m + q / one_p + 2 * big_b / lin
    f1_prime = -p / one_m**2 - q / one_p**2 + 4 * big_b**2 / lin**2
    f2 = f1_prime + f1 * f1

    base = ((big_a**2 + big_b**2 - big_a) - big_b * (2 * big_a - 1) * s) / c_sq
    rational = 2 * (2 * big_a - 1) / lin - 2 * ((2 * big_a - 1) ** 2 - 4 * big_b**2) / lin**2

    c2 = -c_sq
    c1 = -(2 * c_sq * f1 - s)
    c0 = -c_sq * f2 + s * f1 + base + rational - energy

    scale = lin**3 * c_sq
    return scale * c2, scale * c1, scale * c0


def _collocation_matrix(n: int, big_a: float, big_b: float) -> np.ndarray:
    degree = n + 1
    m = degree + 1
    k = np.arange(2 * m)
    s = np.cos(np.pi * (k + 0.5) / (2 * m))

    vander = cheb.chebvander(s, degree)
    d1 = np.empty_like(vander)
    d2 = np.empty_like(vander)
    for j in range(m):
        unit = np.zeros(m)
        unit[j] = 1.0
        d1[:, j] = cheb.chebval(s, cheb.chebder(unit, 1))
        d2[:, j] = cheb.chebval(s, cheb.chebder(unit, 2))

    c2, c1, c0 = _ode_coefficients(s, big_a, big_b, (big_a + n) ** 2)
    return c2[:, None] * d2 + c1[:, None] * d1 + c0[:, None] * vander


def x1_jacobi(n: int, alpha: float, beta: float) -> Polynomial:
    """Degree-(n+1) X1-Jacobi polynomial with unit-norm wavefunction and q(1) > 0."""
    if n < 0:
        raise DomainError(f"X1-Jacobi index must be non-negative, got {n}")
    big_a, big_b = _check_parameters(alpha, beta)

    matrix = _collocation_matrix(n, big_a, big_b)
    _, sigma, vh = linalg.svd(matrix)
    null_dim = int(np.sum(sigma <= config.NULLSPACE_TOL * sigma[0]))
    logger.debug(
        "X1 collocation n=%d: sigma_min/sigma_max=%.3e, next=%.3e",
        n,
        sigma[-1] / sigma[0],
        sigma[-2] / sigma[0] if len(sigma) > 1 else np.nan,
    )
    if null_dim != 1:
        raise DegenerateConstructionError(
            f"Collocation nullspace has dimension {null_dim} for n={n}, alpha={alpha}, beta={beta}"
        )

    poly = Chebyshev(vh[-1]).convert(kind=Polynomial)
    poly = poly.trim(config.TRIM_TOL * np.max(np.abs(poly.coef)))

    # unit norm of N_n * F * q over (-pi/2, pi/2)
    nodes, weights = gauss_legendre(config.QUADRATURE_NODES).mapped(-np.pi / 2, np.pi / 2)
    s = np.sin(nodes)
    prefactor_sq = (1 - s) ** (big_a - big_b) * (1 + s) ** (big_a + big_b) / (2 * big_a - 1 - 2 * big_b * s) ** 2
    norm_sq = np.dot(weights, prefactor_sq * poly(s) ** 2) * x1_norm_constant(n, alpha, beta) ** 2
    poly = poly / np.sqrt(norm_sq)
    if poly(1.0) < 0:
        poly = -poly
    return poly


def x1_ode_residual(q: Polynomial, n: int, alpha: float, beta: float, s: np.ndarray) -> np.ndarray:
    """Residual of -phi'' + U_ext phi - (A+n)^2 phi for phi = N_n F q, at points s."""
    big_a, big_b = scarf_from_jacobi(alpha, beta)
    s = np.asarray(s, dtype=float)
    lin = 2 * big_a - 1 - 2 * big_b * s
    c2, c1, c0 = _ode_coefficients(s, big_a, big_b, (big_a + n) ** 2)
    reduced = (c2 * q.deriv(2)(s) + c1 * q.deriv(1)(s) + c0 * q(s)) / (lin**3 * (1 - s * s))
    prefactor = (1 - s) ** ((big_a - big_b) / 2) * (1 + s) ** ((big_a + big_b) / 2) / lin
    return x1_norm_constant(n, alpha, beta) * prefactor * reduced


def x1_to_alt_normalization(n: int, alpha: float, beta: float, p_hat: Polynomial) -> Polynomial:
    """Rescale to the convention (alpha+n)(beta-alpha)/(alpha+n+1) * P_hat."""
    if alpha + n + 1 == 0:
        raise DomainError(f"alpha + n + 1 vanishes for n={n}, alpha={alpha}")
    return p_hat * ((alpha + n) * (beta - alpha) / (alpha + n + 1))
