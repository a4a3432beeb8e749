"""Special-function kernels: log-gamma, Jacobi polynomials, Gauss-Legendre rules.

Every function here is pure and accepts numpy arrays wherever a real
argument is expected, so callers can evaluate on whole grids at once.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

import config
from ..exceptions import DomainError, ParameterError

__all__ = [
    "JacobiIndex",
    "QuadratureRule",
    "log_gamma",
    "jacobi_p",
    "jacobi_p_deriv",
    "gauss_legendre",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobiIndex:
    """Degree and weight exponents of a classical Jacobi polynomial."""

    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.n < 0 or self.n > config.MAX_JACOBI_DEGREE:
            raise ParameterError(
                f"Jacobi degree {self.n} outside [0, {config.MAX_JACOBI_DEGREE}]",
                ["0 <= n <= MAX_JACOBI_DEGREE"],
            )
        failed = [name for name, ok in (("alpha > -1", self.alpha > -1), ("beta > -1", self.beta > -1)) if not ok]
        if failed:
            raise ParameterError(
                f"Non-integrable Jacobi weight (alpha={self.alpha}, beta={self.beta})", failed
            )

    def shifted(self, k: int = 1) -> "JacobiIndex":
        """Index of the k-th derivative: (n - k, alpha + k, beta + k)."""
        return JacobiIndex(self.n - k, self.alpha + k, self.beta + k)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of an interpolatory rule on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, func: Callable[[np.ndarray], np.ndarray]) -> float:
        """Approximate the integral of *func* over [-1, 1]."""
        return float(np.dot(self.weights, func(self.nodes)))

    def mapped(self, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
        """Return (nodes, weights) affinely mapped onto [lo, hi]."""
        half = 0.5 * (hi - lo)
        return lo + half * (self.nodes + 1.0), half * self.weights


def log_gamma(x: ArrayLike) -> np.ndarray | float:
    """ln Gamma(x) for x > 0."""
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    out = special.gammaln(arr)
    return float(out) if out.ndim == 0 else out


def jacobi_p(idx: JacobiIndex, z: ArrayLike) -> np.ndarray | float:
    """Classical Jacobi polynomial P_n^(alpha, beta)(z) by three-term recurrence."""
    z = np.asarray(z, dtype=float)
    n, al, be = idx.n, idx.alpha, idx.beta
    p_prev = np.ones_like(z)
    if n == 0:
        return float(p_prev) if z.ndim == 0 else p_prev
    p_curr = (al + 1.0) + (al + be + 2.0) * (z - 1.0) / 2.0
    for k in range(2, n + 1):
        s = 2 * k + al + be
        a_k = 2 * k * (k + al + be) * (s - 2)
        b_k = (s - 1) * (s * (s - 2) * z + al * al - be * be)
        c_k = 2 * (k + al - 1) * (k + be - 1) * s
        p_prev, p_curr = p_curr, (b_k * p_curr - c_k * p_prev) / a_k
    return float(p_curr) if z.ndim == 0 else p_curr


def jacobi_p_deriv(idx: JacobiIndex, z: ArrayLike, order: int = 1) -> np.ndarray | float:
    """First or second z-derivative of P_n^(alpha, beta) via the parameter shift."""
    if order not in (1, 2):
        raise ValueError(f"Unsupported derivative order: {order}")
    z = np.asarray(z, dtype=float)
    if idx.n < order:
        out = np.zeros_like(z)
        return float(out) if z.ndim == 0 else out
    m = idx.n + idx.alpha + idx.beta
    factor = (m + 1) / 2.0 if order == 1 else (m + 1) * (m + 2) / 4.0
    return factor * jacobi_p(idx.shifted(order), z)


@lru_cache(maxsize=32)
def gauss_legendre(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule by Newton iteration on the Legendre recurrence."""
    if not 1 <= n <= config.MAX_QUADRATURE_NODES:
        raise DomainError(f"Gauss-Legendre order {n} outside [1, {config.MAX_QUADRATURE_NODES}]")

    xu = np.linspace(-1.0, 1.0, n)
    y = np.cos((2 * np.arange(n) + 1) * np.pi / (2 * n)) + (0.27 / n) * np.sin(
        np.pi * xu * (n - 1) / (n + 1)
    )

    for _ in range(config.NEWTON_MAX_ITER):
        p_prev, p_curr = np.ones_like(y), y.copy()
        for k in range(1, n):
            p_prev, p_curr = p_curr, ((2 * k + 1) * y * p_curr - k * p_prev) / (k + 1)
        dp = n * (y * p_curr - p_prev) / (y * y - 1.0)
        step = p_curr / dp
        y = y - step
        if np.max(np.abs(step)) < 4 * np.finfo(float).eps:
            break
    else:
        logger.warning("Gauss-Legendre Newton iteration hit the cap for n=%d", n)

    # recompute the derivative at the converged nodes
    p_prev, p_curr = np.ones_like(y), y.copy()
    for k in range(1, n):
        p_prev, p_curr = p_curr, ((2 * k + 1) * y * p_curr - k * p_prev) / (k + 1)
    dp = n * (y * p_curr - p_prev) / (y * y - 1.0)
    weights = 2.0 / ((1.0 - y * y) * dp * dp)

    order = np.argsort(y)
    y, weights = y[order], weights[order]
    nodes = 0.5 * (y - y[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.flags.writeable = False
    weights.flags.writeable = False
    logger.debug("Gauss-Legendre rule built: n=%d, weight sum=%.16g", n, weights.sum())
    return QuadratureRule(nodes, weights)
