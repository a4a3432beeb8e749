"""Closed-form spectra, wavefunctions and normalisation constants.

Wavefunctions come back as :class:`WavefunctionEval` triples carrying the
value together with analytic first and second derivatives, so residual
checks never mix formula errors with finite-difference error. All Gamma
products are evaluated in log-space and exponentiated once.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import numpy as np
import pandas as pd
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike

import config
from . import model
from .exceptions import DomainError, ParameterError
from .model import ExtensionKind, ScarfParams, WellParams
from .specfun import JacobiIndex, gauss_legendre, jacobi_p, jacobi_p_deriv, log_gamma, x1_jacobi, x1_norm_constant

__all__ = [
    "SpectrumResult",
    "WavefunctionEval",
    "energy",
    "scarf_energy",
    "spectrum",
    "scarf_norm_constant",
    "scarf_wavefunction",
    "pdm_norm_constant",
    "pdm_norm_transfer",
    "pdm_wavefunction",
    "pdm_wavefunction_via_pct",
    "normalization_consistency",
    "integrate_over_angle",
    "integrate_over_well",
    "gram_matrix",
    "node_count",
]

logger = logging.getLogger(__name__)


@dataclass
class SpectrumResult:
    """Labelled energy levels of one kind at one parameter set."""

    entries: List[Tuple[int, float]]
    kind: ExtensionKind
    params: WellParams

    @property
    def labels(self) -> List[int]:
        return [n for n, _ in self.entries]

    @property
    def energies(self) -> np.ndarray:
        return np.array([e for _, e in self.entries])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"n": self.labels, "energy": self.energies})


@dataclass
class WavefunctionEval:
    """A function value with its first and second derivatives."""

    value: np.ndarray
    d1: np.ndarray
    d2: np.ndarray = field(repr=False)


def _require_closed_form(kind: ExtensionKind) -> ExtensionKind:
    kind = ExtensionKind(kind)
    if not kind.has_closed_form:
        raise ValueError(f"No closed-form wavefunctions for {kind.value}")
    return kind


# ----------------------------------------------------------------------
# Spectra
# ----------------------------------------------------------------------
def energy(p: WellParams, n: ArrayLike):
    """E_n of the PDM well; total over integers."""
    n = np.asarray(n, dtype=float)
    ba = p.width
    value = (
        (p.b + p.a) / ba * p.omega * (n + 0.5)
        + n * (n + 1) / (p.a * p.b)
        + p.omega**2 * p.a**2 * p.b**2 / ba**2
    )
    return float(value) if value.ndim == 0 else value


def scarf_energy(s: ScarfParams, n: int) -> float:
    if n < 0:
        raise DomainError(f"Scarf I level index must be non-negative, got {n}")
    return (s.A + n) ** 2


def spectrum(p: WellParams, kind: ExtensionKind, count: int) -> SpectrumResult:
    """First *count* closed-form levels labelled by the kind's index set."""
    kind = ExtensionKind(kind)
    violations = model.validate(p, kind)
    if violations:
        raise ParameterError(f"Parameters not admissible for {kind.value}", violations)
    entries = [(n, energy(p, n)) for n in model.index_set(kind, count)]
    return SpectrumResult(entries, kind, p)


# ----------------------------------------------------------------------
# Constant-mass (u-space) wavefunctions
# ----------------------------------------------------------------------
@lru_cache(maxsize=128)
def _x1_poly(n: int, alpha: float, beta: float) -> Polynomial:
    return x1_jacobi(n, alpha, beta)


def _scarf_jacobi(s: ScarfParams) -> Tuple[float, float]:
    return s.A - s.B - 0.5, s.A + s.B - 0.5


def scarf_norm_constant(s: ScarfParams, n: int, kind: ExtensionKind = ExtensionKind.BASE) -> float:
    kind = _require_closed_form(kind)
    if kind is ExtensionKind.X1:
        return x1_norm_constant(n, *_scarf_jacobi(s))
    A, B = s.A, s.B
    log_n = 0.5 * (
        np.log(2 * A + 2 * n)
        + log_gamma(n + 1)
        + log_gamma(2 * A + n)
        - 2 * A * np.log(2.0)
        - log_gamma(A - B + n + 0.5)
        - log_gamma(A + B + n + 0.5)
    )
    return float(np.exp(log_n))


def scarf_wavefunction(
    s: ScarfParams, n: int, u: ArrayLike, kind: ExtensionKind = ExtensionKind.BASE
) -> WavefunctionEval:
    """phi_n(u) and its u-derivatives for the base or X1-extended Scarf I well."""
    kind = _require_closed_form(kind)
    u = np.asarray(u, dtype=float)
    if np.any(~(np.abs(u) < np.pi / 2)):
        raise DomainError("Angle outside the open interval (-pi/2, pi/2)")
    alpha, beta = _scarf_jacobi(s)
    z = np.sin(u)
    p_exp, q_exp = (s.A - s.B) / 2, (s.A + s.B) / 2
    f1 = -p_exp / (1 - z) + q_exp / (1 + z)
    f1_prime = -p_exp / (1 - z) ** 2 - q_exp / (1 + z) ** 2
    prefactor = (1 - z) ** p_exp * (1 + z) ** q_exp

    if kind is ExtensionKind.X1:
        lin = 2 * s.A - 1 - 2 * s.B * z
        f1 = f1 + 2 * s.B / lin
        f1_prime = f1_prime + 4 * s.B**2 / lin**2
        prefactor = prefactor / lin
        poly = _x1_poly(n, alpha, beta)
        q, dq, ddq = poly(z), poly.deriv(1)(z), poly.deriv(2)(z)
    else:
        idx = JacobiIndex(n, alpha, beta)
        q, dq, ddq = jacobi_p(idx, z), jacobi_p_deriv(idx, z, 1), jacobi_p_deriv(idx, z, 2)

    norm = scarf_norm_constant(s, n, kind)
    g = norm * prefactor * q
    g1 = norm * prefactor * (f1 * q + dq)
    g2 = norm * prefactor * ((f1_prime + f1 * f1) * q + 2 * f1 * dq + ddq)
    return WavefunctionEval(value=g, d1=np.cos(u) * g1, d2=(1 - z * z) * g2 - z * g1)


# ----------------------------------------------------------------------
# PDM (x-space) wavefunctions
# ----------------------------------------------------------------------
def _exponent_sum(p: WellParams) -> float:
    """omega*a*b*(a+b)/(b-a)."""
    return p.g * (p.a + p.b) / p.width


def pdm_norm_constant(p: WellParams, n: int, kind: ExtensionKind = ExtensionKind.BASE) -> float:
    """N_n from the expanded closed forms."""
    kind = _require_closed_form(kind)
    big_s = _exponent_sum(p)
    beta_x, alpha_x = model.jacobi_indices(p)
    head = 0.5 * (np.log(big_s + 2 * n + 1) + log_gamma(n + 1) + log_gamma(big_s + n + 1))
    if kind is ExtensionKind.BASE:
        log_n = head - 0.5 * (
            (big_s + 1) * np.log(p.width) + log_gamma(alpha_x + n + 1) + log_gamma(beta_x + n + 1)
        )
    else:
        log_n = (
            head
            - 0.5 * ((big_s - 1) * np.log(p.width) + np.log((alpha_x + n + 1) * (beta_x + n + 1)))
            - 0.5 * (log_gamma(alpha_x + n) + log_gamma(beta_x + n))
        )
    return float(np.exp(log_n))


def pdm_norm_transfer(p: WellParams, n: int, kind: ExtensionKind = ExtensionKind.BASE) -> float:
    """N_n obtained from the u-space constant through the PCT."""
    kind = _require_closed_form(kind)
    pct = model.pct_map(p)
    ab = p.a * p.b
    big_s = _exponent_sum(p)
    cal_n = scarf_norm_constant(model.scarf_params(p), n, kind)
    if kind is ExtensionKind.BASE:
        return pct.lam * cal_n * ab**0.25 * (2 / p.width) ** (0.5 * (big_s + 1))
    return pct.lam / p.omega * ab**-0.75 * (2 / p.width) ** (0.5 * (big_s - 1)) * cal_n


def normalization_consistency(p: WellParams, n: int, kind: ExtensionKind = ExtensionKind.BASE) -> float:
    """Relative gap between the transferred and the expanded N_n."""
    expanded = pdm_norm_constant(p, n, kind)
    return abs(pdm_norm_transfer(p, n, kind) - expanded) / expanded


def pdm_wavefunction(
    p: WellParams, n: int, x: ArrayLike, kind: ExtensionKind = ExtensionKind.BASE
) -> WavefunctionEval:
    """psi_n(x) and its x-derivatives for the base or X1-extended PDM well."""
    kind = _require_closed_form(kind)
    if n < 0:
        raise DomainError(f"Level index must be non-negative for {kind.value}, got {n}")
    x = np.asarray(x, dtype=float)
    if np.any(~((x > p.a) & (x < p.b))):
        raise DomainError(f"Position outside the open interval ({p.a}, {p.b})")
    model.scarf_params(p)  # raises on the base condition

    ba = p.width
    beta_x, alpha_x = model.jacobi_indices(p)  # exponents of (x-a) and (b-x) doubled
    p_exp, q_exp = beta_x / 2, alpha_x / 2
    z = (2 * x - p.a - p.b) / ba
    dz = 2 / ba

    h1 = p_exp / (x - p.a) - q_exp / (p.b - x)
    h1_prime = -p_exp / (x - p.a) ** 2 - q_exp / (p.b - x) ** 2
    prefactor = (x - p.a) ** p_exp * (p.b - x) ** q_exp

    if kind is ExtensionKind.X1:
        h1 = h1 - 1 / x
        h1_prime = h1_prime + 1 / x**2
        prefactor = prefactor / x
        poly = _x1_poly(n, beta_x, alpha_x)
        q, dq, ddq = poly(-z), -dz * poly.deriv(1)(-z), dz**2 * poly.deriv(2)(-z)
    else:
        idx = JacobiIndex(n, alpha_x, beta_x)
        q = jacobi_p(idx, z)
        dq = dz * jacobi_p_deriv(idx, z, 1)
        ddq = dz**2 * jacobi_p_deriv(idx, z, 2)

    norm = pdm_norm_constant(p, n, kind)
    f = norm * prefactor
    return WavefunctionEval(
        value=f * q,
        d1=f * (h1 * q + dq),
        d2=f * ((h1_prime + h1 * h1) * q + 2 * h1 * dq + ddq),
    )


def pdm_wavefunction_via_pct(
    p: WellParams, n: int, x: ArrayLike, kind: ExtensionKind = ExtensionKind.BASE
) -> np.ndarray:
    """lambda M(x)^(1/4) phi_n(u(x)); equals psi_n up to the phase (-1)^n for BASE."""
    pct = model.pct_map(p)
    phi = scarf_wavefunction(model.scarf_params(p), n, model.u_of_x(p, x), kind)
    return pct.lam * np.asarray(model.mass(p, x)) ** 0.25 * phi.value


# ----------------------------------------------------------------------
# Quadrature helpers
# ----------------------------------------------------------------------
def integrate_over_angle(func: Callable[[np.ndarray], np.ndarray], nodes: int = config.QUADRATURE_NODES) -> float:
    """Integral over (-pi/2, pi/2) by Gauss-Legendre."""
    u, w = gauss_legendre(nodes).mapped(-np.pi / 2, np.pi / 2)
    return float(np.dot(w, func(u)))


def integrate_over_well(
    p: WellParams, func: Callable[[np.ndarray], np.ndarray], nodes: int = config.QUADRATURE_NODES
) -> float:
    """Integral over (a, b) after the substitution x = x_of_u(u)."""
    u, w = gauss_legendre(nodes).mapped(-np.pi / 2, np.pi / 2)
    x = model.x_of_u(p, u)
    jacobian = 0.5 * p.width * np.cos(u)
    return float(np.dot(w, func(x) * jacobian))


def gram_matrix(
    p: WellParams,
    kind: ExtensionKind,
    nmax: int,
    nodes: int = config.QUADRATURE_NODES,
    scale: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Overlaps of psi_0..psi_nmax; *scale* multiplies each psi (fault injection)."""
    u, w = gauss_legendre(nodes).mapped(-np.pi / 2, np.pi / 2)
    x = model.x_of_u(p, u)
    weights = w * 0.5 * p.width * np.cos(u)
    psi = np.array([pdm_wavefunction(p, n, x, kind).value for n in range(nmax + 1)])
    if scale is not None:
        psi = psi * np.asarray(scale, dtype=float)[:, None]
    return (psi * weights) @ psi.T


def node_count(values: ArrayLike) -> int:
    """Number of sign changes, ignoring exact zeros."""
    values = np.asarray(values, dtype=float)
    signs = np.sign(values[values != 0])
    return int(np.count_nonzero(np.diff(signs)))
