"""Finite-difference eigensolver for the constant-mass and PDM problems.

Both discretisations are symmetric tridiagonal on a uniform interior grid
with Dirichlet walls. The u-space operator is -d²/du² + U(u); the x-space
operator is the flux form -d/dx (1/M) d/dx + V_eff with 1/M sampled at the
half-nodes. Eigenpairs come from LAPACK's Sturm-bisection driver through
:func:`scipy.linalg.eigh_tridiagonal`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

import config
from . import analytic, model
from .exceptions import NumericalError, ParameterError, SingularExtensionError
from .model import ExtensionKind, WellParams

__all__ = [
    "Space",
    "SolverConfig",
    "TridiagonalMatrix",
    "EigenResult",
    "build_hamiltonian_u",
    "build_hamiltonian_x",
    "eigen_tridiagonal",
    "sturm_count",
    "count_levels_below",
    "solve",
    "residual",
]

logger = logging.getLogger(__name__)

Potential = Callable[[np.ndarray], np.ndarray]


class Space(str, Enum):
    """Variable the Hamiltonian is discretised in."""

    U = "u"
    X = "x"


@dataclass(frozen=True)
class SolverConfig:
    grid: int = config.DEFAULT_GRID
    levels: int = config.DEFAULT_LEVELS
    space: Space = Space.U
    richardson: bool = True
    boundary_inset: float = 0.0

    def __post_init__(self):
        violations = []
        if self.levels < 1:
            violations.append("levels >= 1")
        if self.grid < config.MIN_GRID:
            violations.append(f"grid >= {config.MIN_GRID}")
        if self.grid < config.POINTS_PER_LEVEL * self.levels:
            violations.append(f"grid >= {config.POINTS_PER_LEVEL} * levels")
        if not 0.0 <= self.boundary_inset < 0.5:
            violations.append("0 <= boundary_inset < 1/2")
        if violations:
            raise ParameterError(f"Invalid solver configuration: {', '.join(violations)}", violations)

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "levels": self.levels,
            "space": self.space.value,
            "richardson": self.richardson,
            "boundary_inset": self.boundary_inset,
        }


@dataclass
class TridiagonalMatrix:
    """Symmetric tridiagonal operator with its grid."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray
    nodes: Optional[np.ndarray] = None
    step: float = 1.0

    def __post_init__(self):
        self.diagonal = np.asarray(self.diagonal, dtype=float)
        self.off_diagonal = np.asarray(self.off_diagonal, dtype=float)
        if self.off_diagonal.shape != (max(len(self.diagonal) - 1, 0),):
            raise ValueError("Off-diagonal must have one entry fewer than the diagonal")

    def __len__(self) -> int:
        return len(self.diagonal)

    def norm_inf(self) -> float:
        row = np.abs(self.diagonal).copy()
        row[:-1] += np.abs(self.off_diagonal)
        row[1:] += np.abs(self.off_diagonal)
        return float(row.max())

    def matvec(self, v: ArrayLike) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        out = self.diagonal * v
        out[:-1] += self.off_diagonal * v[1:]
        out[1:] += self.off_diagonal * v[:-1]
        return out

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diagonal) + np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)


@dataclass
class EigenResult:
    """Low-lying eigenpairs; energies are Richardson-extrapolated when requested."""

    energies: np.ndarray
    vectors: np.ndarray
    grid: np.ndarray
    space: Space
    raw_energies: np.ndarray = field(repr=False)
    estimated_error: Optional[np.ndarray] = None

    def to_dict(self) -> dict:
        return {
            "space": self.space.value,
            "energies": self.energies.tolist(),
            "estimated_error": None if self.estimated_error is None else self.estimated_error.tolist(),
        }


# ----------------------------------------------------------------------
# Assembly
# ----------------------------------------------------------------------
def _uniform_interior(lo: float, hi: float, n: int) -> Tuple[np.ndarray, float]:
    step = (hi - lo) / (n + 1)
    return lo + step * np.arange(1, n + 1), step


def _sample(potential: Potential, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(potential(nodes), dtype=float)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        raise SingularExtensionError(
            f"Potential is not finite at node {bad[0]} (coordinate {nodes[bad[0]]:.17g})"
        )
    return values


def build_hamiltonian_u(
    potential: Potential,
    n: int,
    interval: Tuple[float, float] = (-np.pi / 2, np.pi / 2),
) -> TridiagonalMatrix:
    """Central differences for -d²/du² + U on n interior nodes."""
    nodes, h = _uniform_interior(interval[0], interval[1], n)
    values = _sample(potential, nodes)
    return TridiagonalMatrix(
        diagonal=2.0 / h**2 + values,
        off_diagonal=np.full(n - 1, -1.0 / h**2),
        nodes=nodes,
        step=h,
    )


def build_hamiltonian_x(
    p: WellParams,
    potential: Potential,
    n: int,
    coefficient: Optional[Potential] = None,
    interval: Optional[Tuple[float, float]] = None,
) -> TridiagonalMatrix:
    """Flux form -d/dx f d/dx + V with f = 1/M at the half-nodes by default."""
    lo, hi = interval if interval is not None else (p.a, p.b)
    nodes, h = _uniform_interior(lo, hi, n)
    halves = lo + h * (np.arange(n + 1) + 0.5)
    f = coefficient(halves) if coefficient is not None else model.inverse_mass(p, halves)
    f = np.asarray(f, dtype=float)
    values = _sample(potential, nodes)
    return TridiagonalMatrix(
        diagonal=(f[:-1] + f[1:]) / h**2 + values,
        off_diagonal=-f[1:-1] / h**2,
        nodes=nodes,
        step=h,
    )


# ----------------------------------------------------------------------
# Eigenpairs
# ----------------------------------------------------------------------
def eigen_tridiagonal(matrix: TridiagonalMatrix, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """k lowest eigenpairs; vectors are rows with h * sum(v**2) = 1."""
    if not 1 <= k <= len(matrix):
        raise ValueError(f"Requested {k} eigenpairs from a {len(matrix)}x{len(matrix)} matrix")
    tol = config.STEBZ_TOL_FACTOR * matrix.norm_inf()
    try:
        values, vectors = linalg.eigh_tridiagonal(
            matrix.diagonal,
            matrix.off_diagonal,
            select="i",
            select_range=(0, k - 1),
            lapack_driver="stebz",
            tol=tol,
        )
    except (linalg.LinAlgError, np.linalg.LinAlgError) as exc:
        raise NumericalError(f"Tridiagonal eigensolver failed: {exc}") from exc

    vectors = vectors.T / np.sqrt(matrix.step)
    # first significant component positive
    for row in vectors:
        lead = row[np.argmax(np.abs(row) > 1e-8 * np.abs(row).max())]
        if lead < 0:
            row *= -1.0
    return values, vectors


def sturm_count(matrix: TridiagonalMatrix, shift: float) -> int:
    """Number of eigenvalues strictly below *shift* (LDL^T inertia)."""
    tiny = np.finfo(float).tiny
    off_sq = matrix.off_diagonal**2
    count = 0
    pivot = matrix.diagonal[0] - shift
    for i in range(len(matrix)):
        if i:
            pivot = matrix.diagonal[i] - shift - off_sq[i - 1] / pivot
        if pivot == 0.0:
            pivot = -tiny
        if pivot < 0:
            count += 1
    return count


# ----------------------------------------------------------------------
# PDM problem
# ----------------------------------------------------------------------
def _operator(
    p: WellParams, kind: ExtensionKind, n: int, cfg: SolverConfig, potential: Optional[Potential]
) -> TridiagonalMatrix:
    v = potential if potential is not None else (lambda x: model.v_eff(p, x, kind))
    if cfg.space is Space.U:
        pct = model.pct_map(p)
        inset = cfg.boundary_inset * np.pi
        interval = (-np.pi / 2 + inset, np.pi / 2 - inset)

        def u_potential(u: np.ndarray) -> np.ndarray:
            x = model.x_of_u(p, u)
            return (v(x) - model.mass_term(p, x) - pct.c_bar) / pct.a_bar**2

        return build_hamiltonian_u(u_potential, n, interval)
    inset = cfg.boundary_inset * p.width
    return build_hamiltonian_x(p, v, n, interval=(p.a + inset, p.b - inset))


def _to_energy(p: WellParams, values: np.ndarray, space: Space) -> np.ndarray:
    if space is Space.X:
        return values
    pct = model.pct_map(p)
    return pct.a_bar**2 * values + pct.c_bar


def _check(p: WellParams, kind: ExtensionKind) -> ExtensionKind:
    kind = ExtensionKind(kind)
    violations = model.validate(p, kind)
    if violations:
        raise ParameterError(f"Parameters not admissible for {kind.value}", violations)
    return kind


def count_levels_below(
    p: WellParams,
    kind: ExtensionKind,
    energy: float,
    cfg: SolverConfig = SolverConfig(),
) -> int:
    """Numeric levels of the discretised PDM problem strictly below *energy*."""
    kind = _check(p, kind)
    matrix = _operator(p, kind, cfg.grid, cfg, None)
    if cfg.space is Space.U:
        pct = model.pct_map(p)
        energy = (energy - pct.c_bar) / pct.a_bar**2
    return sturm_count(matrix, energy)


def solve(
    p: WellParams,
    kind: ExtensionKind,
    cfg: SolverConfig = SolverConfig(),
    potential: Optional[Potential] = None,
) -> EigenResult:
    """Lowest cfg.levels eigenpairs of the PDM problem in cfg.space.

    With Richardson on, the grid is refined from N to 2N + 1 interior nodes
    (exact halving of h) and E = (4 E_fine - E_coarse) / 3 is returned
    together with |E_fine - E_coarse| / 3 as the error estimate. Vectors and
    grid are those of the finest solve.
    """
    kind = _check(p, kind)
    matrix = _operator(p, kind, cfg.grid, cfg, potential)
    values, vectors = eigen_tridiagonal(matrix, cfg.levels)
    coarse = _to_energy(p, values, cfg.space)
    logger.debug("solve %s/%s N=%d: %s", kind.value, cfg.space.value, cfg.grid, coarse)
    if not cfg.richardson:
        return EigenResult(coarse, vectors, matrix.nodes, cfg.space, raw_energies=coarse)

    fine_matrix = _operator(p, kind, 2 * cfg.grid + 1, cfg, potential)
    fine_values, fine_vectors = eigen_tridiagonal(fine_matrix, cfg.levels)
    fine = _to_energy(p, fine_values, cfg.space)
    extrapolated = (4.0 * fine - coarse) / 3.0
    error = np.abs(fine - coarse) / 3.0
    logger.debug("Richardson %s/%s: E=%s est=%s", kind.value, cfg.space.value, extrapolated, error)
    return EigenResult(
        extrapolated, fine_vectors, fine_matrix.nodes, cfg.space, raw_energies=fine, estimated_error=error
    )


def residual(
    p: WellParams,
    kind: ExtensionKind,
    n: int,
    points: Sequence[float],
    potential: Optional[Potential] = None,
    level: Optional[float] = None,
) -> float:
    """max |-(psi'/M)' + V psi - E psi| / (|E| max|psi|) over *points*."""
    kind = ExtensionKind(kind)
    x = np.asarray(points, dtype=float)
    psi = analytic.pdm_wavefunction(p, n, x, kind)
    m = np.asarray(model.mass(p, x))
    dm = np.asarray(model.mass_derivative(p, x))
    v = potential(x) if potential is not None else model.v_eff(p, x, kind)
    e = analytic.energy(p, n) if level is None else level
    kinetic = -(psi.d2 / m - dm * psi.d1 / m**2)
    res = kinetic + v * psi.value - e * psi.value
    return float(np.max(np.abs(res)) / (abs(e) * np.max(np.abs(psi.value))))
