"""Claim checks and the aggregate verification report.

Each ``check_*`` function returns :class:`CheckReport` objects and never
raises on a failed claim. A report carries enough evidence (observed,
expected, tolerance, rule) for its status to be recomputed independently.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional

import numpy as np
from numpy.polynomial import Polynomial

import config
from . import analytic, eigensolver, model
from .eigensolver import SolverConfig, Space
from .exceptions import PdmWellError
from .model import ExtensionKind, ScarfParams, WellParams
from .specfun import gauss_legendre, x1_jacobi, x1_norm_constant, x1_ode_residual

__all__ = [
    "Fault",
    "CheckReport",
    "ReportOptions",
    "check_validation",
    "check_spectrum",
    "check_orthonormality",
    "check_pct",
    "check_x2_printed_examples",
    "check_residuals",
    "check_normalization_consistency",
    "check_x1_polynomials",
    "check_isospectrality",
    "check_convergence",
    "check_cross_space",
    "check_level_count",
    "full_report",
]

logger = logging.getLogger(__name__)

PASS, FAIL = "pass", "fail"


class Fault(str, Enum):
    """Deliberate corruptions used to prove each check can fail.

    Continuous quantities are scaled by 1 % (``c_bar`` flips sign instead),
    ``polynomial`` multiplies every X1 polynomial by (1 + 0.01 z) and
    ``count`` adds one to every counted quantity.
    """

    NONE = "none"
    C_BAR = "c_bar"
    NORMALIZATION = "normalization"
    POTENTIAL = "potential"
    ENERGY = "energy"
    POLYNOMIAL = "polynomial"
    COUNT = "count"


@dataclass
class CheckReport:
    """Outcome of one claim check.

    ``rule`` says how status follows from the numbers: ``abs`` means
    |observed - expected| <= tolerance, ``max`` means observed <= expected +
    tolerance and ``min`` means observed >= expected - tolerance.
    """

    check_name: str
    kind: Optional[ExtensionKind]
    params: Optional[WellParams]
    observed: Optional[float]
    expected: float
    tolerance: float
    rule: str = "abs"
    detail: str = ""
    status: str = field(default="")

    def __post_init__(self):
        if self.observed is not None and not math.isfinite(self.observed):
            self.detail = (self.detail + "; " if self.detail else "") + f"observed={self.observed}"
            self.observed = None
        self.status = self.recompute()

    def recompute(self) -> str:
        if self.observed is None:
            return FAIL
        if self.rule == "abs":
            ok = abs(self.observed - self.expected) <= self.tolerance
        elif self.rule == "max":
            ok = self.observed <= self.expected + self.tolerance
        elif self.rule == "min":
            ok = self.observed >= self.expected - self.tolerance
        else:
            raise ValueError(f"Unknown rule: {self.rule}")
        return PASS if ok else FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "kind": self.kind.value if self.kind is not None else None,
            "params": self.params.to_dict() if self.params is not None else None,
            "status": self.status,
            "observed": self.observed,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "rule": self.rule,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckReport":
        params = data.get("params")
        kind = data.get("kind")
        return cls(
            check_name=data["check_name"],
            kind=ExtensionKind(kind) if kind is not None else None,
            params=WellParams(**params) if params is not None else None,
            observed=data["observed"],
            expected=data["expected"],
            tolerance=data["tolerance"],
            rule=data.get("rule", "abs"),
            detail=data.get("detail", ""),
        )


@dataclass(frozen=True)
class ReportOptions:
    grid: int = config.DEFAULT_GRID
    levels: int = config.DEFAULT_LEVELS
    nmax: int = config.DEFAULT_NMAX
    x1_nmax: int = 8
    fault: Fault = Fault.NONE
    workers: int = 1
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(config.TOLERANCES))

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "levels": self.levels,
            "nmax": self.nmax,
            "x1_nmax": self.x1_nmax,
            "fault": self.fault.value,
            "quadrature_nodes": config.QUADRATURE_NODES,
            "check_points": config.CHECK_POINTS,
            "residual_points": config.RESIDUAL_POINTS,
            "tolerances": dict(self.tolerances),
        }


def _scale(fault: Fault, target: Fault) -> float:
    return config.FAULT_FACTOR if Fault(fault) is target else 1.0


def _miscount(fault: Fault) -> int:
    return 1 if Fault(fault) is Fault.COUNT else 0


def _spectrum_tol(kind: ExtensionKind) -> float:
    return config.TOLERANCES["spectrum_x2" if kind.is_x2 else "spectrum"]


def _inadmissible(name: str, p: WellParams, kind: ExtensionKind) -> Optional[CheckReport]:
    """Failing report naming the violated constraints, or None when (p, kind) is admissible."""
    violations = model.validate(p, kind)
    if not violations:
        return None
    return CheckReport(
        name,
        ExtensionKind(kind),
        p,
        observed=float(len(violations)),
        expected=0.0,
        tolerance=0.0,
        detail="not admissible: " + "; ".join(violations),
    )


# ----------------------------------------------------------------------
# Individual checks
# ----------------------------------------------------------------------
def check_validation(p: WellParams, kind: ExtensionKind, fault: Fault = Fault.NONE) -> CheckReport:
    violations = model.validate(p, kind)
    return CheckReport(
        "validation",
        ExtensionKind(kind),
        p,
        observed=float(len(violations) + _miscount(fault)),
        expected=0.0,
        tolerance=0.0,
        detail="; ".join(violations) if violations else "all constraints hold",
    )


def check_spectrum(
    p: WellParams,
    kind: ExtensionKind,
    levels: int = config.DEFAULT_LEVELS,
    tol: Optional[float] = None,
    grid: int = config.DEFAULT_GRID,
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Richardson-extrapolated u-space levels against the closed form."""
    kind = ExtensionKind(kind)
    rejected = _inadmissible("spectrum", p, kind)
    if rejected is not None:
        return [rejected]
    tol = _spectrum_tol(kind) if tol is None else tol
    expected = analytic.spectrum(p, kind, levels)
    result = eigensolver.solve(p, kind, SolverConfig(grid=grid, levels=levels))
    factor = _scale(fault, Fault.ENERGY)
    reports = []
    for (n, e_exact), e_num, est in zip(expected.entries, result.energies, result.estimated_error):
        target = factor * e_exact
        reports.append(
            CheckReport(
                "spectrum",
                kind,
                p,
                observed=float(e_num),
                expected=target,
                tolerance=tol * max(1.0, abs(target)),
                detail=f"n={n}, estimated_error={est:.3e}",
            )
        )
    if kind is ExtensionKind.X2_TYPE_III:
        reports.append(_type_iii_e0_report(p, grid, fault))
    return reports


def _type_iii_e0_report(p: WellParams, grid: int, fault: Fault = Fault.NONE) -> CheckReport:
    """Count numeric levels within a quarter gap of E(0); the printed set omits n = 0."""
    kind = ExtensionKind.X2_TYPE_III
    e0, e1 = analytic.energy(p, 0), analytic.energy(p, 1)
    window = 0.25 * (e1 - e0)
    cfg = SolverConfig(grid=grid, levels=1)
    found = eigensolver.count_levels_below(p, kind, e0 + window, cfg) - eigensolver.count_levels_below(
        p, kind, e0 - window, cfg
    )
    found += _miscount(fault)
    return CheckReport(
        "type_iii_e0_level",
        kind,
        p,
        observed=float(found),
        expected=0.0,
        tolerance=0.0,
        rule="max",
        detail=f"{'a level' if found else 'no level'} near E(0)={e0:.17g}",
    )


def check_orthonormality(
    p: WellParams,
    kind: ExtensionKind,
    nmax: int = config.DEFAULT_NMAX,
    tol: float = config.TOLERANCES["orthonormality"],
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Gram matrix of psi_0..psi_nmax against the identity (upper triangle)."""
    kind = ExtensionKind(kind)
    rejected = _inadmissible("orthonormality", p, kind)
    if rejected is not None:
        return [rejected]
    scale = np.ones(nmax + 1)
    scale[0] = _scale(fault, Fault.NORMALIZATION)
    gram = analytic.gram_matrix(p, kind, nmax, scale=scale)
    reports = []
    for m in range(nmax + 1):
        for n in range(m, nmax + 1):
            reports.append(
                CheckReport(
                    "orthonormality",
                    kind,
                    p,
                    observed=float(gram[m, n]),
                    expected=1.0 if m == n else 0.0,
                    tolerance=tol,
                    detail=f"<psi_{m}|psi_{n}>",
                )
            )
    return reports


def check_pct(
    p: WellParams,
    kind: ExtensionKind,
    tol: float = config.TOLERANCES["pct"],
    fault: Fault = Fault.NONE,
) -> CheckReport:
    """max |potential_from_pct - v_eff| over interior points.

    The tolerance scales with max(1, max|V_rat|): the shared base term only
    contributes rounding error, however large it grows near the walls.
    """
    kind = ExtensionKind(kind)
    rejected = _inadmissible("pct", p, kind)
    if rejected is not None:
        return rejected
    x = p.interior(config.CHECK_POINTS)
    pct = model.pct_map(p)
    if Fault(fault) is Fault.C_BAR:
        pct = model.PctMap(pct.a_bar, pct.b_bar, -pct.c_bar, pct.lam)
    direct = model.v_eff(p, x, kind) * _scale(fault, Fault.POTENTIAL)
    via_pct = model.potential_from_pct(p, kind, x, pct=pct)
    deviation = float(np.max(np.abs(via_pct - direct)))
    rational = float(np.max(np.abs(model.pdm_rational(p, x, kind))))
    return CheckReport(
        "pct",
        kind,
        p,
        observed=deviation,
        expected=0.0,
        tolerance=tol * max(1.0, rational),
        rule="max",
        detail=f"{len(x)} points, c_bar={pct.c_bar:.17g}",
    )


def _printed_x2(kind: ExtensionKind, x: np.ndarray) -> np.ndarray:
    """Rational parts of the three omega = a = 1, b = 3 potentials as printed."""
    if kind is ExtensionKind.X2_TYPE_I:
        d = 2 * x**2 + 16 * x - 3
        return 16 * (3 * x - 23) / (3 * d) + 280 * (8 * x - 3) / d**2
    if kind is ExtensionKind.X2_TYPE_II:
        d = 20 * x**2 - 32 * x + 15
        return 8 * (60 * x - 59) / (15 * d) - 88 * (16 * x - 15) / (5 * d**2)
    d = 20 * x**2 - 50 * x + 33
    return 2 * (30 * x - 13) / (3 * d) - 14 * (10 * x - 9) / d**2


def check_x2_printed_examples(
    tol: float = config.TOLERANCES["printed"], fault: Fault = Fault.NONE
) -> List[CheckReport]:
    """General X2 rational terms at omega = a = 1, b = 3 against the printed ones, absolute tolerance."""
    p = WellParams(1.0, 1.0, 3.0)
    x = p.interior(config.CHECK_POINTS)
    factor = _scale(fault, Fault.POTENTIAL)
    reports = []
    for kind in (ExtensionKind.X2_TYPE_I, ExtensionKind.X2_TYPE_II, ExtensionKind.X2_TYPE_III):
        printed = _printed_x2(kind, x)
        general = model.pdm_rational(p, x, kind) * factor
        reports.append(
            CheckReport(
                "x2_printed_example",
                kind,
                p,
                observed=float(np.max(np.abs(general - printed))),
                expected=0.0,
                tolerance=tol,
                rule="max",
                detail=f"{len(x)} points, max |V_rat|={float(np.max(np.abs(printed))):.6g}",
            )
        )
    return reports


def check_residuals(
    p: WellParams,
    kind: ExtensionKind,
    nmax: int = config.DEFAULT_NMAX,
    tol: float = config.TOLERANCES["residual"],
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Scaled residual of the analytic psi_n in the PDM equation."""
    kind = ExtensionKind(kind)
    rejected = _inadmissible("residual", p, kind)
    if rejected is not None:
        return [rejected]
    x = p.interior(config.RESIDUAL_POINTS, margin=0.01)
    v_factor = _scale(fault, Fault.POTENTIAL)
    e_factor = _scale(fault, Fault.ENERGY)
    reports = []
    for n in range(nmax + 1):
        value = eigensolver.residual(
            p,
            kind,
            n,
            x,
            potential=lambda t: v_factor * model.v_eff(p, t, kind),
            level=e_factor * analytic.energy(p, n),
        )
        reports.append(
            CheckReport("residual", kind, p, observed=value, expected=0.0, tolerance=tol, rule="max", detail=f"n={n}")
        )
    return reports


def check_normalization_consistency(
    p: WellParams,
    kind: ExtensionKind,
    nmax: int = config.DEFAULT_NMAX,
    tol: float = config.TOLERANCES["normalization"],
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    kind = ExtensionKind(kind)
    rejected = _inadmissible("normalization_consistency", p, kind)
    if rejected is not None:
        return [rejected]
    factor = _scale(fault, Fault.NORMALIZATION)
    reports = []
    for n in range(nmax + 1):
        expanded = analytic.pdm_norm_constant(p, n, kind)
        transferred = analytic.pdm_norm_transfer(p, n, kind) * factor
        reports.append(
            CheckReport(
                "normalization_consistency",
                kind,
                p,
                observed=abs(transferred - expanded) / expanded,
                expected=0.0,
                tolerance=tol,
                rule="max",
                detail=f"n={n}, N_n={expanded:.17g}",
            )
        )
    return reports


def check_x1_polynomials(
    s: ScarfParams,
    nmax: int = 8,
    tol_orthogonality: float = config.TOLERANCES["x1_orthogonality"],
    tol_residual: float = config.TOLERANCES["x1_residual"],
    params: Optional[WellParams] = None,
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Degree, pole-weighted orthogonality and ODE residual of q_0..q_nmax."""
    kind = ExtensionKind.X1
    alpha, beta = s.A - s.B - 0.5, s.A + s.B - 0.5
    label = f"A={s.A:.17g}, B={s.B:.17g}"
    polys = [x1_jacobi(n, alpha, beta) for n in range(nmax + 1)]
    if Fault(fault) is Fault.POLYNOMIAL:
        polys = [q * Polynomial([1.0, config.FAULT_FACTOR - 1.0]) for q in polys]
    reports = [
        CheckReport(
            "x1_degree", kind, params, observed=float(q.degree()), expected=float(n + 1), tolerance=0.0,
            detail=f"{label}, n={n}",
        )
        for n, q in enumerate(polys)
    ]

    u, w = gauss_legendre(config.QUADRATURE_NODES).mapped(-np.pi / 2, np.pi / 2)
    z = np.sin(u)
    weight = (1 - z) ** (s.A - s.B) * (1 + z) ** (s.A + s.B) / (2 * s.A - 1 - 2 * s.B * z) ** 2
    scale = np.array([x1_norm_constant(n, alpha, beta) for n in range(nmax + 1)])
    scale[0] *= _scale(fault, Fault.NORMALIZATION)
    values = np.array([c * q(z) for c, q in zip(scale, polys)])
    gram = (values * (w * weight)) @ values.T
    off = gram - np.diag(np.diag(gram))
    reports.append(
        CheckReport(
            "x1_orthogonality", kind, params, observed=float(np.max(np.abs(off))), expected=0.0,
            tolerance=tol_orthogonality, rule="max", detail=f"{label}, m != n <= {nmax}",
        )
    )
    reports.append(
        CheckReport(
            "x1_norm", kind, params, observed=float(np.max(np.abs(np.diag(gram) - 1.0))), expected=0.0,
            tolerance=tol_orthogonality, rule="max", detail=f"{label}, n <= {nmax}",
        )
    )

    points = np.sin(np.linspace(-np.pi / 2, np.pi / 2, config.RESIDUAL_POINTS + 2)[1:-1])
    for n, q in enumerate(polys):
        res = x1_ode_residual(q, n, alpha, beta, points)
        norm = x1_norm_constant(n, alpha, beta)
        phi = norm * (1 - points) ** ((s.A - s.B) / 2) * (1 + points) ** ((s.A + s.B) / 2)
        phi = phi / (2 * s.A - 1 - 2 * s.B * points) * q(points)
        scaled = float(np.max(np.abs(res)) / ((s.A + n) ** 2 * np.max(np.abs(phi))))
        reports.append(
            CheckReport(
                "x1_residual", kind, params, observed=scaled, expected=0.0, tolerance=tol_residual,
                rule="max", detail=f"{label}, n={n}",
            )
        )
    return reports


def check_isospectrality(
    p: WellParams,
    levels: int = config.DEFAULT_LEVELS,
    tol: float = config.TOLERANCES["spectrum"],
    grid: int = config.DEFAULT_GRID,
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Numeric X1 levels against numeric Base levels."""
    rejected = _inadmissible("isospectrality", p, ExtensionKind.X1)
    if rejected is not None:
        return [rejected]
    cfg = SolverConfig(grid=grid, levels=levels)
    base = eigensolver.solve(p, ExtensionKind.BASE, cfg).energies
    ext = eigensolver.solve(p, ExtensionKind.X1, cfg).energies * _scale(fault, Fault.ENERGY)
    return [
        CheckReport(
            "isospectrality",
            ExtensionKind.X1,
            p,
            observed=float(e_ext),
            expected=float(e_base),
            tolerance=tol * max(1.0, abs(e_base)),
            detail=f"level {i}",
        )
        for i, (e_base, e_ext) in enumerate(zip(base, ext))
    ]


def check_convergence(
    p: WellParams,
    kind: ExtensionKind,
    levels: int = config.DEFAULT_LEVELS,
    grid: int = config.DEFAULT_GRID // 4,
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Error reduction factor of the u-space solver when h is halved."""
    kind = ExtensionKind(kind)
    rejected = _inadmissible("convergence", p, kind)
    if rejected is not None:
        return [rejected]
    exact = analytic.spectrum(p, kind, levels).energies * _scale(fault, Fault.ENERGY)
    coarse = eigensolver.solve(p, kind, SolverConfig(grid=grid, levels=levels, richardson=False)).energies
    fine = eigensolver.solve(p, kind, SolverConfig(grid=2 * grid + 1, levels=levels, richardson=False)).energies
    reports = []
    for i, (e, c, f) in enumerate(zip(exact, coarse, fine)):
        err_c, err_f = abs(c - e), abs(f - e)
        ratio = err_c / err_f if err_f > 0 else math.inf
        reports.append(
            CheckReport(
                "convergence",
                kind,
                p,
                observed=min(ratio, 1e300),
                expected=config.CONVERGENCE_FACTOR,
                tolerance=0.0,
                rule="min",
                detail=f"level {i}, errors {err_c:.3e} -> {err_f:.3e}",
            )
        )
    return reports


def check_cross_space(
    p: WellParams,
    kind: ExtensionKind,
    levels: int = config.DEFAULT_LEVELS,
    grid: int = config.DEFAULT_GRID,
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """u-space and x-space routes agree within twice the larger error estimate."""
    kind = ExtensionKind(kind)
    rejected = _inadmissible("cross_space", p, kind)
    if rejected is not None:
        return [rejected]
    u_res = eigensolver.solve(p, kind, SolverConfig(grid=grid, levels=levels, space=Space.U))
    x_res = eigensolver.solve(p, kind, SolverConfig(grid=grid, levels=levels, space=Space.X))
    x_energies = x_res.energies * _scale(fault, Fault.ENERGY)
    reports = []
    for i in range(levels):
        est = max(u_res.estimated_error[i], x_res.estimated_error[i])
        reports.append(
            CheckReport(
                "cross_space",
                kind,
                p,
                observed=float(abs(u_res.energies[i] - x_energies[i])),
                expected=0.0,
                tolerance=float(2.0 * est),
                rule="max",
                detail=f"level {i}, u={u_res.energies[i]:.12g}, x={x_energies[i]:.12g}",
            )
        )
    return reports


def check_level_count(
    p: WellParams,
    kind: ExtensionKind,
    levels: int = config.DEFAULT_LEVELS,
    grid: int = config.DEFAULT_GRID,
    fault: Fault = Fault.NONE,
) -> List[CheckReport]:
    """Numeric levels below each midgap of the labelled spectrum."""
    kind = ExtensionKind(kind)
    rejected = _inadmissible("level_count", p, kind)
    if rejected is not None:
        return [rejected]
    energies = analytic.spectrum(p, kind, levels + 1).energies
    cfg = SolverConfig(grid=grid, levels=1)
    reports = []
    for k in range(levels):
        threshold = 0.5 * (energies[k] + energies[k + 1])
        count = eigensolver.count_levels_below(p, kind, threshold, cfg) + _miscount(fault)
        reports.append(
            CheckReport(
                "level_count",
                kind,
                p,
                observed=float(count),
                expected=float(k + 1),
                tolerance=0.0,
                detail=f"below {threshold:.12g}",
            )
        )
    return reports


# ----------------------------------------------------------------------
# Aggregate report
# ----------------------------------------------------------------------
def _guarded(name: str, kind: Optional[ExtensionKind], p: WellParams, func: Callable[[], object]) -> List[CheckReport]:
    try:
        out = func()
    except PdmWellError as exc:
        logger.warning("Check %s (%s) raised: %s", name, kind, exc)
        return [CheckReport(name, kind, p, observed=None, expected=0.0, tolerance=0.0, detail=str(exc))]
    return out if isinstance(out, list) else [out]


def _tasks(p: WellParams, options: ReportOptions) -> List[tuple]:
    tol = options.tolerances
    fault = options.fault
    kinds = [k for k in ExtensionKind if not model.validate(p, k)]
    tasks = []
    for kind in kinds:
        tasks.append(("pct", kind, lambda k=kind: check_pct(p, k, tol["pct"], fault)))
        spec_tol = tol["spectrum_x2" if kind.is_x2 else "spectrum"]
        tasks.append(
            ("spectrum", kind, lambda k=kind, t=spec_tol: check_spectrum(p, k, options.levels, t, options.grid, fault))
        )
        tasks.append(("level_count", kind, lambda k=kind: check_level_count(p, k, options.levels, options.grid, fault)))
        tasks.append(
            ("convergence", kind, lambda k=kind: check_convergence(p, k, options.levels, options.grid // 4, fault))
        )
        tasks.append(("cross_space", kind, lambda k=kind: check_cross_space(p, k, options.levels, options.grid, fault)))
        if kind.has_closed_form:
            tasks.append(
                (
                    "orthonormality",
                    kind,
                    lambda k=kind: check_orthonormality(p, k, options.nmax, tol["orthonormality"], fault),
                )
            )
            tasks.append(("residual", kind, lambda k=kind: check_residuals(p, k, options.nmax, tol["residual"], fault)))
            tasks.append(
                (
                    "normalization_consistency",
                    kind,
                    lambda k=kind: check_normalization_consistency(p, k, options.nmax, tol["normalization"], fault),
                )
            )
    if ExtensionKind.X1 in kinds:
        tasks.append(
            (
                "isospectrality",
                ExtensionKind.X1,
                lambda: check_isospectrality(p, options.levels, tol["spectrum"], options.grid, fault),
            )
        )
        tasks.append(
            (
                "x1_polynomials",
                ExtensionKind.X1,
                lambda: check_x1_polynomials(
                    model.scarf_params(p), options.x1_nmax, tol["x1_orthogonality"], tol["x1_residual"], p, fault
                ),
            )
        )
    tasks.append(("x2_printed_example", None, lambda: check_x2_printed_examples(tol["printed"], fault)))
    return tasks


def full_report(p: WellParams, options: ReportOptions = ReportOptions()) -> dict:
    """Run every applicable check and return a JSON-serialisable report.

    When the base condition fails only validation reports are produced.
    Kinds whose own constraints fail are listed under ``skipped``.
    """
    violations = {kind: model.validate(p, kind) for kind in ExtensionKind}
    validation = [check_validation(p, kind, options.fault) for kind in ExtensionKind]
    base_ok = not violations[ExtensionKind.BASE]
    skipped = [{"kind": kind.value, "violations": v} for kind, v in violations.items() if v]

    if not base_ok:
        checks = validation
    else:
        tasks = _tasks(p, options)

        def run(task: tuple) -> List[CheckReport]:
            return _guarded(task[0], task[1], p, task[2])

        if options.workers > 1:
            with ThreadPoolExecutor(max_workers=options.workers) as pool:
                batches = list(pool.map(run, tasks))
        else:
            batches = [run(task) for task in tasks]
        checks = [r for r in validation if not violations[r.kind]] + [r for batch in batches for r in batch]

    failed = [r for r in checks if not r.passed]
    for r in failed:
        logger.warning("Check failed: %s (%s) %s", r.check_name, r.kind.value if r.kind else "-", r.detail)
    return {
        "version": config.REPORT_VERSION,
        "params": p.to_dict(),
        "config": options.to_dict(),
        "checks": [r.to_dict() for r in checks],
        "skipped": skipped if base_ok else [],
        "summary": {
            "total": len(checks),
            "passed": len(checks) - len(failed),
            "failed": len(failed),
            "all_passed": not failed,
        },
    }
