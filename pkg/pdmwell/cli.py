"""Command-line front end: potential and wavefunction curves, spectra, verification.

Exit codes: 0 success, 1 failed checks or numerical failure, 2 invalid
parameters or constraint violations.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

import config
from . import analytic, eigensolver, model, verification
from .eigensolver import SolverConfig
from .exceptions import ParameterError, PdmWellError
from .file_handler import OutputSpec, OutputWriter
from .model import ExtensionKind, WellParams
from .plot import create_plot

__all__ = ["main", "build_parser", "cmd_potential", "cmd_wavefunctions", "cmd_spectrum", "cmd_verify"]

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

_DEFAULT_FORMATS = {"potential": "csv", "wavefunctions": "csv", "spectrum": "text", "verify": "json"}


def rational_label(value: float) -> str:
    """Decimal form, followed by the nearest simple fraction when it matches."""
    text = f"{value:.12g}"
    frac = Fraction(value).limit_denominator(config.RATIONAL_MAX_DENOMINATOR)
    if frac.denominator > 1 and abs(float(frac) - value) <= config.RATIONAL_TOL * max(1.0, abs(value)):
        text += f" ({frac})"
    return text


def _report_violations(kind: ExtensionKind, violations: List[str]) -> int:
    print(f"error: parameters not admissible for {kind.cli_name}:", file=sys.stderr)
    for name in violations:
        print(f"  violated: {name}", file=sys.stderr)
    return EXIT_INVALID


def _emit(payload, output: OutputSpec, produces_curves: bool) -> int:
    writer = OutputWriter()
    ok, message = writer.validate_format(output, produces_curves)
    if not ok:
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INVALID
    ok, message = writer.write(payload, output)
    if not ok:
        print(f"error: {message}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _curves(df: pd.DataFrame, output: OutputSpec, title: str, y_title: str, meta: dict):
    """Payload for a curve table in the requested format."""
    if output.format == "svg":
        columns = [c for c in df.columns if c != "x"]
        return create_plot("line", df, "x", columns, {"title": title, "y_title": y_title})
    if output.format == "json":
        return {**meta, "columns": {c: df[c].tolist() for c in df.columns}}
    return df


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
def cmd_potential(params: WellParams, kind: ExtensionKind, output: OutputSpec) -> int:
    """Sample V_eff of *kind* on (a + eps, b - eps)."""
    violations = model.validate(params, kind)
    if violations:
        return _report_violations(kind, violations)
    x = params.interior(output.samples)
    df = pd.DataFrame({"x": x, "V": model.v_eff(params, x, kind)})
    x_min = model.minimum_location(params, kind)
    logger.info("V_eff minimum at x=%.12g (base closed form %.12g)", x_min, model.base_minimum(params))
    meta = {"params": params.to_dict(), "kind": kind.value, "minimum": x_min}
    payload = _curves(df, output, f"V_eff ({kind.cli_name})", "V_eff(x)", meta)
    return _emit(payload, output, produces_curves=True)


def cmd_wavefunctions(params: WellParams, kind: ExtensionKind, nmax: int, output: OutputSpec) -> int:
    """Sample psi_0 .. psi_nmax of *kind* on (a + eps, b - eps)."""
    if not kind.has_closed_form:
        print(f"error: no closed-form wavefunctions for {kind.cli_name}; use base or x1", file=sys.stderr)
        return EXIT_INVALID
    violations = model.validate(params, kind)
    if violations:
        return _report_violations(kind, violations)
    if nmax < 0:
        print(f"error: --nmax must be non-negative, got {nmax}", file=sys.stderr)
        return EXIT_INVALID
    x = params.interior(output.samples)
    columns = {"x": x}
    for n in range(nmax + 1):
        columns[f"psi{n}"] = analytic.pdm_wavefunction(params, n, x, kind).value
    df = pd.DataFrame(columns)
    meta = {
        "params": params.to_dict(),
        "kind": kind.value,
        "nodes": [analytic.node_count(df[f"psi{n}"]) for n in range(nmax + 1)],
    }
    payload = _curves(df, output, f"Wavefunctions ({kind.cli_name})", "psi_n(x)", meta)
    return _emit(payload, output, produces_curves=True)


def cmd_spectrum(
    params: WellParams,
    kind: ExtensionKind,
    count: int,
    output: OutputSpec,
    numeric: bool = False,
    grid: int = config.DEFAULT_GRID,
) -> int:
    """Closed-form levels, optionally next to Richardson-extrapolated solver levels."""
    violations = model.validate(params, kind)
    if violations:
        return _report_violations(kind, violations)
    if count < 1:
        print(f"error: --count must be positive, got {count}", file=sys.stderr)
        return EXIT_INVALID
    result = analytic.spectrum(params, kind, count)
    df = result.to_frame()
    if numeric:
        solved = eigensolver.solve(params, kind, SolverConfig(grid=grid, levels=count))
        df["numeric"] = solved.energies
        df["deviation"] = np.abs(solved.energies - df["energy"]) / np.maximum(1.0, np.abs(df["energy"]))
        df["estimated_error"] = solved.estimated_error
    df = df.sort_values("energy", kind="stable").reset_index(drop=True)

    if output.format == "text":
        shown = df.copy()
        shown["energy"] = [rational_label(e) for e in df["energy"]]
        if numeric:
            shown["numeric"] = [f"{e:.12g}" for e in df["numeric"]]
            shown["deviation"] = [f"{d:.3e}" for d in df["deviation"]]
            shown["estimated_error"] = [f"{d:.3e}" for d in df["estimated_error"]]
        payload = shown
    elif output.format == "json":
        payload = {"params": params.to_dict(), "kind": kind.value, "levels": df.to_dict(orient="records")}
    else:
        payload = df
    return _emit(payload, output, produces_curves=False)


def cmd_verify(params: WellParams, output: OutputSpec, options: verification.ReportOptions) -> int:
    """Run the full verification report; exit 0 iff every check passes."""
    ok, message = OutputWriter().validate_format(output, produces_curves=False)
    if not ok:
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INVALID
    report = verification.full_report(params, options)
    summary = report["summary"]
    print(
        f"{summary['total']} checks: {summary['passed']} passed, {summary['failed']} failed",
        file=sys.stderr,
    )
    if output.format == "text":
        payload = pd.DataFrame(report["checks"])[
            ["check_name", "kind", "status", "observed", "expected", "tolerance", "detail"]
        ]
    else:
        payload = report
    status = _emit(payload, output, produces_curves=False)
    if status != EXIT_OK:
        return status

    base = model.validate(params, ExtensionKind.BASE)
    if base:
        return _report_violations(ExtensionKind.BASE, base)
    for failed in (c for c in report["checks"] if c["status"] != "pass"):
        print(f"  FAIL {failed['check_name']} [{failed['kind']}] {failed['detail']}", file=sys.stderr)
    return EXIT_OK if summary["all_passed"] else EXIT_FAILED


# ----------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------
def _kind(name: str) -> ExtensionKind:
    try:
        return ExtensionKind.from_cli(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--omega", type=float, default=config.DEFAULT_OMEGA, help="oscillator frequency")
    common.add_argument("--a", type=float, default=config.DEFAULT_A, help="left wall")
    common.add_argument("--b", type=float, default=config.DEFAULT_B, help="right wall")
    common.add_argument(
        "--kind", type=_kind, default=config.DEFAULT_KIND, help=f"one of {', '.join(config.KIND_NAMES)}"
    )
    common.add_argument("--format", choices=sorted(config.SUPPORTED_FORMATS), default=None)
    common.add_argument("--out", default=None, help="output file (default: standard output)")
    common.add_argument("--samples", type=int, default=config.DEFAULT_SAMPLES, help="points per curve")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")

    parser = argparse.ArgumentParser(
        prog="pdmwell", description="PDM oscillator-shaped quantum well and its rational extensions"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("potential", parents=[common], help="sample the effective potential")

    wf = sub.add_parser("wavefunctions", parents=[common], help="sample analytic wavefunctions")
    wf.add_argument("--nmax", type=int, default=config.FIGURE_NMAX)

    sp = sub.add_parser("spectrum", parents=[common], help="closed-form (and numeric) energy levels")
    sp.add_argument("--count", type=int, default=config.DEFAULT_LEVELS)
    sp.add_argument("--numeric", action="store_true", help="add eigensolver levels and deviations")
    sp.add_argument("--grid", type=int, default=config.DEFAULT_GRID)

    vf = sub.add_parser("verify", parents=[common], help="run every check and emit a JSON report")
    vf.add_argument("--grid", type=int, default=config.DEFAULT_GRID)
    vf.add_argument("--nmax", type=int, default=config.DEFAULT_NMAX)
    vf.add_argument("--levels", type=int, default=config.DEFAULT_LEVELS)
    vf.add_argument("--workers", type=int, default=1)
    vf.add_argument(
        "--inject-fault",
        dest="fault",
        choices=[f.value for f in verification.Fault],
        default=verification.Fault.NONE.value,
    )
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    params = WellParams(args.omega, args.a, args.b)
    output = OutputSpec(args.format or _DEFAULT_FORMATS[args.command], args.out, args.samples)
    handlers: Dict[str, Callable[[], int]] = {
        "potential": lambda: cmd_potential(params, args.kind, output),
        "wavefunctions": lambda: cmd_wavefunctions(params, args.kind, args.nmax, output),
        "spectrum": lambda: cmd_spectrum(params, args.kind, args.count, output, args.numeric, args.grid),
        "verify": lambda: cmd_verify(
            params,
            output,
            verification.ReportOptions(
                grid=args.grid,
                levels=args.levels,
                nmax=args.nmax,
                fault=verification.Fault(args.fault),
                workers=args.workers,
            ),
        ),
    }
    return handlers[args.command]()


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _dispatch(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for name in exc.violations:
            print(f"  violated: {name}", file=sys.stderr)
        return EXIT_INVALID
    except PdmWellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
