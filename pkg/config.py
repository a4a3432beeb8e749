"""Central configuration constants for the PDM quantum-well toolkit.
Keeping all tweakable parameters in one place improves maintainability
and avoids scattering magic numbers throughout the codebase.
"""

# -----------------------------
# Physical defaults (the running example: omega = a = 1, b = 3)
# -----------------------------
DEFAULT_OMEGA: float = 1.0
DEFAULT_A: float = 1.0
DEFAULT_B: float = 3.0

# CLI spelling -> ExtensionKind value
KIND_NAMES = {
    "base": "base",
    "x1": "x1",
    "x2-i": "x2_type_i",
    "x2-ii": "x2_type_ii",
    "x2-iii": "x2_type_iii",
}

# -----------------------------
# Special functions
# -----------------------------
MAX_JACOBI_DEGREE: int = 200
MAX_QUADRATURE_NODES: int = 10**4
NEWTON_MAX_ITER: int = 100
NULLSPACE_TOL: float = 1e-10  # relative to the largest singular value
TRIM_TOL: float = 1e-12  # relative to max |coeff|

# -----------------------------
# Quadrature / sampling
# -----------------------------
QUADRATURE_NODES: int = 1000
WALL_MARGIN: float = 1e-3  # fraction of (b - a) kept away from each wall
CHECK_POINTS: int = 1000
RESIDUAL_POINTS: int = 50
NODE_SCAN_POINTS: int = 10**4

# -----------------------------
# Eigensolver
# -----------------------------
DEFAULT_GRID: int = 2048
DEFAULT_LEVELS: int = 6
DEFAULT_NMAX: int = 5
MIN_GRID: int = 64
POINTS_PER_LEVEL: int = 8
STEBZ_TOL_FACTOR: float = 1e-13  # times the infinity norm of the matrix
CONVERGENCE_FACTOR: float = 3.5  # minimum error ratio per grid doubling

# -----------------------------
# Verification
# -----------------------------
REPORT_VERSION: str = "1.0"

TOLERANCES = {
    "spectrum": 1e-5,  # relative
    "spectrum_x2": 1e-4,  # relative
    "orthonormality": 1e-8,
    "pct": 1e-11,  # relative to max(1, |v_eff|)
    "printed": 1e-12,
    "residual": 1e-8,
    "normalization": 1e-12,
    "x1_orthogonality": 1e-9,
    "x1_residual": 1e-8,
}

FAULT_FACTOR: float = 1.01  # the 1 % corruption used by fault injection

# -----------------------------
# Output
# -----------------------------
DEFAULT_SAMPLES: int = 600
DEFAULT_KIND: str = "x1"  # the figures show the X1-extended well
FIGURE_NMAX: int = 2
FLOAT_FORMAT: str = "%.17g"
RATIONAL_MAX_DENOMINATOR: int = 48
RATIONAL_TOL: float = 1e-12

SUPPORTED_FORMATS = {
    "csv": "CSV",
    "json": "JSON",
    "svg": "SVG",
    "text": "Text table",
}

CURVE_ONLY_FORMATS = {"svg"}

# -----------------------------
# Plotting defaults
# -----------------------------
COLOR_PALETTES = {
    "Print": ["black", "red", "green", "blue", "magenta", "orange"],
    "Professional": [
        "#1f77b4",
        "#ff7f0e",
        "#2ca02c",
        "#d62728",
        "#9467bd",
        "#8c564b",
        "#e377c2",
        "#7f7f7f",
        "#bcbd22",
        "#17becf",
    ],
}

DEFAULT_PLOT_CONFIG = {
    "palette": "Print",
    "width": 800,  # px
    "height": 600,  # px
    "dpi": 100,
    "font_size": 12,
    "line_width": 1.5,
    "ticks": 5,
    "show_grid": True,
}
