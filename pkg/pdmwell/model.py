"""Closed-form potentials, mass profile and point canonical transformation.

Units are hbar = 2 m_0 = 1. The PDM well lives on the open interval
(a, b); the constant-mass Scarf I problem lives on (-pi/2, pi/2) and the
two are linked by sin u = -(2x - a - b)/(b - a).

Every function accepting a position or an angle broadcasts over numpy
arrays. Walls are poles, never clamped: callers must stay strictly inside.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize

import config
from .exceptions import DomainError, ParameterError, SingularExtensionError

__all__ = [
    "ExtensionKind",
    "WellParams",
    "ScarfParams",
    "PctMap",
    "BASE_CONDITION",
    "mass",
    "inverse_mass",
    "mass_derivative",
    "mass_term",
    "v_eff",
    "pdm_rational",
    "pct_map",
    "u_of_x",
    "x_of_u",
    "scarf_params",
    "jacobi_indices",
    "scarf_potential",
    "scarf_rational",
    "potential_from_pct",
    "validate",
    "validate_scarf",
    "index_set",
    "denominator",
    "denominator_roots",
    "base_minimum",
    "minimum_location",
]

logger = logging.getLogger(__name__)

BASE_CONDITION = "2·omega·a²·b > b−a"
TYPE_I_CONDITION = "omega·a·b > 2"
TYPE_II_III_CONDITION = "omega·a·b > (b−a)/a"


class ExtensionKind(str, Enum):
    """Which member of the potential family is meant."""

    BASE = "base"
    X1 = "x1"
    X2_TYPE_I = "x2_type_i"
    X2_TYPE_II = "x2_type_ii"
    X2_TYPE_III = "x2_type_iii"

    @property
    def is_x2(self) -> bool:
        return self in (ExtensionKind.X2_TYPE_I, ExtensionKind.X2_TYPE_II, ExtensionKind.X2_TYPE_III)

    @property
    def has_closed_form(self) -> bool:
        """True when analytic wavefunctions are available."""
        return self in (ExtensionKind.BASE, ExtensionKind.X1)

    @classmethod
    def from_cli(cls, name: str) -> "ExtensionKind":
        try:
            return cls(config.KIND_NAMES[name.lower()])
        except KeyError as exc:
            raise ValueError(f"Unsupported kind: {name}") from exc

    @property
    def cli_name(self) -> str:
        return next(k for k, v in config.KIND_NAMES.items() if v == self.value)


@dataclass(frozen=True)
class WellParams:
    """omega, a, b of the oscillator-shaped PDM well."""

    omega: float
    a: float
    b: float

    def __post_init__(self):
        violations = []
        if not self.omega > 0:
            violations.append("omega > 0")
        if not self.a > 0:
            violations.append("a > 0")
        if not self.b > self.a:
            violations.append("b > a")
        if violations:
            raise ParameterError(
                f"Invalid well parameters omega={self.omega}, a={self.a}, b={self.b}", violations
            )

    @property
    def g(self) -> float:
        """The recurring combination omega*a*b."""
        return self.omega * self.a * self.b

    @property
    def width(self) -> float:
        return self.b - self.a

    def interior(self, count: int, margin: float = config.WALL_MARGIN) -> np.ndarray:
        """count equally spaced points on (a + eps, b - eps), eps = margin*(b - a)."""
        eps = margin * self.width
        return np.linspace(self.a + eps, self.b - eps, count)

    def to_dict(self) -> dict:
        return {"omega": self.omega, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class ScarfParams:
    """A, B of the constant-mass Scarf I potential."""

    A: float
    B: float


@dataclass(frozen=True)
class PctMap:
    """Constants of the point canonical transformation."""

    a_bar: float
    b_bar: float
    c_bar: float
    lam: float


# ----------------------------------------------------------------------
# Domain helpers
# ----------------------------------------------------------------------
def _inside(p: WellParams, x: ArrayLike) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(~((x > p.a) & (x < p.b))):
        raise DomainError(f"Position outside the open interval ({p.a}, {p.b})")
    return x


def _inside_angle(u: ArrayLike) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if np.any(~(np.abs(u) < np.pi / 2)):
        raise DomainError("Angle outside the open interval (-pi/2, pi/2)")
    return u


def _out(value: np.ndarray):
    return float(value) if np.ndim(value) == 0 else value


# ----------------------------------------------------------------------
# Mass profile
# ----------------------------------------------------------------------
def mass(p: WellParams, x: ArrayLike):
    x = _inside(p, x)
    return _out(p.a * p.b / ((x - p.a) * (p.b - x)))


def inverse_mass(p: WellParams, x: ArrayLike):
    """1/M(x); vanishes at the walls, so the closed interval is accepted."""
    x = np.asarray(x, dtype=float)
    if np.any((x < p.a) | (x > p.b)):
        raise DomainError(f"Position outside the closed interval [{p.a}, {p.b}]")
    return _out((x - p.a) * (p.b - x) / (p.a * p.b))


def mass_derivative(p: WellParams, x: ArrayLike):
    x = _inside(p, x)
    g = (x - p.a) * (p.b - x)
    return _out(-p.a * p.b * (p.a + p.b - 2 * x) / g**2)


def mass_term(p: WellParams, x: ArrayLike):
    """M''/(4M^2) - 7M'^2/(16M^3) in closed form."""
    x = _inside(p, x)
    return _out((1.0 + p.width**2 / (4 * (x - p.a) * (p.b - x))) / (4 * p.a * p.b))


# ----------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------
def validate(p: WellParams, kind: ExtensionKind) -> List[str]:
    """Names of every inequality that fails for (p, kind); empty when admissible."""
    kind = ExtensionKind(kind)
    violations: List[str] = []
    if not 2 * p.omega * p.a**2 * p.b > p.width:
        violations.append(BASE_CONDITION)
    if kind is ExtensionKind.X2_TYPE_I and not p.g > 2:
        violations.append(TYPE_I_CONDITION)
    if kind in (ExtensionKind.X2_TYPE_II, ExtensionKind.X2_TYPE_III) and not p.g > p.width / p.a:
        violations.append(TYPE_II_III_CONDITION)
    return violations


def validate_scarf(s: ScarfParams, kind: ExtensionKind) -> List[str]:
    """u-space counterpart of :func:`validate`."""
    kind = ExtensionKind(kind)
    A, B = s.A, s.B
    if kind is ExtensionKind.X2_TYPE_I:
        return [] if 1 < B < A - 1 else ["1 < B < A − 1"]
    if kind in (ExtensionKind.X2_TYPE_II, ExtensionKind.X2_TYPE_III):
        return [] if 0 < B < A - 1.5 else ["0 < B < A − 3/2"]
    return [] if 0 < B < A - 1 else ["0 < B < A − 1"]


def _require(p: WellParams, kind: ExtensionKind) -> None:
    violations = validate(p, kind)
    if violations:
        logger.warning("Constraint violation for %s at %s: %s", kind.value, p, violations)
        raise ParameterError(f"Parameters not admissible for {kind.value}: {', '.join(violations)}", violations)


def index_set(kind: ExtensionKind, count: int) -> List[int]:
    """Quantum-number labels of the first *count* levels."""
    if count <= 0:
        return []
    if ExtensionKind(kind) is ExtensionKind.X2_TYPE_III:
        return [-2] + list(range(1, count))
    return list(range(count))


# ----------------------------------------------------------------------
# PCT constants and variable change
# ----------------------------------------------------------------------
def pct_map(p: WellParams) -> PctMap:
    ab = p.a * p.b
    return PctMap(
        a_bar=-1.0 / np.sqrt(ab),
        b_bar=0.0,
        c_bar=-(p.omega**2) * ab / 4.0 - 1.0 / (4.0 * ab),
        lam=ab**-0.25,
    )


def u_of_x(p: WellParams, x: ArrayLike):
    x = _inside(p, x)
    return _out(-np.arcsin((2 * x - p.a - p.b) / p.width))


def x_of_u(p: WellParams, u: ArrayLike):
    u = _inside_angle(u)
    return _out(0.5 * (p.a + p.b) - 0.5 * p.width * np.sin(u))


def scarf_params(p: WellParams) -> ScarfParams:
    if not 2 * p.omega * p.a**2 * p.b > p.width:
        raise ParameterError(f"Scarf I parameters undefined: {BASE_CONDITION} fails", [BASE_CONDITION])
    A = 0.5 * (p.g / p.width * (p.a + p.b) + 1.0)
    B = 0.5 * p.g
    return ScarfParams(A, B)


def jacobi_indices(p: WellParams) -> Tuple[float, float]:
    """(alpha, beta) = (A - B - 1/2, A + B - 1/2) of the u-space Jacobi polynomials."""
    return p.omega * p.a**2 * p.b / p.width, p.omega * p.a * p.b**2 / p.width


# ----------------------------------------------------------------------
# x-space potentials
# ----------------------------------------------------------------------
def _x2_terms_x(p: WellParams, x: np.ndarray, kind: ExtensionKind):
    """(N1, N2, D) of the x-space X2 rational term, as printed per type."""
    w, a, b, g, ba = p.omega, p.a, p.b, p.g, p.width
    a3b3 = w**2 * a**3 * b**3
    if kind is ExtensionKind.X2_TYPE_I:
        n1 = 8 / (a * b * ba**2) * (
            g * (g - 1) * (g - 2) * ((a + b) * x - 2 * a * b) - g**2 * (a + b) ** 2 - (g - 2) * ba**2
        )
        n2 = 128 * w / ba**4 * (g - 2) * (a3b3 + (g - 1) * ba**2) * ((a + b) * (g - 1) * x - a * b * (g - 2))
        d = 4 / ba**2 * ((g - 1) * ((g - 2) * x + 2 * a) * ((g - 2) * x + 2 * b) - a3b3)
    elif kind is ExtensionKind.X2_TYPE_II:
        n1 = 8 / (a * b * ba**2) * (
            g * (g + 1) * (g + 2) * ((a + b) * x - 2 * a * b) + g**2 * (a + b) ** 2 - ba**2 * (g + 2)
        )
        n2 = 128 * w / ba**4 * (g + 2) * (a3b3 - (g + 1) * ba**2) * (-(a + b) * (g + 1) * x + a * b * (g + 2))
        d = 4 / ba**2 * ((g + 1) * ((g + 2) * x - 2 * a) * ((g + 2) * x - 2 * b) + a3b3)
    else:
        p1 = g * (a + b) - ba
        p2 = g * (a + b) - 2 * ba
        n1 = -8 / (a * b * ba**3) * (-g * p1 * p2 * x + p2 * ba**2 + g**2 * ba**3)
        n2 = 128 * w / ba**5 * p2 * (a3b3 - ba * p1) * (-p1 * x + w * a**2 * b**2)
        d = 4 / ba**5 * (
            p1 * (p2 * x - 2 * w * a**2 * b**2 + 2 * a * ba) * (p2 * x - 2 * w * a**2 * b**2 + 2 * b * ba)
            + a3b3 * ba**3
        )
    return n1, n2, d


def _quadratic_roots_inside(func: Callable[[np.ndarray], np.ndarray], lo: float, hi: float) -> np.ndarray:
    """Real roots in (lo, hi) of a quadratic known only through evaluation."""
    samples = np.array([lo, 0.5 * (lo + hi), hi])
    coeffs = np.polynomial.polynomial.polyfit(samples, func(samples), 2)
    roots = np.polynomial.polynomial.polyroots(np.trim_zeros(coeffs, "b") if np.any(coeffs) else coeffs)
    roots = roots[np.abs(roots.imag) < 1e-12].real
    return roots[(roots > lo) & (roots < hi)]


def denominator(p: WellParams, x: ArrayLike, kind: ExtensionKind):
    """D(x) of an X2 rational term; no admissibility check."""
    kind = ExtensionKind(kind)
    if not kind.is_x2:
        raise ValueError(f"No X2 denominator for {kind.value}")
    return _out(_x2_terms_x(p, _inside(p, x), kind)[2])


def denominator_roots(p: WellParams, kind: ExtensionKind) -> np.ndarray:
    """Zeros of the X2 denominator D(x) inside (a, b); empty for admissible params."""
    kind = ExtensionKind(kind)
    if not kind.is_x2:
        return np.empty(0)
    return _quadratic_roots_inside(lambda x: _x2_terms_x(p, x, kind)[2], p.a, p.b)


def pdm_rational(p: WellParams, x: ArrayLike, kind: ExtensionKind):
    """Rational correction V_eff,rat(x) of an extended well (zero for BASE)."""
    kind = ExtensionKind(kind)
    x = _inside(p, x)
    _require(p, kind)
    if kind is ExtensionKind.BASE:
        return _out(np.zeros_like(x))
    if kind is ExtensionKind.X1:
        return _out(((p.a + p.b) * x - 2 * p.a * p.b) / (p.a * p.b * x**2))
    roots = denominator_roots(p, kind)
    if roots.size:
        raise SingularExtensionError(f"D(x) vanishes inside ({p.a}, {p.b}) at {roots.tolist()}")
    n1, n2, d = _x2_terms_x(p, x, kind)
    return _out(n1 / d + n2 / d**2)


def v_eff(p: WellParams, x: ArrayLike, kind: ExtensionKind = ExtensionKind.BASE):
    """Total effective potential for *kind*."""
    kind = ExtensionKind(kind)
    x = _inside(p, x)
    _require(p, kind)
    base = p.a * p.b * p.omega**2 * x**2 / (4 * (x - p.a) * (p.b - x))
    if kind is ExtensionKind.BASE:
        return _out(base)
    return _out(base + pdm_rational(p, x, kind))


def base_minimum(p: WellParams) -> float:
    """Location 2ab/(a+b) of the base-well minimum."""
    return 2 * p.a * p.b / (p.a + p.b)


def minimum_location(p: WellParams, kind: ExtensionKind = ExtensionKind.BASE) -> float:
    """Numeric minimiser of v_eff on (a, b)."""
    eps = config.WALL_MARGIN * p.width
    res = optimize.minimize_scalar(
        lambda x: v_eff(p, x, kind),
        bounds=(p.a + eps, p.b - eps),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(res.x)


# ----------------------------------------------------------------------
# u-space potentials
# ----------------------------------------------------------------------
def _x2_terms_u(s: ScarfParams, sin_u: np.ndarray, kind: ExtensionKind):
    """(N1, N2, D) of the u-space X2 rational term, as printed per type."""
    A, B, z = s.A, s.B, sin_u
    if kind is ExtensionKind.X2_TYPE_I:
        n1 = -4 * ((2 * A - 1) * (2 * B - 1) * (2 * B - 2) * z + 2 * (2 * A - 1) ** 2 - (2 * B - 2) ** 2 * (2 * B + 1))
        n2 = (
            -8 * (2 * B - 2) * (2 * A - 2 * B + 1) * (2 * A + 2 * B - 3)
            * (2 * (2 * A - 1) * (2 * B - 1) * z - (2 * A - 1) ** 2 - 2 * B * (2 * B - 2))
        )
        d = (2 * B - 1) * ((2 * B - 2) * z - (2 * A - 1)) ** 2 - (2 * A - 2 * B + 1) * (2 * A + 2 * B - 3)
    elif kind is ExtensionKind.X2_TYPE_II:
        n1 = -4 * ((2 * A - 1) * (2 * B + 1) * (2 * B + 2) * z - 2 * (2 * A - 1) ** 2 - (2 * B + 2) ** 2 * (2 * B - 1))
        n2 = (
            8 * (2 * B + 2) * (2 * A - 2 * B - 3) * (2 * A + 2 * B + 1)
            * (2 * (2 * A - 1) * (2 * B + 1) * z - (2 * A - 1) ** 2 - 2 * B * (2 * B + 2))
        )
        d = (2 * B + 1) * ((2 * B + 2) * z - (2 * A - 1)) ** 2 + (2 * A - 2 * B - 3) * (2 * A + 2 * B + 1)
    else:
        n1 = -8 * (B * (2 * A - 2) * (2 * A - 3) * z - A * (2 * A - 3) ** 2 + 4 * B**2)
        n2 = (
            8 * (2 * A - 3) * (2 * A - 2 * B - 3) * (2 * A + 2 * B - 3)
            * (4 * B * (2 * A - 2) * z - 4 * B**2 - (2 * A - 1) * (2 * A - 3))
        )
        d = (2 * A - 2) * ((2 * A - 3) * z - 2 * B) ** 2 + (2 * A - 2 * B - 3) * (2 * A + 2 * B - 3)
    return n1, n2, d


def scarf_rational(s: ScarfParams, u: ArrayLike, kind: ExtensionKind):
    """U_rat(u) of the extended Scarf I potential (zero for BASE)."""
    kind = ExtensionKind(kind)
    u = _inside_angle(u)
    z = np.sin(u)
    if kind is ExtensionKind.BASE:
        return _out(np.zeros_like(u))
    if kind is ExtensionKind.X1:
        lin = 2 * s.A - 1 - 2 * s.B * z
        return _out(2 * (2 * s.A - 1) / lin - 2 * ((2 * s.A - 1) ** 2 - 4 * s.B**2) / lin**2)
    roots = _quadratic_roots_inside(lambda t: _x2_terms_u(s, t, kind)[2], -1.0, 1.0)
    if roots.size:
        raise SingularExtensionError(f"D(u) vanishes at sin u = {roots.tolist()}")
    n1, n2, d = _x2_terms_u(s, z, kind)
    return _out(n1 / d + n2 / d**2)


def scarf_potential(s: ScarfParams, u: ArrayLike, kind: ExtensionKind = ExtensionKind.BASE):
    """U(u) + U_rat(u) for *kind*."""
    kind = ExtensionKind(kind)
    u = _inside_angle(u)
    violations = validate_scarf(s, kind)
    if violations:
        raise ParameterError(f"Scarf parameters not admissible for {kind.value}: {violations}", violations)
    sec = 1.0 / np.cos(u)
    base = (s.A**2 + s.B**2 - s.A) * sec**2 - s.B * (2 * s.A - 1) * np.tan(u) * sec
    if kind is ExtensionKind.BASE:
        return _out(base)
    return _out(base + scarf_rational(s, u, kind))


def potential_from_pct(
    p: WellParams,
    kind: ExtensionKind,
    x: ArrayLike,
    pct: Optional[PctMap] = None,
):
    """a_bar^2 U(u(x)) + mass term + c_bar, assembled through the PCT."""
    kind = ExtensionKind(kind)
    x = _inside(p, x)
    _require(p, kind)
    pct = pct or pct_map(p)
    u = u_of_x(p, x)
    return _out(pct.a_bar**2 * scarf_potential(scarf_params(p), u, kind) + mass_term(p, x) + pct.c_bar)
