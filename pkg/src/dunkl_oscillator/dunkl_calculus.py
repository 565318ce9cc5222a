"""Reflection-difference (Dunkl) calculus on evaluable plane fields.

Fields are carried as exact evaluation rules, never as sampled grids, so
the reflection parts of every operator are applied exactly and only the
genuine derivatives are discretized (second-order central differences of
step ``h``). That isolates all discretization error to O(h^2), which the
test suite checks by Richardson-style step halving.

Conventions
-----------
* ``D_x = d/dx + (mu_x / x) (1 - R_x)`` with ``R_x f(x, y) = f(-x, y)``,
  and symmetrically for ``D_y``.
* The deformed Laplacian is ``D_x^2 + D_y^2``; expanding gives
  ``d2/dx2 + d2/dy2 + (2 mu_x / x) d/dx + (2 mu_y / y) d/dy
  - (mu_x / x^2)(1 - R_x) - (mu_y / y^2)(1 - R_y)``.
  (Note the minus sign on the reflection-difference terms; it follows
  from squaring D_x and is confirmed by the polar-form checks.)
* The angular operator is ``J = i (x D_y - y D_x)``; in polar form
  ``J = i (d/dphi + mu_y cot(phi) (1 - R_y) - mu_x tan(phi) (1 - R_x))``
  where ``R_x: phi -> pi - phi`` and ``R_y: phi -> -phi``.

Operator application accepts scalar points or numpy arrays of points and
broadcasts; the verification grids rely on this.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .solution_builder import OscillatorConfig

DEFAULT_STEP = 1e-4
# Reflection differences smaller than this (relative to the local field
# magnitude) are treated as identically zero near a singular locus.
SYMMETRY_TOL = 1e-10


class SingularPointError(ValueError):
    """Operator applied too close to a reflection-singular locus."""


class Axis(enum.Enum):
    X = "x"
    Y = "y"


class Component(enum.Enum):
    """Spinor component selector for the decoupled second-order equations."""

    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class DunklParams:
    """Reflection-deformation parameters, one per axis (each >= -1/2)."""

    mu_x: float
    mu_y: float

    def __post_init__(self) -> None:
        if self.mu_x < -0.5 or self.mu_y < -0.5:
            raise ValueError(f"deformation parameters must be >= -1/2, got {self}")

    @property
    def mu_plus(self) -> float:
        return self.mu_x + self.mu_y

    @property
    def mu_minus(self) -> float:
        return self.mu_x - self.mu_y

    def signed_sum(self, s_x: int, s_y: int) -> float:
        """s_x*mu_x + s_y*mu_y for a reflection-sector label."""
        return s_x * self.mu_x + s_y * self.mu_y

    def is_spinor_compatible(self) -> bool:
        """True when both parameters are naturals or both positive half-odds.

        Pairing the two spinor components requires integer index offsets,
        which restricts the deformation parameters to these two families.
        """

        def near_int(v: float) -> bool:
            return abs(v - round(v)) <= 1e-12

        both_int = near_int(self.mu_x) and near_int(self.mu_y) and self.mu_x >= -1e-12 and self.mu_y >= -1e-12
        both_half = near_int(self.mu_x - 0.5) and near_int(self.mu_y - 0.5) and self.mu_x > 0 and self.mu_y > 0
        return both_int or both_half


@dataclass(frozen=True)
class ScalarField2D:
    """Complex-valued field on the plane given by an exact evaluation rule.

    ``fn`` must accept scalars or numpy arrays for both coordinates.
    Parity tags are advisory ("even"/"odd"/None per axis) and are checked
    by the test suite, not enforced here.
    """

    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    parity_x: str | None = None
    parity_y: str | None = None

    def __call__(self, x, y):
        return self.fn(x, y)

    def eval_polar(self, rho, phi):
        return self.fn(rho * np.cos(phi), rho * np.sin(phi))

    def scaled(self, c: complex) -> "ScalarField2D":
        fn = self.fn
        return ScalarField2D(lambda x, y: c * fn(x, y), self.parity_x, self.parity_y)

    @staticmethod
    def from_polar(g: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> "ScalarField2D":
        """Build a field from a rule in polar coordinates (rho, phi)."""
        return ScalarField2D(lambda x, y: g(np.hypot(x, y), np.arctan2(y, x)))

    @staticmethod
    def zero() -> "ScalarField2D":
        return ScalarField2D(lambda x, y: np.zeros_like(np.asarray(x, dtype=float) + 0j),
                             parity_x="even", parity_y="even")


def reflect(field: ScalarField2D, axis: Axis) -> ScalarField2D:
    """Compose a field with the sign flip of one coordinate (exact)."""
    fn = field.fn
    if axis is Axis.X:
        return ScalarField2D(lambda x, y: fn(-x, y), field.parity_x, field.parity_y)
    return ScalarField2D(lambda x, y: fn(x, -y), field.parity_x, field.parity_y)


def _check_symmetric_near_axis(coord, diff, scale, h: float, what: str) -> None:
    coord = np.asarray(coord, dtype=float)
    near = np.abs(coord) < 10.0 * h
    if not np.any(near):
        return
    bad = near & (np.abs(diff) > SYMMETRY_TOL * np.maximum(1.0, scale))
    if np.any(bad):
        raise SingularPointError(
            f"{what} applied within 10*h of its singular locus where the "
            "reflection difference does not vanish"
        )


def _reflection_quotient(coord, diff, central, mu: float):
    """(mu/coord)*diff with the coord -> 0 limit patched in.

    At coord == 0 the odd part of the field vanishes, and
    (mu/x)(f - Rf) -> 2*mu*(d/dx f_odd)(0), which the central difference
    already approximates, hence the 2*mu*central substitute.
    """
    coord = np.asarray(coord, dtype=float)
    zero = coord == 0.0
    safe = np.where(zero, 1.0, coord)
    return np.where(zero, 2.0 * mu * central, mu * diff / safe)


def dunkl_derivative(
    field: ScalarField2D,
    axis: Axis,
    point,
    params: DunklParams,
    h: float = DEFAULT_STEP,
):
    """Apply D_x or D_y at ``point = (x, y)``.

    The plain derivative is a central difference of step ``h``; the
    reflection-difference term is exact.
    """
    x, y = np.asarray(point[0], dtype=float), np.asarray(point[1], dtype=float)
    f0 = field(x, y)
    if axis is Axis.X:
        central = (field(x + h, y) - field(x - h, y)) / (2.0 * h)
        mu = params.mu_x
        if mu == 0.0:
            return central
        diff = f0 - field(-x, y)
        coord = x
    else:
        central = (field(x, y + h) - field(x, y - h)) / (2.0 * h)
        mu = params.mu_y
        if mu == 0.0:
            return central
        diff = f0 - field(x, -y)
        coord = y
    _check_symmetric_near_axis(coord, diff, np.abs(f0), h, "dunkl_derivative")
    return central + _reflection_quotient(coord, diff, central, mu)


def dunkl_laplacian(
    field: ScalarField2D,
    point,
    params: DunklParams,
    h: float = DEFAULT_STEP,
):
    """Apply the deformed Laplacian D_x^2 + D_y^2 at ``point``."""
    x, y = np.asarray(point[0], dtype=float), np.asarray(point[1], dtype=float)
    f0 = field(x, y)
    fxp, fxm = field(x + h, y), field(x - h, y)
    fyp, fym = field(x, y + h), field(x, y - h)
    out = (fxp - 2.0 * f0 + fxm) / (h * h) + (fyp - 2.0 * f0 + fym) / (h * h)

    if params.mu_x != 0.0:
        diff = f0 - field(-x, y)
        _check_symmetric_near_axis(x, diff, np.abs(f0), h, "dunkl_laplacian")
        d1 = (fxp - fxm) / (2.0 * h)
        zero = np.asarray(x, dtype=float) == 0.0
        safe = np.where(zero, 1.0, x)
        d2 = (fxp - 2.0 * f0 + fxm) / (h * h)
        # combined first-order + reflection terms; at x == 0 their joint
        # limit for a locally even field is 2*mu*f''.
        term = 2.0 * params.mu_x * d1 / safe - params.mu_x * diff / (safe * safe)
        out = out + np.where(zero, 2.0 * params.mu_x * d2, term)
    if params.mu_y != 0.0:
        diff = f0 - field(x, -y)
        _check_symmetric_near_axis(y, diff, np.abs(f0), h, "dunkl_laplacian")
        d1 = (fyp - fym) / (2.0 * h)
        zero = np.asarray(y, dtype=float) == 0.0
        safe = np.where(zero, 1.0, y)
        d2 = (fyp - 2.0 * f0 + fym) / (h * h)
        term = 2.0 * params.mu_y * d1 / safe - params.mu_y * diff / (safe * safe)
        out = out + np.where(zero, 2.0 * params.mu_y * d2, term)
    return out


def _angular_reflections(field: ScalarField2D, rho, phi):
    """Field values at phi, pi - phi (R_x) and -phi (R_y)."""
    f0 = field.eval_polar(rho, phi)
    frx = field.eval_polar(rho, np.pi - phi)
    fry = field.eval_polar(rho, -phi)
    return f0, frx, fry


def _guard_angle(phi, f0, frx, fry, params: DunklParams, h: float, what: str) -> None:
    phi = np.asarray(phi, dtype=float)
    # distance to the nearest multiple of pi/2
    d = np.abs(phi / (0.5 * np.pi) - np.round(phi / (0.5 * np.pi))) * 0.5 * np.pi
    near = d < 10.0 * h
    if not np.any(near):
        return
    scale = np.maximum(1.0, np.abs(f0))
    on_y_axis = np.abs(np.cos(phi)) < np.abs(np.sin(phi))  # phi near pi/2, 3pi/2
    bad_x = near & on_y_axis & (params.mu_x != 0.0) & (np.abs(f0 - frx) > SYMMETRY_TOL * scale)
    bad_y = near & ~on_y_axis & (params.mu_y != 0.0) & (np.abs(f0 - fry) > SYMMETRY_TOL * scale)
    if np.any(bad_x) or np.any(bad_y):
        raise SingularPointError(
            f"{what} applied within 10*h of an axis angle where the "
            "reflection difference does not vanish"
        )


def angular_j(
    field: ScalarField2D,
    point_polar,
    params: DunklParams,
    h: float = DEFAULT_STEP,
):
    """Apply J = i (x D_y - y D_x) at a polar point ``(rho, phi)``.

    Only d/dphi is discretized; the reflection differences and the
    cot/tan factors are exact.
    """
    rho, phi = np.asarray(point_polar[0], dtype=float), np.asarray(point_polar[1], dtype=float)
    f0, frx, fry = _angular_reflections(field, rho, phi)
    _guard_angle(phi, f0, frx, fry, params, h, "angular_j")
    dphi = (field.eval_polar(rho, phi + h) - field.eval_polar(rho, phi - h)) / (2.0 * h)
    out = dphi
    if params.mu_y != 0.0:
        out = out + params.mu_y * (f0 - fry) / np.tan(phi)
    if params.mu_x != 0.0:
        out = out - params.mu_x * np.tan(phi) * (f0 - frx)
    return 1j * out


def b_phi_apply(
    field: ScalarField2D,
    point_polar,
    params: DunklParams,
    h: float = DEFAULT_STEP,
):
    """Apply the angular part of the deformed Laplacian at ``(rho, phi)``.

    This is the operator whose double relation to J reads
    ``J^2 = 2 B_phi + 2 mu_x mu_y (1 - R_x R_y)``.
    """
    rho, phi = np.asarray(point_polar[0], dtype=float), np.asarray(point_polar[1], dtype=float)
    f0, frx, fry = _angular_reflections(field, rho, phi)
    _guard_angle(phi, f0, frx, fry, params, h, "b_phi_apply")
    fp = field.eval_polar(rho, phi + h)
    fm = field.eval_polar(rho, phi - h)
    d1 = (fp - fm) / (2.0 * h)
    d2 = (fp - 2.0 * f0 + fm) / (h * h)
    out = -0.5 * d2 + (params.mu_x * np.tan(phi) - params.mu_y / np.tan(phi)) * d1
    if params.mu_x != 0.0:
        out = out + params.mu_x * (f0 - frx) / (2.0 * np.cos(phi) ** 2)
    if params.mu_y != 0.0:
        out = out + params.mu_y * (f0 - fry) / (2.0 * np.sin(phi) ** 2)
    return out


def kg_apply(
    component: Component,
    field: ScalarField2D,
    params: DunklParams,
    config: "OscillatorConfig",
    point_polar,
    h: float = DEFAULT_STEP,
):
    """Apply the decoupled second-order operator to a field at ``(rho, phi)``.

    Returns the full left-hand side whose eigenvalue on a bound state is
    ``(E^2 - m^2 c^4) / (2 hbar^2 c^2)``. The upper component carries
    ``-(m w~/hbar)(1 + mu_x R_x + mu_y R_y)``, the lower one the same
    term with a plus sign. All reflection terms are exact; rho and phi
    derivatives are central differences of step ``h``.
    """
    rho, phi = np.asarray(point_polar[0], dtype=float), np.asarray(point_polar[1], dtype=float)
    if np.any(rho < 10.0 * h):
        raise SingularPointError("kg_apply requires rho >= 10*h")
    w = config.m * config.omega_tilde / config.hbar
    mu_p = params.mu_plus

    f0 = field.eval_polar(rho, phi)
    frp = field.eval_polar(rho + h, phi)
    frm = field.eval_polar(rho - h, phi)
    d1r = (frp - frm) / (2.0 * h)
    d2r = (frp - 2.0 * f0 + frm) / (h * h)

    bphi = b_phi_apply(field, (rho, phi), params, h)
    jf = angular_j(field, (rho, phi), params, h)
    frx = field.eval_polar(rho, np.pi - phi)
    fry = field.eval_polar(rho, -phi)
    refl = f0 + params.mu_x * frx + params.mu_y * fry
    sign = -1.0 if component is Component.UPPER else 1.0

    return (
        -0.5 * d2r
        - (0.5 + mu_p) * d1r / rho
        + bphi / rho**2
        + w * jf
        + sign * w * refl
        + 0.5 * w * w * rho**2 * f0
    )


def dirac_apply(
    pair,
    energy: float,
    params: DunklParams,
    config: "OscillatorConfig",
    point,
    h: float = DEFAULT_STEP,
):
    """Residuals of the coupled first-order system at ``point = (x, y)``.

    For a genuine eigenspinor (psi_1, psi_2) of energy E both residuals
    vanish:

        r1 = [-i hbar c (D_x - i D_y) + i m c w~ (x - i y)] psi_2
             - (E - m c^2) psi_1
        r2 = [-i hbar c (D_x + i D_y) - i m c w~ (x + i y)] psi_1
             - (E + m c^2) psi_2
    """
    upper, lower = pair
    x, y = np.asarray(point[0], dtype=float), np.asarray(point[1], dtype=float)
    hbar, c, m = config.hbar, config.c, config.m
    wt = config.omega_tilde
    mc2 = m * c * c

    u0 = upper(x, y)
    l0 = lower(x, y)
    dx_l = dunkl_derivative(lower, Axis.X, (x, y), params, h)
    dy_l = dunkl_derivative(lower, Axis.Y, (x, y), params, h)
    dx_u = dunkl_derivative(upper, Axis.X, (x, y), params, h)
    dy_u = dunkl_derivative(upper, Axis.Y, (x, y), params, h)

    r1 = -1j * hbar * c * (dx_l - 1j * dy_l) + 1j * m * c * wt * (x - 1j * y) * l0 - (energy - mc2) * u0
    r2 = -1j * hbar * c * (dx_u + 1j * dy_u) - 1j * m * c * wt * (x + 1j * y) * u0 - (energy + mc2) * l0
    return r1, r2


# ---------------------------------------------------------------------------
# weighted quadrature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights integrating the *plain* measure of a domain.

    kind "angular": nodes are angles on [0, 2pi), weights integrate dphi.
    kind "radial":  nodes are radii on [0, R], weights integrate drho.
    kind "polar":   nodes are (rho, phi) pairs, weights integrate drho dphi
                    (the Jacobian rho is part of the deformation weight
                    applied by ``weighted_inner_product``).
    """

    kind: str
    nodes: np.ndarray
    weights: np.ndarray


def _gauss_on(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    t, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * t + 0.5 * (a + b), 0.5 * (b - a) * w


def angular_quadrature(n_per_panel: int = 48) -> QuadratureRule:
    """Composite Gauss-Legendre rule on [0, 2pi), split at the axis angles.

    The deformation weight |cos|^{2mu_x} |sin|^{2mu_y} is non-smooth at
    multiples of pi/2, so each quarter is integrated separately.
    """
    nodes, weights = [], []
    for k in range(4):
        x, w = _gauss_on(k * np.pi / 2.0, (k + 1) * np.pi / 2.0, n_per_panel)
        nodes.append(x)
        weights.append(w)
    return QuadratureRule("angular", np.concatenate(nodes), np.concatenate(weights))


def gaussian_cutoff_radius(scale: float, power: float = 30.0) -> float:
    """Radius beyond which rho^power * exp(-scale*rho^2) < 1e-18."""
    if scale <= 0.0:
        raise ValueError("scale must be positive")
    r = np.sqrt(46.0 / scale)
    for _ in range(4):
        r = np.sqrt((46.0 + max(power, 0.0) * np.log(max(r, 1.0))) / scale)
    return float(r)


def radial_quadrature(r_max: float, n: int = 200, r_min: float = 0.0) -> QuadratureRule:
    x, w = _gauss_on(r_min, r_max, n)
    return QuadratureRule("radial", x, w)


def polar_quadrature(
    r_max: float,
    n_radial: int = 200,
    n_per_panel: int = 48,
    r_min: float = 0.0,
) -> QuadratureRule:
    rad = radial_quadrature(r_max, n_radial, r_min)
    ang = angular_quadrature(n_per_panel)
    rr, pp = np.meshgrid(rad.nodes, ang.nodes, indexing="ij")
    ww = np.outer(rad.weights, ang.weights)
    nodes = np.stack([rr.ravel(), pp.ravel()], axis=1)
    return QuadratureRule("polar", nodes, ww.ravel())


def weighted_inner_product(
    f: ScalarField2D,
    g: ScalarField2D,
    params: DunklParams,
    rule: QuadratureRule,
) -> complex:
    """<f, g> against the weight |x|^{2mu_x} |y|^{2mu_y}.

    With an "angular" rule the integral runs over the unit circle (used
    for purely angular fields); a "polar" rule covers the plane, where
    the measure picks up rho^{2(mu_x+mu_y)+1}.
    """
    mx, my = params.mu_x, params.mu_y
    if rule.kind == "angular":
        phi = rule.nodes
        x, y = np.cos(phi), np.sin(phi)
        wgt = np.abs(x) ** (2.0 * mx) * np.abs(y) ** (2.0 * my)
        vals = np.conjugate(f(x, y)) * g(x, y)
        return complex(np.sum(rule.weights * wgt * vals))
    if rule.kind == "radial":
        rho = rule.nodes
        wgt = rho ** (2.0 * (mx + my) + 1.0)
        vals = np.conjugate(f(rho, np.zeros_like(rho))) * g(rho, np.zeros_like(rho))
        return complex(np.sum(rule.weights * wgt * vals))
    if rule.kind == "polar":
        rho, phi = rule.nodes[:, 0], rule.nodes[:, 1]
        x, y = rho * np.cos(phi), rho * np.sin(phi)
        wgt = (
            np.abs(np.cos(phi)) ** (2.0 * mx)
            * np.abs(np.sin(phi)) ** (2.0 * my)
            * rho ** (2.0 * (mx + my) + 1.0)
        )
        vals = np.conjugate(f(x, y)) * g(x, y)
        return complex(np.sum(rule.weights * wgt * vals))
    raise ValueError(f"unknown quadrature kind {rule.kind!r}")
