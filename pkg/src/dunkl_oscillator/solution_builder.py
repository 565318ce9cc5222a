"""Assembly of spinor eigenstates and spectra for all sectors and regimes.

The effective frequency w~ = omega - omega_c/2 splits the problem into
three regimes. For w~ > 0 (oscillator-dominated) and w~ < 0 (field-
dominated, handled through w-bar = omega_c/2 - omega) the radial factors
are Laguerre functions under a Gaussian; at the critical point w~ = 0
the system degenerates to a free particle with Bessel radial profiles.

With sigma = s_x mu_x + s_y mu_y and A the radial order
(A = sqrt(lambda^2 + (mu_x + mu_y)^2) for epsilon = +1,
 A = sqrt(lambda^2 + (mu_x - mu_y)^2) for epsilon = -1),
the four sector spectra collapse to

    w~ > 0:  E(upper, k) = s m c^2 sqrt(1 + q (2k + A + lambda - sigma))
             E(lower, k') = s m c^2 sqrt(1 + q (2k' + A + lambda + sigma + 2))
             with q = 2 hbar w~ / (m c^2), pairing k' = k - sigma - 1;
    w~ < 0:  E(upper, k) = s m c^2 sqrt(1 + qb (2k + A - lambda + sigma + 2))
             E(lower, k') = s m c^2 sqrt(1 + qb (2k' + A - lambda - sigma))
             with qb = 2 hbar w-bar / (m c^2), pairing k' = k + sigma + 1.

Both components of a built spinor share the mode's angular eigenfunction;
the component norms split the total probability as (E +/- m c^2) / (2 E)
and the relative phase is fixed by a least-squares fit of the first
coupled equation on a sample grid.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .angular_sector import AngularMode, SectorLabel, f_eigenfunction, lambda_eigenvalue
from .dunkl_calculus import (
    Axis,
    Component,
    DunklParams,
    ScalarField2D,
    dunkl_derivative,
)
from .special_functions import bessel_j, laguerre_l, log_gamma


class RegimeError(ValueError):
    """Operation not available in the configuration's frequency regime."""


class InvalidPairError(ValueError):
    """No bound partner index exists for the requested radial index."""


class IntegralityError(ValueError):
    """Deformation parameters incompatible with spinor pairing."""


class NegativeRadicandError(ValueError):
    """Energy radicand negative: unphysical parameter combination."""


class Regime(enum.Enum):
    POSITIVE = "positive"
    CRITICAL = "critical"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class OscillatorConfig:
    """Physical constants and the two frequencies.

    Defaults are natural units hbar = m = c = 1; all formulas keep
    the symbolic constants so SI-like values work as well.
    """

    omega: float
    omega_c: float = 0.0
    m: float = 1.0
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self) -> None:
        if self.m <= 0 or self.hbar <= 0 or self.c <= 0:
            raise ValueError("m, hbar, c must be positive")
        if self.omega < 0 or self.omega_c < 0:
            raise ValueError("omega and omega_c must be non-negative")

    @property
    def omega_tilde(self) -> float:
        return self.omega - 0.5 * self.omega_c

    @property
    def omega_bar(self) -> float:
        return 0.5 * self.omega_c - self.omega

    @property
    def rest_energy(self) -> float:
        return self.m * self.c * self.c


def classify_regime(config: OscillatorConfig, rel_tol: float = 1e-14) -> Regime:
    """Sign of the effective frequency, with an exact-zero tolerance."""
    scale = max(config.omega, 0.5 * config.omega_c, 1e-300)
    wt = config.omega_tilde
    if abs(wt) <= rel_tol * scale:
        return Regime.CRITICAL
    return Regime.POSITIVE if wt > 0 else Regime.NEGATIVE


@dataclass(frozen=True)
class QuantumNumbers:
    k: int
    k_prime: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.k_prime < 0:
            raise ValueError("radial indices must be non-negative")


def radial_order(mode: AngularMode) -> float:
    """Laguerre/Bessel order A for the mode's sector family."""
    lam = lambda_eigenvalue(mode)
    p = mode.params
    mu = p.mu_plus if mode.sector.epsilon == 1 else p.mu_minus
    return math.sqrt(lam * lam + mu * mu)


def pair_radial_indices(
    sector: SectorLabel,
    regime: Regime,
    k: int,
    params: DunklParams,
) -> int:
    """Partner (lower-component) radial index for upper index k."""
    if not params.is_spinor_compatible():
        raise IntegralityError(
            "spinor pairing requires both deformation parameters in N or both in N+1/2"
        )
    if k < 0:
        raise ValueError("k must be non-negative")
    sigma = params.signed_sum(sector.s_x, sector.s_y)
    if regime is Regime.POSITIVE:
        kp = k - sigma - 1.0
    elif regime is Regime.NEGATIVE:
        kp = k + sigma + 1.0
    else:
        raise RegimeError("the critical regime has no bound pairs; use free_particle")
    if abs(kp - round(kp)) > 1e-9 or round(kp) < 0:
        raise InvalidPairError(
            f"no partner index for sector ({sector}), k={k}: k'={kp} is not a natural number"
        )
    return int(round(kp))


def energy(
    component: Component,
    sector: SectorLabel,
    mode: AngularMode,
    k: int,
    config: OscillatorConfig,
    sign: int = 1,
) -> float:
    """Closed-form bound energy of one spinor component.

    ``sign`` selects the particle (+1) or antiparticle (-1) branch.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if k < 0:
        raise ValueError("k must be non-negative")
    regime = classify_regime(config)
    if regime is Regime.CRITICAL:
        raise RegimeError("no discrete spectrum at the critical frequency")
    lam = lambda_eigenvalue(mode)
    a_ord = radial_order(mode)
    sigma = mode.params.signed_sum(sector.s_x, sector.s_y)
    mc2 = config.rest_energy
    if regime is Regime.POSITIVE:
        q = 2.0 * config.hbar * config.omega_tilde / mc2
        s_num = 2.0 * k + a_ord + lam - sigma
        if component is Component.LOWER:
            s_num = 2.0 * k + a_ord + lam + sigma + 2.0
    else:
        q = 2.0 * config.hbar * config.omega_bar / mc2
        s_num = 2.0 * k + a_ord - lam + sigma + 2.0
        if component is Component.LOWER:
            s_num = 2.0 * k + a_ord - lam - sigma
    radicand = 1.0 + q * s_num
    if radicand < 0.0:
        raise NegativeRadicandError(
            f"negative energy radicand {radicand} for sector ({sector}), n={mode.n}, k={k}"
        )
    return sign * mc2 * math.sqrt(radicand)


@dataclass(frozen=True)
class RadialProfile:
    """Evaluable radial factor rho^{A-mu_+} e^{-s rho^2 / 2} L_k^A(s rho^2)."""

    order: float
    exponent: float
    scale: float
    index: int

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        u = self.scale * rho * rho
        return rho**self.exponent * np.exp(-0.5 * u) * laguerre_l(self.index, self.order, u)

    def norm_squared(self) -> float:
        """Exact squared norm against the radial measure rho^{2 mu_+ + 1} drho.

        Substituting u = s rho^2 turns the integral into the classical
        Laguerre orthogonality integral Gamma(k + A + 1) / k!.
        """
        a, k, s = self.order, self.index, self.scale
        return math.exp(
            log_gamma(k + a + 1.0)
            - log_gamma(k + 1.0)
            - (a + 1.0) * math.log(s)
            - math.log(2.0)
        )


def build_radial(
    component: Component,
    sector: SectorLabel,
    mode: AngularMode,
    k: int,
    config: OscillatorConfig,
) -> RadialProfile:
    """Radial profile of one component (the index is the caller's k or k')."""
    regime = classify_regime(config)
    if regime is Regime.POSITIVE:
        omega_eff = config.omega_tilde
    elif regime is Regime.NEGATIVE:
        omega_eff = config.omega_bar
    else:
        raise RegimeError("no Laguerre radial profile at the critical frequency")
    if k < 0:
        raise ValueError("radial index must be non-negative")
    a_ord = radial_order(mode)
    return RadialProfile(
        order=a_ord,
        exponent=a_ord - mode.params.mu_plus,
        scale=config.m * omega_eff / config.hbar,
        index=k,
    )


@dataclass(frozen=True)
class SpinorSolution:
    """A paired two-component eigenstate with its energy and bookkeeping."""

    upper: ScalarField2D
    lower: ScalarField2D
    energy: float
    quantum: QuantumNumbers | None
    mode: AngularMode
    config: OscillatorConfig
    norm_upper: float | None = None
    norm_lower: float | None = None


def _product_field(radial: RadialProfile, angular: ScalarField2D, scale: complex) -> ScalarField2D:
    def fn(x, y):
        rho = np.hypot(x, y)
        return scale * radial(rho) * angular(x, y)

    return ScalarField2D(fn)


def _phase_fit_points(config: OscillatorConfig, omega_eff: float) -> tuple[np.ndarray, np.ndarray]:
    ell = math.sqrt(config.hbar / (config.m * omega_eff))
    rho = np.geomspace(0.2 * ell, 3.0 * ell, 10)
    phi = (2.0 * np.arange(10) + 1.0) * np.pi / 10.0 + 0.031
    rr, pp = np.meshgrid(rho, phi, indexing="ij")
    return (rr * np.cos(pp)).ravel(), (rr * np.sin(pp)).ravel()


def build_spinor(
    sector: SectorLabel,
    mode: AngularMode,
    k: int,
    config: OscillatorConfig,
    sign: int = 1,
) -> SpinorSolution:
    """Assemble the paired two-component state for upper radial index k.

    Component norms are set to <1|1> = (E + mc^2)/(2E) and
    <2|2> = (E - mc^2)/(2E); their sum is 1. The relative phase of the
    lower component is not determined by the closed forms and is fixed
    by least squares on the first coupled equation over a 100-point
    off-axis grid.
    """
    regime = classify_regime(config)
    k_prime = pair_radial_indices(sector, regime, k, mode.params)
    e_val = energy(Component.UPPER, sector, mode, k, config, sign)
    mc2 = config.rest_energy

    angular = f_eigenfunction(mode)
    rad_u = build_radial(Component.UPPER, sector, mode, k, config)
    rad_l = build_radial(Component.LOWER, sector, mode, k_prime, config)

    nu2 = (e_val + mc2) / (2.0 * e_val)
    nl2 = (e_val - mc2) / (2.0 * e_val)
    cu = math.sqrt(max(nu2, 0.0) / rad_u.norm_squared())
    cl = math.sqrt(max(nl2, 0.0) / rad_l.norm_squared())

    upper = _product_field(rad_u, angular, cu)
    if cl == 0.0:
        lower = ScalarField2D.zero()
    else:
        lower0 = _product_field(rad_l, angular, cl)
        lower = _fit_relative_phase(upper, lower0, e_val, mode.params, config)
    return SpinorSolution(
        upper=upper,
        lower=lower,
        energy=e_val,
        quantum=QuantumNumbers(k, k_prime),
        mode=mode,
        config=config,
        norm_upper=nu2,
        norm_lower=nl2,
    )


def _fit_relative_phase(
    upper: ScalarField2D,
    lower0: ScalarField2D,
    e_val: float,
    params: DunklParams,
    config: OscillatorConfig,
) -> ScalarField2D:
    """Rotate the lower component by the phase that best satisfies
    [-i hbar c (D_x - i D_y) + i m c w~ (x - iy)] psi_2 = (E - mc^2) psi_1."""
    regime = classify_regime(config)
    omega_eff = config.omega_tilde if regime is Regime.POSITIVE else config.omega_bar
    xs, ys = _phase_fit_points(config, omega_eff)
    hbar, c, m = config.hbar, config.c, config.m
    wt = config.omega_tilde

    dx = dunkl_derivative(lower0, Axis.X, (xs, ys), params)
    dy = dunkl_derivative(lower0, Axis.Y, (xs, ys), params)
    a_psi2 = -1j * hbar * c * (dx - 1j * dy) + 1j * m * c * wt * (xs - 1j * ys) * lower0(xs, ys)
    target = (e_val - config.rest_energy) * upper(xs, ys)
    overlap = np.sum(np.conjugate(a_psi2) * target)
    if abs(overlap) < 1e-300:
        return lower0
    phase = overlap / abs(overlap)
    return lower0.scaled(phase)


def free_particle(
    sector: SectorLabel,
    mode: AngularMode,
    e_val: float,
    params: DunklParams,
    config: OscillatorConfig,
) -> SpinorSolution:
    """Critical-regime state: both components rho^{-mu_+} J_A(sqrt(2 Et) rho) F(phi).

    Et = (E^2 - m^2 c^4) / (2 hbar^2 c^2) >= 0 is the reduced energy; the
    Bessel order equals the radial order A of the mode (the small-rho
    behavior rho^{A - mu_+} forces this choice). Free states carry no
    normalization split.
    """
    if classify_regime(config) is not Regime.CRITICAL:
        raise RegimeError("free_particle requires omega == omega_c / 2")
    mc2 = config.rest_energy
    if e_val < mc2:
        raise ValueError(f"free-particle energy must be >= m c^2, got {e_val}")
    tilde_e = (e_val * e_val - mc2 * mc2) / (2.0 * config.hbar**2 * config.c**2)
    wavenumber = math.sqrt(2.0 * tilde_e)
    a_ord = radial_order(mode)
    mu_p = params.mu_plus
    angular = f_eigenfunction(mode)

    def fn(x, y):
        rho = np.hypot(x, y)
        return rho ** (-mu_p) * bessel_j(a_ord, wavenumber * rho) * angular(x, y)

    field = ScalarField2D(fn)
    return SpinorSolution(
        upper=field,
        lower=field,
        energy=e_val,
        quantum=None,
        mode=mode,
        config=config,
    )
