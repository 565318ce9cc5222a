"""Independent numerical checks of every closed form the builder produces.

Each check applies an operator from :mod:`dunkl_calculus` directly to an
evaluable state and measures the residual on a grid that dodges the
reflection-singular loci. Checks never reuse the closed-form algebra they
test: eigenvalues are cross-checked against a dense diagonalization of
the angular operator in a plain trigonometric basis, the undeformed limit
against an independently coded textbook spectrum, and the deformed
operators against reference eigenstates constructed here by explicitly
diagonalizing the 2x2 reflection coupling on each branch pair.

A finding the suite makes visible (see README): for nonzero deformation
the builder's closed-form bound states with n >= 1 are exact solutions
of the decoupled second-order equations only in the mixed-parity sectors
with mu_x = mu_y; elsewhere the reflection term swaps the lambda branches
instead of acting as a scalar, and the residual checks report O(1)
failures. The reference eigenstates built by
:func:`coupled_reflection_eigenstate` pass the same checks at O(h^2),
which pins the discrepancy on the closed forms rather than the operators.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh

from .angular_sector import (
    ALL_SECTORS,
    AngularMode,
    SectorLabel,
    f_eigenfunction,
    lambda_eigenvalue,
    modes_for_sector,
    phi_mm,
    phi_mp,
    phi_pm,
    phi_pp,
)
from .dunkl_calculus import (
    Component,
    DunklParams,
    QuadratureRule,
    ScalarField2D,
    angular_j,
    angular_quadrature,
    dirac_apply,
    kg_apply,
    weighted_inner_product,
)
from .solution_builder import (
    IntegralityError,
    InvalidPairError,
    NegativeRadicandError,
    OscillatorConfig,
    QuantumNumbers,
    RadialProfile,
    Regime,
    RegimeError,
    SpinorSolution,
    build_spinor,
    classify_regime,
    energy,
    free_particle,
    pair_radial_indices,
    radial_order,
)
from .special_functions import laguerre_l

DEFAULT_TOLS = {
    "kg": 1e-5,
    "angular": 1e-6,
    "ortho": 1e-8,
    "dirac": 1e-4,
    "nrlimit": 1e-5,
}

SUITE_NAMES = ("kg", "angular", "ortho", "dirac", "nrlimit")


@dataclass(frozen=True)
class CheckRecord:
    name: str
    inputs: dict
    residual: float
    tol: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "residual": self.residual,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def extend(self, records) -> None:
        self.records.extend(records)

    def sort(self) -> None:
        self.records.sort(key=lambda r: r.name)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [r.to_dict() for r in self.records],
            "pass": self.passed,
        }


@dataclass(frozen=True)
class GridSpec:
    """Residual-check grid: log-spaced radii times axis-avoiding angles."""

    n_rho: int = 12
    n_phi: int = 16
    rho_min_factor: float = 0.1
    rho_max_factor: float = 4.0

    def angles(self) -> np.ndarray:
        # offset so every angle is at least pi/n_phi from a multiple of pi/2
        return (np.arange(self.n_phi) + 0.5) * 2.0 * np.pi / self.n_phi

    def polar_points(self, length_scale: float) -> tuple[np.ndarray, np.ndarray]:
        rho = np.geomspace(
            self.rho_min_factor * length_scale,
            self.rho_max_factor * length_scale,
            self.n_rho,
        )
        rr, pp = np.meshgrid(rho, self.angles(), indexing="ij")
        return rr.ravel(), pp.ravel()


def _length_scale(solution: SpinorSolution) -> float:
    config = solution.config
    regime = classify_regime(config)
    if regime is Regime.POSITIVE:
        return math.sqrt(config.hbar / (config.m * config.omega_tilde))
    if regime is Regime.NEGATIVE:
        return math.sqrt(config.hbar / (config.m * config.omega_bar))
    mc2 = config.rest_energy
    tilde_e = (solution.energy**2 - mc2**2) / (2.0 * config.hbar**2 * config.c**2)
    if tilde_e > 0.0:
        return 1.0 / math.sqrt(2.0 * tilde_e)
    return config.hbar / (config.m * config.c)


def _state_tag(solution: SpinorSolution) -> str:
    mode = solution.mode
    k = solution.quantum.k if solution.quantum is not None else None
    ktag = f" k={k}" if k is not None else f" E={solution.energy:.6g}"
    return f"[{mode.sector}] n={mode.n:g} b={mode.branch:+d}{ktag}"


def reduced_energy(solution: SpinorSolution) -> float:
    """(E^2 - m^2 c^4) / (2 hbar^2 c^2) for the solution's energy."""
    config = solution.config
    mc2 = config.rest_energy
    return (solution.energy**2 - mc2**2) / (2.0 * config.hbar**2 * config.c**2)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def check_kg_eigen(
    solution: SpinorSolution,
    grid_spec: GridSpec = GridSpec(),
    tol: float = DEFAULT_TOLS["kg"],
    h: float = 1e-4,
) -> VerificationReport:
    """Pointwise residual of the decoupled second-order equations."""
    params = solution.mode.params
    config = solution.config
    tilde_e = reduced_energy(solution)
    rho, phi = grid_spec.polar_points(_length_scale(solution))
    report = VerificationReport("kg")
    for component, fld in ((Component.UPPER, solution.upper), (Component.LOWER, solution.lower)):
        vals = fld.eval_polar(rho, phi)
        scale = float(np.max(np.abs(vals)))
        if scale == 0.0:
            residual = 0.0
        else:
            applied = kg_apply(component, fld, params, config, (rho, phi), h)
            residual = float(np.max(np.abs(applied - tilde_e * vals)) / scale)
        name = f"kg{_state_tag(solution)} {component.value}"
        report.records.append(
            CheckRecord(
                name=name,
                inputs={
                    "sector": str(solution.mode.sector),
                    "n": solution.mode.n,
                    "branch": solution.mode.branch,
                    "component": component.value,
                    "energy": solution.energy,
                    "h": h,
                },
                residual=residual,
                tol=tol,
                passed=residual <= tol,
            )
        )
    return report


def check_angular_eigen(
    mode: AngularMode,
    n_phi: int = 64,
    tol: float = DEFAULT_TOLS["angular"],
    h: float = 1e-4,
) -> VerificationReport:
    """Max |J F - lambda F| over an axis-avoiding angle grid (absolute)."""
    fld = f_eigenfunction(mode)
    lam = lambda_eigenvalue(mode)
    phi = (np.arange(n_phi) + 0.5) * 2.0 * np.pi / n_phi
    rho = np.ones_like(phi)
    vals = fld.eval_polar(rho, phi)
    applied = angular_j(fld, (rho, phi), mode.params, h)
    residual = float(np.max(np.abs(applied - lam * vals)))
    scale = float(np.max(np.abs(vals)))
    report = VerificationReport("angular")
    report.records.append(
        CheckRecord(
            name=f"angular[{mode.sector}] n={mode.n:g} b={mode.branch:+d} "
            f"mu=({mode.params.mu_x:g},{mode.params.mu_y:g})",
            inputs={
                "sector": str(mode.sector),
                "n": mode.n,
                "branch": mode.branch,
                "mu_x": mode.params.mu_x,
                "mu_y": mode.params.mu_y,
                "lambda": lam,
                "relative_residual": residual / max(scale * max(abs(lam), 1.0), 1e-300),
                "h": h,
            },
            residual=residual,
            tol=tol,
            passed=residual <= tol,
        )
    )
    return report


def check_orthonormality(
    modes: list[AngularMode],
    rule: QuadratureRule | None = None,
    tol: float = DEFAULT_TOLS["ortho"],
) -> VerificationReport:
    """Gram matrix of the modes against the identity, weighted quadrature."""
    if rule is None:
        rule = angular_quadrature()
    params = modes[0].params
    fields = [f_eigenfunction(m) for m in modes]
    gram = np.empty((len(modes), len(modes)), dtype=complex)
    for i, fi in enumerate(fields):
        for j, fj in enumerate(fields):
            if j < i:
                gram[i, j] = np.conjugate(gram[j, i])
            else:
                gram[i, j] = weighted_inner_product(fi, fj, params, rule)
    deviation = float(np.max(np.abs(gram - np.eye(len(modes)))))
    labels = ";".join(f"{m.sector}|{m.n:g}|{m.branch:+d}" for m in modes)
    report = VerificationReport("ortho")
    report.records.append(
        CheckRecord(
            name=f"ortho[{modes[0].sector}] {len(modes)} modes "
            f"mu=({params.mu_x:g},{params.mu_y:g})",
            inputs={"modes": labels, "mu_x": params.mu_x, "mu_y": params.mu_y},
            residual=deviation,
            tol=tol,
            passed=deviation <= tol,
        )
    )
    return report


def check_dirac_system(
    solution: SpinorSolution,
    grid_spec: GridSpec = GridSpec(),
    tol: float = DEFAULT_TOLS["dirac"],
    h: float = 1e-4,
) -> VerificationReport:
    """Max residual of the coupled first-order system on an off-axis grid."""
    params = solution.mode.params
    config = solution.config
    rho, phi = grid_spec.polar_points(_length_scale(solution))
    xs, ys = rho * np.cos(phi), rho * np.sin(phi)
    r1, r2 = dirac_apply(
        (solution.upper, solution.lower), solution.energy, params, config, (xs, ys), h
    )
    amp = max(
        float(np.max(np.abs(solution.upper(xs, ys)))),
        float(np.max(np.abs(solution.lower(xs, ys)))),
        1e-300,
    )
    scale = (abs(solution.energy) + config.rest_energy) * amp
    residual = float(max(np.max(np.abs(r1)), np.max(np.abs(r2))) / scale)
    report = VerificationReport("dirac")
    report.records.append(
        CheckRecord(
            name=f"dirac{_state_tag(solution)}",
            inputs={
                "sector": str(solution.mode.sector),
                "n": solution.mode.n,
                "branch": solution.mode.branch,
                "energy": solution.energy,
                "h": h,
            },
            residual=residual,
            tol=tol,
            passed=residual <= tol,
        )
    )
    return report


def matrix_oracle_lambda(
    sector: SectorLabel,
    params: DunklParams,
    basis_size: int = 48,
    rule: QuadratureRule | None = None,
) -> np.ndarray:
    """Eigenvalues of J from a dense trigonometric-basis discretization.

    The basis is {1, cos(j phi), sin(j phi)} restricted to the parity
    class epsilon = s_x s_y (even j for epsilon = +1, odd j for -1); J is
    applied to the basis functions analytically, matrix elements come
    from the weighted quadrature, and a generalized symmetric eigensolver
    handles the non-orthogonality of the basis under the weight. Entirely
    independent of the Jacobi construction being checked.
    """
    if basis_size < 1 or basis_size > 64:
        raise ValueError("basis_size must be in [1, 64]")
    if rule is None:
        rule = angular_quadrature()
    phi = rule.nodes
    wgt = (
        rule.weights
        * np.abs(np.cos(phi)) ** (2.0 * params.mu_x)
        * np.abs(np.sin(phi)) ** (2.0 * params.mu_y)
    )

    mx, my = params.mu_x, params.mu_y
    tan, cot = np.tan(phi), 1.0 / np.tan(phi)
    basis_vals = []
    j_vals = []
    j_idx = 0 if sector.epsilon == 1 else 1
    while len(basis_vals) < basis_size:
        j = j_idx
        cj, sj = np.cos(j * phi), np.sin(j * phi)
        rx_cos = 1.0 - (-1.0) ** j  # (1 - R_x) coefficient on cos
        rx_sin = 1.0 + (-1.0) ** j
        basis_vals.append(cj)
        j_vals.append(1j * (-j * sj - mx * tan * rx_cos * cj))
        if len(basis_vals) < basis_size and j > 0:
            basis_vals.append(sj)
            j_vals.append(1j * (j * cj + 2.0 * my * cot * sj - mx * tan * rx_sin * sj))
        j_idx += 2
    b_mat = np.stack(basis_vals, axis=1)
    jb_mat = np.stack(j_vals, axis=1)

    overlap = b_mat.T @ (wgt[:, None] * b_mat)
    j_op = b_mat.conj().T @ (wgt[:, None] * jb_mat)
    j_op = 0.5 * (j_op + j_op.conj().T)
    overlap = 0.5 * (overlap + overlap.T)
    vals = eigh(j_op, overlap, eigvals_only=True)
    return np.sort(vals)


def nonrelativistic_target(
    sector: SectorLabel,
    mode: AngularMode,
    k: int,
    base_config: OscillatorConfig,
) -> float:
    """First-order term of the energy expansion: hbar w~ (2k + A + lambda - sigma)."""
    lam = lambda_eigenvalue(mode)
    sigma = mode.params.signed_sum(sector.s_x, sector.s_y)
    return base_config.hbar * base_config.omega_tilde * (
        2.0 * k + radial_order(mode) + lam - sigma
    )


def check_nonrelativistic_limit(
    sector: SectorLabel,
    mode: AngularMode,
    k: int,
    base_config: OscillatorConfig,
    c_values=(10.0, 100.0, 1000.0),
    tol: float = DEFAULT_TOLS["nrlimit"],
) -> VerificationReport:
    """delta E(c) = E(c) - m c^2 against the series target, with rate fit.

    The shift must approach the target like c^{-2} (the Taylor remainder
    of sqrt(1 + u)), so the fitted log-log rate should sit near 2.
    """
    if len(c_values) < 3 or any(b >= a for a, b in zip(c_values[1:], c_values)):
        raise ValueError("need at least 3 increasing light-speed values")
    target = nonrelativistic_target(sector, mode, k, base_config)
    errs = []
    for c in c_values:
        cfg = OscillatorConfig(
            omega=base_config.omega,
            omega_c=base_config.omega_c,
            m=base_config.m,
            hbar=base_config.hbar,
            c=c,
        )
        delta = energy(Component.UPPER, sector, mode, k, cfg, 1) - cfg.rest_energy
        errs.append(abs(delta - target))
    errs_arr = np.asarray(errs)
    scale = max(abs(target), base_config.hbar * abs(base_config.omega_tilde))
    mismatch = errs_arr[-1] / scale

    report = VerificationReport("nrlimit")
    tag = f"nrlimit[{sector}] n={mode.n:g} b={mode.branch:+d} k={k}"
    inputs = {
        "sector": str(sector),
        "n": mode.n,
        "branch": mode.branch,
        "k": k,
        "target": target,
        "c_values": list(c_values),
    }
    report.records.append(
        CheckRecord(
            name=f"{tag} match",
            inputs=inputs,
            residual=float(mismatch),
            tol=tol,
            passed=bool(mismatch <= tol),
        )
    )
    if np.all(errs_arr < 1e-13 * scale):
        # exact cancellation (target 0 and spectrum flat in c): no rate to fit
        report.records.append(
            CheckRecord(
                name=f"{tag} rate",
                inputs={**inputs, "rate": None},
                residual=0.0,
                tol=0.4,
                passed=True,
            )
        )
        return report
    slope = np.polyfit(np.log(np.asarray(c_values)), np.log(errs_arr), 1)[0]
    rate = -float(slope)
    report.records.append(
        CheckRecord(
            name=f"{tag} rate",
            inputs={**inputs, "rate": rate},
            residual=abs(rate - 2.0),
            tol=0.2,
            passed=bool(1.8 <= rate <= 2.2),
        )
    )
    return report


# ---------------------------------------------------------------------------
# independent reference constructions (oracles)
# ---------------------------------------------------------------------------

def classical_oscillator_b_energy(
    component: Component,
    k: int,
    m_angular: int,
    config: OscillatorConfig,
    sign: int = 1,
) -> float:
    """Textbook spectrum of the undeformed relativistic oscillator in a field.

    Written directly in terms of the orbital quantum number m of the
    component (upper components carry exp(i m phi)); kept deliberately
    separate from :func:`solution_builder.energy` so the mu = 0 reduction
    is a genuine two-sided check.
    """
    wt = config.omega_tilde
    mc2 = config.rest_energy
    am = abs(m_angular)
    if wt > 0:
        s_num = 2.0 * k + am - m_angular
        if component is Component.LOWER:
            s_num += 2.0
    elif wt < 0:
        s_num = 2.0 * k + am + m_angular
        if component is Component.UPPER:
            s_num += 2.0
    else:
        raise RegimeError("no discrete spectrum at the critical frequency")
    return sign * mc2 * math.sqrt(1.0 + 2.0 * config.hbar * abs(wt) / mc2 * s_num)


def classical_pair_solution(
    m_angular: int,
    k: int,
    config: OscillatorConfig,
    sign: int = 1,
) -> SpinorSolution:
    """Exact undeformed eigenspinor with correctly laddered components.

    The first-order system raises the orbital index of the lower
    component by one: for m >= 0 the pair is

        psi_1 = z^m exp(-u/2) L_k^m(u),
        psi_2 = 2 i hbar c w z^{m+1} exp(-u/2) L_{k-1}^{m+1}(u) / (E + mc^2)

    with z = x + iy, u = w rho^2, w = m w~ / hbar, and for m < 0 (a = |m|)

        psi_1 = zbar^a exp(-u/2) L_k^a(u),
        psi_2 = -2 i hbar c (k + a) zbar^{a-1} exp(-u/2) L_k^{a-1}(u) / (E + mc^2).

    Both coupled first-order residuals vanish identically, which makes
    these states the oracle for ``dirac_apply``.
    """
    if classify_regime(config) is not Regime.POSITIVE:
        raise RegimeError("classical pair oracle implemented for omega_tilde > 0")
    hbar, c, m = config.hbar, config.c, config.m
    w = m * config.omega_tilde / hbar
    mc2 = config.rest_energy
    if m_angular >= 0:
        tilde_e = 2.0 * w * k
    else:
        tilde_e = w * (2.0 * k + 2.0 * abs(m_angular))
    e_val = sign * math.sqrt(mc2 * mc2 + 2.0 * hbar**2 * c**2 * tilde_e)

    def gaussian(rho):
        return np.exp(-0.5 * w * rho * rho)

    if m_angular >= 0:
        ma = m_angular

        def upper_fn(x, y):
            z = x + 1j * y
            rho2 = x * x + y * y
            return z**ma * gaussian(np.sqrt(rho2)) * laguerre_l(k, ma, w * rho2)

        if k == 0:
            lower = ScalarField2D.zero()
        else:
            coeff = 2j * hbar * c * w / (e_val + mc2)

            def lower_fn(x, y):
                z = x + 1j * y
                rho2 = x * x + y * y
                return coeff * z ** (ma + 1) * gaussian(np.sqrt(rho2)) * laguerre_l(
                    k - 1, ma + 1, w * rho2
                )

            lower = ScalarField2D(lower_fn)
    else:
        a = abs(m_angular)

        def upper_fn(x, y):
            zb = x - 1j * y
            rho2 = x * x + y * y
            return zb**a * gaussian(np.sqrt(rho2)) * laguerre_l(k, a, w * rho2)

        coeff = -2j * hbar * c * (k + a) / (e_val + mc2)

        def lower_fn(x, y):
            zb = x - 1j * y
            rho2 = x * x + y * y
            return coeff * zb ** (a - 1) * gaussian(np.sqrt(rho2)) * laguerre_l(
                k, a - 1, w * rho2
            )

        lower = ScalarField2D(lower_fn)

    upper = ScalarField2D(upper_fn)
    params = DunklParams(0.0, 0.0)
    epsilon = 1 if m_angular % 2 == 0 else -1
    n_label = abs(m_angular) / 2.0
    if epsilon == 1:
        sector = SectorLabel(1, 1)
        mode = AngularMode(sector, int(n_label), 1 if n_label == 0 else (1 if m_angular <= 0 else -1), params)
    else:
        sector = SectorLabel(1, -1)
        mode = AngularMode(sector, n_label, 1 if m_angular < 0 else -1, params)
    return SpinorSolution(
        upper=upper,
        lower=lower,
        energy=e_val,
        quantum=QuantumNumbers(k, max(k - 1, 0)),
        mode=mode,
        config=config,
    )


def coupled_reflection_eigenstate(
    component: Component,
    epsilon: int,
    n: float,
    kappa_sign: int,
    k: int,
    params: DunklParams,
    config: OscillatorConfig,
) -> tuple[ScalarField2D, float]:
    """Exact eigenstate of the full second-order operator, deformations on.

    Within a branch pair of fixed (epsilon, n) the angular-plus-reflection
    part of the operator is a constant 2x2 Hermitian matrix; its
    eigenvalues are kappa = +/- (2n + mu_x + mu_y) and its eigenvectors
    mix the two parity families with lambda-dependent weights. The
    returned field is the radial Laguerre profile times that eigenvector,
    and the returned number is the exact reduced energy, so
    ``kg_apply(field) - Et * field`` must vanish to O(h^2). Serves as the
    machinery oracle for the deformed case.
    """
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    mu_p = params.mu_plus
    regime = classify_regime(config)
    if regime is Regime.POSITIVE:
        omega_eff = config.omega_tilde
    elif regime is Regime.NEGATIVE:
        omega_eff = config.omega_bar
    else:
        raise RegimeError("bound reference states need a non-critical regime")
    w = config.m * config.omega_tilde / config.hbar
    abs_w = config.m * omega_eff / config.hbar

    if epsilon == 1:
        ni = int(round(n))
        lam0 = 2.0 * math.sqrt(ni * (ni + mu_p))
        a_ord = math.sqrt(lam0 * lam0 + mu_p * mu_p)
        if ni == 0:
            kappa = -mu_p if component is Component.UPPER else mu_p

            def ang(phi):
                return phi_pp(0, params, phi) + 0j

        else:
            kappa = kappa_sign * a_ord
            if component is Component.UPPER:
                weight = (mu_p + kappa) / lam0
            else:
                weight = (kappa - mu_p) / lam0
            c1 = 1.0 / math.sqrt(1.0 + weight * weight)

            def ang(phi):
                return c1 * (phi_pp(ni, params, phi) + 1j * weight * phi_mm(ni, params, phi))

    else:
        lam0 = 2.0 * math.sqrt((n + params.mu_x) * (n + params.mu_y))
        mu_m = params.mu_minus
        a_ord = math.sqrt(lam0 * lam0 + mu_m * mu_m)
        kappa = kappa_sign * a_ord
        if component is Component.UPPER:
            weight = -(kappa - mu_m) / lam0
        else:
            weight = -(kappa + mu_m) / lam0
        c1 = 1.0 / math.sqrt(1.0 + weight * weight)

        def ang(phi):
            return c1 * (phi_mp(n, params, phi) + 1j * weight * phi_pm(n, params, phi))

    radial = RadialProfile(
        order=a_ord,
        exponent=a_ord - mu_p,
        scale=config.m * omega_eff / config.hbar,
        index=k,
    )
    shift = -1.0 if component is Component.UPPER else 1.0
    tilde_e = abs_w * (2.0 * k + 1.0 + a_ord) + w * (kappa + shift)

    def fn(x, y):
        rho = np.hypot(x, y)
        phi = np.arctan2(y, x)
        return radial(rho) * ang(phi)

    return ScalarField2D(fn), tilde_e


# ---------------------------------------------------------------------------
# sweeps and suite runner
# ---------------------------------------------------------------------------

def sweep_bound_states(
    params: DunklParams,
    config: OscillatorConfig,
    n_max: float = 2,
    k_max: int = 2,
):
    """Yield every buildable bound state of the sweep, skipping invalid pairs."""
    regime = classify_regime(config)
    if regime is Regime.CRITICAL:
        raise RegimeError("bound-state sweep requires a non-critical regime")
    for sector in ALL_SECTORS:
        for mode in modes_for_sector(sector, params, n_max):
            for k in range(k_max + 1):
                try:
                    yield build_spinor(sector, mode, k, config, 1)
                except (InvalidPairError, NegativeRadicandError):
                    continue


def _critical_states(params: DunklParams, config: OscillatorConfig, n_max: float):
    mc2 = config.rest_energy
    for sector in ALL_SECTORS:
        for mode in modes_for_sector(sector, params, n_max):
            for e_val in (1.25 * mc2, 2.0 * mc2):
                yield free_particle(sector, mode, e_val, params, config)


def run_suite(
    params: DunklParams,
    config: OscillatorConfig,
    suite: str = "all",
    tol: float | None = None,
    h: float = 1e-4,
    threads: int = 1,
    n_max: float = 2,
    k_max: int = 2,
    angular_n_max: float = 4,
) -> VerificationReport:
    """Run one named verification suite (or 'all') and collect the records."""
    wanted = SUITE_NAMES if suite == "all" else (suite,)
    for name in wanted:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}")
    regime = classify_regime(config)
    jobs = []

    if "angular" in wanted:
        for sector in ALL_SECTORS:
            for mode in modes_for_sector(sector, params, angular_n_max):
                jobs.append(
                    lambda m=mode: check_angular_eigen(
                        m, tol=tol or DEFAULT_TOLS["angular"], h=h
                    ).records
                )
    if "ortho" in wanted:
        for sector in ALL_SECTORS:
            modes = modes_for_sector(sector, params, angular_n_max)
            jobs.append(
                lambda ms=modes: check_orthonormality(
                    ms, tol=tol or DEFAULT_TOLS["ortho"]
                ).records
            )
    if "kg" in wanted:
        if regime is Regime.CRITICAL:
            states = list(_critical_states(params, config, n_max))
        else:
            states = list(sweep_bound_states(params, config, n_max, k_max))
        for st in states:
            jobs.append(
                lambda s=st: check_kg_eigen(s, tol=tol or DEFAULT_TOLS["kg"], h=h).records
            )
    if "dirac" in wanted:
        if regime is Regime.CRITICAL:
            raise RegimeError("the dirac suite needs a non-critical regime")
        for st in sweep_bound_states(params, config, n_max, k_max):
            jobs.append(
                lambda s=st: check_dirac_system(
                    s, tol=tol or DEFAULT_TOLS["dirac"], h=h
                ).records
            )
    if "nrlimit" in wanted:
        if regime is Regime.CRITICAL:
            raise RegimeError("the nrlimit suite needs a non-critical regime")
        for sector in ALL_SECTORS:
            modes = modes_for_sector(sector, params, 1.5)
            mode = modes[-1]
            jobs.append(
                lambda sec=sector, m=mode: check_nonrelativistic_limit(
                    sec, m, 2, config, tol=tol or DEFAULT_TOLS["nrlimit"]
                ).records
            )

    report = VerificationReport(suite)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for recs in pool.map(lambda job: job(), jobs):
                report.extend(recs)
    else:
        for job in jobs:
            report.extend(job())
    report.sort()
    return report
