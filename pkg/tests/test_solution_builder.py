"""Spectra, pairing constraints, radial profiles, spinor assembly."""

import math

import numpy as np
import pytest

from dunkl_oscillator.angular_sector import (
    ALL_SECTORS,
    AngularMode,
    SectorLabel,
    lambda_eigenvalue,
    modes_for_sector,
)
from dunkl_oscillator.dunkl_calculus import (
    Component,
    DunklParams,
    angular_quadrature,
    gaussian_cutoff_radius,
    polar_quadrature,
    radial_quadrature,
    weighted_inner_product,
)
from dunkl_oscillator.solution_builder import (
    IntegralityError,
    InvalidPairError,
    NegativeRadicandError,
    OscillatorConfig,
    RadialProfile,
    Regime,
    RegimeError,
    build_radial,
    build_spinor,
    classify_regime,
    energy,
    free_particle,
    pair_radial_indices,
    radial_order,
)
from dunkl_oscillator.verification import classical_oscillator_b_energy

P11 = DunklParams(1.0, 1.0)
P00 = DunklParams(0.0, 0.0)
CFG_POS = OscillatorConfig(omega=1.0)
CFG_NEG = OscillatorConfig(omega=0.25, omega_c=2.5)  # omega_bar = 1
CFG_CRIT = OscillatorConfig(omega=1.0, omega_c=2.0)


class TestRegime:
    def test_classification(self):
        assert classify_regime(OscillatorConfig(omega=1.0, omega_c=0.0)) is Regime.POSITIVE
        assert classify_regime(OscillatorConfig(omega=1.0, omega_c=2.0)) is Regime.CRITICAL
        assert classify_regime(OscillatorConfig(omega=0.0, omega_c=1.0)) is Regime.NEGATIVE

    def test_near_zero_tolerance(self):
        cfg = OscillatorConfig(omega=1.0, omega_c=2.0 * (1.0 + 5e-15))
        assert classify_regime(cfg) is Regime.CRITICAL

    def test_config_validation(self):
        with pytest.raises(ValueError):
            OscillatorConfig(omega=-1.0)
        with pytest.raises(ValueError):
            OscillatorConfig(omega=1.0, m=0.0)


class TestPairing:
    def test_oscillator_dominated_regime(self):
        sector = SectorLabel(1, 1)
        assert pair_radial_indices(sector, Regime.POSITIVE, 3, P11) == 0
        for k in (0, 1, 2):
            with pytest.raises(InvalidPairError):
                pair_radial_indices(sector, Regime.POSITIVE, k, P11)

    def test_field_dominated_regime(self):
        assert pair_radial_indices(SectorLabel(1, 1), Regime.NEGATIVE, 0, P11) == 3

    def test_signed_offsets_per_sector(self):
        # k' = k - sigma - 1 with sigma = s_x mu_x + s_y mu_y
        p = DunklParams(2.0, 1.0)
        assert pair_radial_indices(SectorLabel(-1, -1), Regime.POSITIVE, 0, p) == 2
        assert pair_radial_indices(SectorLabel(1, -1), Regime.POSITIVE, 2, p) == 0
        assert pair_radial_indices(SectorLabel(-1, 1), Regime.POSITIVE, 0, p) == 0

    def test_half_odd_family(self):
        p = DunklParams(0.5, 0.5)
        assert pair_radial_indices(SectorLabel(1, 1), Regime.POSITIVE, 2, p) == 0

    def test_integrality_guard(self):
        with pytest.raises(IntegralityError):
            pair_radial_indices(SectorLabel(1, 1), Regime.POSITIVE, 3, DunklParams(0.3, 1.0))

    def test_critical_regime_has_no_pairs(self):
        with pytest.raises(RegimeError):
            pair_radial_indices(SectorLabel(1, 1), Regime.CRITICAL, 0, P11)


class TestEnergy:
    def test_rest_energy_state(self):
        mode = AngularMode(SectorLabel(1, 1), 0, 1, P00)
        assert energy(Component.UPPER, SectorLabel(1, 1), mode, 0, CFG_POS, 1) == 1.0

    def test_frozen_sqrt13(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P00)
        val = energy(Component.UPPER, SectorLabel(1, 1), mode, 1, CFG_POS, 1)
        assert val == pytest.approx(math.sqrt(13.0), rel=1e-15)

    def test_frozen_sqrt5_field_dominated(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P00)
        cfg = OscillatorConfig(omega=0.0, omega_c=2.0)  # omega_bar = 1
        val = energy(Component.UPPER, SectorLabel(1, 1), mode, 0, cfg, 1)
        assert val == pytest.approx(math.sqrt(5.0), rel=1e-15)

    def test_sign_branch(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        up = energy(Component.UPPER, SectorLabel(1, 1), mode, 2, CFG_POS, 1)
        dn = energy(Component.UPPER, SectorLabel(1, 1), mode, 2, CFG_POS, -1)
        assert dn == -up

    def test_upper_lower_agree_on_paired_indices(self):
        for params in (P00, P11, DunklParams(0.5, 0.5)):
            for cfg, regime in ((CFG_POS, Regime.POSITIVE), (CFG_NEG, Regime.NEGATIVE)):
                for sector in ALL_SECTORS:
                    for mode in modes_for_sector(sector, params, 3):
                        for k in range(4):
                            try:
                                kp = pair_radial_indices(sector, regime, k, params)
                            except InvalidPairError:
                                continue
                            e_up = energy(Component.UPPER, sector, mode, k, cfg, 1)
                            e_lo = energy(Component.LOWER, sector, mode, kp, cfg, 1)
                            assert e_lo == pytest.approx(e_up, rel=1e-14)
                            assert abs(e_up) >= cfg.rest_energy  # bound-state positivity

    def test_negative_radicand_flagged(self):
        mode = AngularMode(SectorLabel(1, 1), 1, -1, DunklParams(3.0, 3.0))
        cfg = OscillatorConfig(omega=50.0)
        with pytest.raises(NegativeRadicandError):
            energy(Component.UPPER, SectorLabel(1, 1), mode, 0, cfg, 1)

    def test_critical_raises(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        with pytest.raises(RegimeError):
            energy(Component.UPPER, SectorLabel(1, 1), mode, 0, CFG_CRIT, 1)


class TestClassicalReduction:
    def test_spectra_match_independent_formula(self):
        # mu = 0: compare against the textbook spectrum coded in terms of
        # the orbital number m = -lambda (upper component convention)
        for cfg in (CFG_POS, OscillatorConfig(omega=0.0, omega_c=2.0)):
            for sector in ALL_SECTORS:
                for mode in modes_for_sector(sector, P00, 3):
                    lam = lambda_eigenvalue(mode)
                    m_orb = int(round(-lam))
                    for k in range(4):
                        mine = energy(Component.UPPER, sector, mode, k, cfg, 1)
                        ref = classical_oscillator_b_energy(Component.UPPER, k, m_orb, cfg, 1)
                        assert mine == pytest.approx(ref, rel=1e-12)
                        mine_lo = energy(Component.LOWER, sector, mode, k, cfg, 1)
                        ref_lo = classical_oscillator_b_energy(Component.LOWER, k, m_orb, cfg, 1)
                        assert mine_lo == pytest.approx(ref_lo, rel=1e-12)


class TestRadialProfile:
    def test_ground_profile_is_gaussian_times_power(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P00)
        prof = build_radial(Component.UPPER, SectorLabel(1, 1), mode, 0, CFG_POS)
        assert prof.index == 0
        assert prof.exponent == pytest.approx(2.0)  # A = |lambda| = 2 at mu = 0
        rho = 1.3
        assert prof(rho) == pytest.approx(rho**2 * math.exp(-0.5 * rho**2), rel=1e-14)

    def test_value_at_origin(self):
        mode1 = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        prof1 = build_radial(Component.UPPER, SectorLabel(1, 1), mode1, 0, CFG_POS)
        assert prof1.exponent > 0 and prof1(0.0) == 0.0
        mode0 = AngularMode(SectorLabel(1, 1), 0, 1, P11)
        prof0 = build_radial(Component.UPPER, SectorLabel(1, 1), mode0, 0, CFG_POS)
        assert prof0.exponent == pytest.approx(0.0, abs=1e-14)
        assert prof0(0.0) == pytest.approx(1.0)

    def test_norm_squared_matches_quadrature(self):
        mode = AngularMode(SectorLabel(1, -1), 1.5, 1, P11)
        prof = build_radial(Component.UPPER, SectorLabel(1, -1), mode, 2, CFG_POS)
        rule = radial_quadrature(gaussian_cutoff_radius(prof.scale), 220)
        vals = prof(rule.nodes)
        quad = np.sum(rule.weights * vals * vals * rule.nodes ** (2 * P11.mu_plus + 1))
        assert quad == pytest.approx(prof.norm_squared(), rel=1e-12)

    def test_field_dominated_regime_uses_omega_bar(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        prof = build_radial(Component.UPPER, SectorLabel(1, 1), mode, 0, CFG_NEG)
        assert prof.scale == pytest.approx(CFG_NEG.omega_bar, rel=1e-15)


class TestBuildSpinor:
    def test_component_norms_sum_to_one(self):
        mode = AngularMode(SectorLabel(1, -1), 0.5, 1, P11)
        sol = build_spinor(SectorLabel(1, -1), mode, 1, CFG_POS, 1)
        assert sol.norm_upper + sol.norm_lower == pytest.approx(1.0, rel=1e-14)
        e, mc2 = sol.energy, 1.0
        assert sol.norm_upper == pytest.approx((e + mc2) / (2 * e), rel=1e-14)
        assert sol.norm_lower == pytest.approx((e - mc2) / (2 * e), rel=1e-14)

    def test_quadrature_norms_match_split(self):
        mode = AngularMode(SectorLabel(1, -1), 0.5, 1, P11)
        sol = build_spinor(SectorLabel(1, -1), mode, 1, CFG_POS, 1)
        rule = polar_quadrature(gaussian_cutoff_radius(1.0), 180, 48)
        nu = weighted_inner_product(sol.upper, sol.upper, P11, rule)
        nl = weighted_inner_product(sol.lower, sol.lower, P11, rule)
        assert nu.real == pytest.approx(sol.norm_upper, abs=1e-6)
        assert nl.real == pytest.approx(sol.norm_lower, abs=1e-6)

    def test_invalid_pair_propagates(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        with pytest.raises(InvalidPairError):
            build_spinor(SectorLabel(1, 1), mode, 0, CFG_POS, 1)

    def test_quantum_numbers_recorded(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        sol = build_spinor(SectorLabel(1, 1), mode, 3, CFG_POS, 1)
        assert sol.quantum.k == 3 and sol.quantum.k_prime == 0

    def test_antiparticle_branch_swaps_norms(self):
        mode = AngularMode(SectorLabel(1, -1), 0.5, 1, P11)
        sol = build_spinor(SectorLabel(1, -1), mode, 1, CFG_POS, -1)
        assert sol.energy < 0
        assert sol.norm_upper == pytest.approx(
            (sol.energy + 1.0) / (2 * sol.energy), rel=1e-14
        )
        assert sol.norm_upper < sol.norm_lower


class TestFreeParticle:
    def test_requires_critical_regime(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        with pytest.raises(RegimeError):
            free_particle(SectorLabel(1, 1), mode, 2.0, P11, CFG_POS)

    def test_requires_energy_above_rest(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        with pytest.raises(ValueError):
            free_particle(SectorLabel(1, 1), mode, 0.5, P11, CFG_CRIT)

    def test_threshold_state_vanishes(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        sol = free_particle(SectorLabel(1, 1), mode, 1.0, P11, CFG_CRIT)
        vals = sol.upper.eval_polar(np.array([0.5, 1.0, 2.0]), np.array([0.4, 1.1, 2.0]))
        assert np.max(np.abs(vals)) <= 1e-14

    def test_small_radius_scaling_exponent(self):
        # field * rho^{mu_+} must scale like rho^A near the origin: the
        # Bessel order equals the radial order A of the mode
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P11)
        sol = free_particle(SectorLabel(1, 1), mode, 2.0, P11, CFG_CRIT)
        a_ord = radial_order(mode)
        rho = np.array([1e-4, 2e-4])
        phi = np.full_like(rho, 0.7)
        vals = np.abs(sol.upper.eval_polar(rho, phi)) * rho**P11.mu_plus
        slope = math.log(vals[1] / vals[0]) / math.log(2.0)
        assert slope == pytest.approx(a_ord, abs=1e-3)

    def test_classical_order_two(self):
        mode = AngularMode(SectorLabel(1, 1), 1, 1, P00)
        assert radial_order(mode) == pytest.approx(2.0, rel=1e-15)
