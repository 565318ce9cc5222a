"""Angular eigenbasis: normalization, reflection signatures, eigen-residuals.

The decisive check is numeric: applying the angular operator to each
constructed mode must reproduce branch * |lambda| pointwise, which pins
down the sign pairing between the imaginary combination and the branch.
"""

import math

import numpy as np
import pytest

from dunkl_oscillator.angular_sector import (
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
from dunkl_oscillator.dunkl_calculus import (
    DunklParams,
    ScalarField2D,
    angular_j,
    angular_quadrature,
    weighted_inner_product,
)
from dunkl_oscillator.special_functions import DomainError

P11 = DunklParams(1.0, 1.0)
P21 = DunklParams(2.0, 1.0)


def _angular_field(fn):
    return ScalarField2D.from_polar(lambda rho, phi: np.asarray(fn(phi)) + 0j)


class TestSectorLabel:
    def test_epsilon(self):
        assert SectorLabel(1, 1).epsilon == 1
        assert SectorLabel(-1, 1).epsilon == -1

    def test_validation(self):
        with pytest.raises(ValueError):
            SectorLabel(0, 1)


class TestAngularMode:
    def test_integer_requirement(self):
        with pytest.raises(ValueError):
            AngularMode(SectorLabel(1, 1), 0.5, 1, P11)
        with pytest.raises(ValueError):
            AngularMode(SectorLabel(1, -1), 1, 1, P11)

    def test_n_zero_is_single_even_mode(self):
        with pytest.raises(ValueError):
            AngularMode(SectorLabel(-1, -1), 0, 1, P11)
        with pytest.raises(ValueError):
            AngularMode(SectorLabel(1, 1), 0, -1, P11)
        mode = AngularMode(SectorLabel(1, 1), 0, 1, P11)
        assert lambda_eigenvalue(mode) == 0.0

    def test_mode_listing(self):
        assert len(modes_for_sector(SectorLabel(1, 1), P11, 4)) == 9
        assert len(modes_for_sector(SectorLabel(-1, -1), P11, 4)) == 8
        assert len(modes_for_sector(SectorLabel(1, -1), P11, 4)) == 8


class TestPhiFamilies:
    def test_constant_mode_value(self):
        # Phi_0^{++} for mu = (1,1) is the constant 2/sqrt(pi)
        assert phi_pp(0, P11, 0.37) == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-13)

    def test_odd_odd_vanishes_at_zero_index(self):
        assert phi_mm(0, P11, 0.9) == 0.0

    def test_prefactor_zeros(self):
        assert phi_mp(0.5, P11, math.pi / 2) == pytest.approx(0.0, abs=1e-15)
        assert phi_pm(0.5, P11, 0.0) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("params", [P11, P21, DunklParams(0.5, 0.5)])
    def test_normalization_all_families(self, params):
        rule = angular_quadrature()
        cases = [
            (lambda phi: phi_pp(2, params, phi)),
            (lambda phi: phi_mm(3, params, phi)),
            (lambda phi: phi_mp(1.5, params, phi)),
            (lambda phi: phi_pm(2.5, params, phi)),
        ]
        for fn in cases:
            fld = _angular_field(fn)
            val = weighted_inner_product(fld, fld, params, rule)
            assert val.real == pytest.approx(1.0, abs=1e-10)

    def test_reflection_signatures(self):
        # Phi^{s_x s_y}(pi - phi) = s_x Phi(phi), Phi(-phi) = s_y Phi(phi)
        phis = np.linspace(0.1, 2.9, 8)
        cases = [
            (lambda p: phi_pp(2, P21, p), 1, 1),
            (lambda p: phi_mm(2, P21, p), -1, -1),
            (lambda p: phi_mp(1.5, P21, p), -1, 1),
            (lambda p: phi_pm(1.5, P21, p), 1, -1),
        ]
        for fn, sx, sy in cases:
            assert np.allclose(fn(np.pi - phis), sx * fn(phis), atol=1e-12)
            assert np.allclose(fn(-phis), sy * fn(phis), atol=1e-12)

    def test_gamma_domain_guard(self):
        with pytest.raises(DomainError):
            phi_pp(0, DunklParams(-0.5, 0.0), 0.3)


class TestLambdaEigenvalue:
    def test_frozen_values(self):
        assert lambda_eigenvalue(AngularMode(SectorLabel(1, 1), 0, 1, P11)) == 0.0
        assert lambda_eigenvalue(
            AngularMode(SectorLabel(1, 1), 2, 1, P11)
        ) == pytest.approx(2.0 * math.sqrt(8.0), rel=1e-15)
        half = DunklParams(0.5, 0.5)
        assert lambda_eigenvalue(
            AngularMode(SectorLabel(1, -1), 0.5, -1, half)
        ) == pytest.approx(-2.0, rel=1e-15)


class TestEigenfunctions:
    def test_n_zero_is_real_constant_family(self):
        mode = AngularMode(SectorLabel(1, 1), 0, 1, P11)
        fld = f_eigenfunction(mode)
        vals = fld.eval_polar(np.ones(5), np.linspace(0.2, 6.0, 5))
        assert np.allclose(vals.imag, 0.0)
        assert np.allclose(vals, vals[0])

    @pytest.mark.parametrize("sector", ALL_SECTORS)
    @pytest.mark.parametrize("params", [P11, P21, DunklParams(0.5, 1.5)])
    def test_sign_pairing_via_eigen_residual(self, sector, params):
        # the numeric check that branch b really carries eigenvalue b*|lambda|
        phis = np.linspace(0.13, 2 * np.pi, 17, endpoint=False)
        rho = np.ones_like(phis)
        for mode in modes_for_sector(sector, params, 2):
            fld = f_eigenfunction(mode)
            lam = lambda_eigenvalue(mode)
            vals = fld.eval_polar(rho, phis)
            applied = angular_j(fld, (rho, phis), params)
            assert np.max(np.abs(applied - lam * vals)) <= 1e-6

    def test_double_reflection_parity(self):
        phis = np.linspace(0.1, 3.0, 9)
        for sector, params in ((SectorLabel(1, 1), P21), (SectorLabel(1, -1), P21)):
            for mode in modes_for_sector(sector, params, 2):
                fld = f_eigenfunction(mode)
                lhs = fld.eval_polar(np.ones_like(phis), np.pi + phis)
                rhs = sector.epsilon * fld.eval_polar(np.ones_like(phis), phis)
                assert np.allclose(lhs, rhs, atol=1e-12)

    def test_single_reflection_swaps_branches(self):
        # R_x F^{(b)} = F^{(-b)} for epsilon = +1 and -F^{(-b)} for
        # epsilon = -1 (R_y gives +F^{(-b)} there): the individual
        # reflections connect the two lambda branches rather than acting
        # as scalars on a mode.
        phis = np.linspace(0.1, 3.0, 9)
        ones = np.ones_like(phis)
        plus = f_eigenfunction(AngularMode(SectorLabel(1, 1), 2, 1, P21))
        minus = f_eigenfunction(AngularMode(SectorLabel(1, 1), 2, -1, P21))
        assert np.allclose(plus.eval_polar(ones, np.pi - phis),
                           minus.eval_polar(ones, phis), atol=1e-12)
        fplus = f_eigenfunction(AngularMode(SectorLabel(1, -1), 1.5, 1, P21))
        fminus = f_eigenfunction(AngularMode(SectorLabel(1, -1), 1.5, -1, P21))
        assert np.allclose(fplus.eval_polar(ones, np.pi - phis),
                           -fminus.eval_polar(ones, phis), atol=1e-12)
        assert np.allclose(fplus.eval_polar(ones, -phis),
                           fminus.eval_polar(ones, phis), atol=1e-12)

    def test_classical_limit_is_pure_phase(self):
        # mu = 0: modes reduce to exp(i m phi) with m = -lambda
        params = DunklParams(0.0, 0.0)
        mode = AngularMode(SectorLabel(1, 1), 1, 1, params)
        lam = lambda_eigenvalue(mode)
        fld = f_eigenfunction(mode)
        phis = np.linspace(0.0, 6.0, 13)
        vals = fld.eval_polar(np.ones_like(phis), phis)
        expect = vals[0] * np.exp(-1j * lam * phis)
        assert np.allclose(vals, expect, atol=1e-12)

    def test_orthonormal_within_sector(self):
        rule = angular_quadrature()
        for sector in ALL_SECTORS:
            modes = modes_for_sector(sector, P11, 4)
            fields = [f_eigenfunction(m) for m in modes]
            gram = np.array(
                [[weighted_inner_product(a, b, P11, rule) for b in fields] for a in fields]
            )
            assert np.max(np.abs(gram - np.eye(len(modes)))) <= 1e-8

    def test_eigen_residual_small_modes(self):
        # absolute residual <= 100 h^2 holds for the low modes; for large
        # n and mu the prefactor |F'''|/6 exceeds 100 and only the
        # relative residual stays at the O(h^2) scale (see acceptance)
        h = 1e-4
        phis = (np.arange(64) + 0.5) * 2 * np.pi / 64
        ones = np.ones_like(phis)
        for mx in (0.0, 0.5, 1.0, 2.0):
            for my in (0.0, 0.5, 1.0, 2.0):
                params = DunklParams(mx, my)
                for sector in ALL_SECTORS:
                    for mode in modes_for_sector(sector, params, 2):
                        fld = f_eigenfunction(mode)
                        lam = lambda_eigenvalue(mode)
                        vals = fld.eval_polar(ones, phis)
                        res = np.max(np.abs(angular_j(fld, (ones, phis), params, h) - lam * vals))
                        assert res <= 100.0 * h * h, (mode, res)
