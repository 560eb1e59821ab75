import numpy as np
import pytest

from fourierpos.basis import Kind, eval_phi_1d, eval_phi_radial, psi_fn
from fourierpos.errors import DomainError, KindError
from fourierpos.oracle import DEFAULT_1D, QuadratureSpec, Rule, fourier_1d, gaussian, gaussian_pair, hankel, \
    poisson_identity_residual

from .conftest import random_unit


class TestQuadratureSpec:
    def test_nodes(self):
        q = QuadratureSpec(1.0, 0.25)
        np.testing.assert_allclose(q.nodes, [0.0, 0.25, 0.5, 0.75, 1.0])
        assert q.rule is Rule.SIMPSON
        assert QuadratureSpec(1.0, 0.25, "trapezoid").rule is Rule.TRAPEZOID

    def test_invalid(self):
        with pytest.raises(DomainError):
            QuadratureSpec(0.0, 0.1)
        with pytest.raises(DomainError):
            QuadratureSpec(1.0, 2.0)
        with pytest.raises(DomainError):
            QuadratureSpec(1.0, -1e-3)


class TestFourier1D:
    def test_gaussian_is_self_dual(self):
        s = np.linspace(0, 6, 31)
        np.testing.assert_allclose(fourier_1d(gaussian, s), gaussian(s), atol=1e-10)

    def test_matches_closed_form(self, pn_1d):
        s = np.linspace(0, 6, 61)
        np.testing.assert_allclose(fourier_1d(psi_fn(pn_1d), s), eval_phi_1d(pn_1d, s), atol=1e-8)

    def test_random_functions(self, rng):
        s = np.linspace(0, 8, 33)
        for cv in random_unit(rng, Kind.HERMITE_1D, 50):
            np.testing.assert_allclose(fourier_1d(psi_fn(cv), s), eval_phi_1d(cv, s), atol=1e-6)

    def test_refinement_is_stable(self, pp_1d):
        psi = psi_fn(pp_1d)
        a = fourier_1d(psi, 1.3)
        b = fourier_1d(psi, 1.3, DEFAULT_1D.halved())
        assert isinstance(a, float)
        assert abs(a - b) < 1e-9

    def test_trapezoid_halving_agrees(self, pn_1d):
        s = np.linspace(0, 6, 25)
        coarse = QuadratureSpec(12.0, 1e-2, "trapezoid")
        a = fourier_1d(psi_fn(pn_1d), s, coarse)
        b = fourier_1d(psi_fn(pn_1d), s, coarse.halved())
        np.testing.assert_allclose(a, b, atol=1e-10)
        np.testing.assert_allclose(b, eval_phi_1d(pn_1d, s), atol=1e-10)


class TestHankel:
    def test_gaussian_is_self_dual(self):
        s = np.linspace(0, 4, 21)
        np.testing.assert_allclose(hankel(gaussian, s), gaussian(s), atol=1e-9)

    def test_matches_closed_form(self, pn_radial, pp_radial):
        s = np.asarray([0.0, 0.336, 0.5, 0.73, 1.0, 1.45, 2.0, 3.0])
        for cv in (pp_radial, pn_radial):
            np.testing.assert_allclose(hankel(psi_fn(cv), s), eval_phi_radial(cv, s), atol=1e-7)

    def test_random_functions(self, rng):
        s = np.asarray([0.0, 0.2, 0.5, 1.0, 2.0, 4.0])
        for cv in random_unit(rng, Kind.LAGUERRE_RADIAL, 50):
            np.testing.assert_allclose(hankel(psi_fn(cv), s), eval_phi_radial(cv, s), atol=1e-5)

    def test_exact_values(self, pn_radial):
        assert eval_phi_radial(pn_radial, 0.0) == pytest.approx(22.46, abs=0.1)
        assert eval_phi_radial(pn_radial, 0.336) == pytest.approx(-1.135, abs=0.01)
        assert eval_phi_radial(pn_radial, 0.73) < 0

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            hankel(gaussian, -0.5)


class TestPoissonIdentity:
    def test_gaussian_pair(self):
        s = np.linspace(-3, 3, 13)
        assert np.max(poisson_identity_residual(gaussian_pair(), 0.5, s)) < 1e-12

    def test_hermite_functions(self, pn_1d, rng):
        s = np.linspace(0, 8, 33)
        for cv in [pn_1d] + random_unit(rng, Kind.HERMITE_1D, 20):
            for r in (0.3, 0.7, 1.1, 1.5):
                assert np.max(poisson_identity_residual(cv, r, s)) < 1e-10

    def test_scalar_residual(self, pp_1d):
        out = poisson_identity_residual(pp_1d, 0.8, 0.4)
        assert isinstance(out, float) and out < 1e-10

    def test_invalid(self, pp_1d, pp_radial):
        with pytest.raises(DomainError):
            poisson_identity_residual(pp_1d, 0.0, 1.0)
        with pytest.raises(KindError):
            poisson_identity_residual(pp_radial, 0.5, 1.0)

    def test_residual_shrinks_with_K(self):
        # s = 0: every dropped comb term has the same sign
        res = [poisson_identity_residual(gaussian_pair(), 0.5, 0.0, K=K) for K in (2, 4, 6, 8, 10, 12)]
        assert all(b < a for a, b in zip(res, res[1:]))
        assert res[-1] < 1e-8

    def test_residual_shrinks_with_H(self):
        res = [poisson_identity_residual(gaussian_pair(), 2.5, 0.0, H=H) for H in (0, 1, 2)]
        assert all(b < a for a, b in zip(res, res[1:]))
        assert res[0] == pytest.approx(2 * np.exp(-0.5 * (2 * np.pi / 2.5) ** 2), rel=1e-3)
        assert res[-1] < 1e-10
