import math

import numpy as np
import pytest

from fourierpos.basis import Label, LabeledFunction, eval_phi_1d, eval_phi_radial, psi_fn
from fourierpos.detectors import PoissonDetector1D, PoissonDetector2D
from fourierpos.detectors.poisson import CharScan1D, CharScan2D, alias_sum_1d, angular_spread, char_fn_1d, \
    char_fn_2d, char_grid_1d, char_grid_2d, detect_poisson_1d, detect_poisson_2d, in_window, reconstruct_phi_1d, \
    reconstruct_phi_2d, truncation_1d, truncation_2d, R_1D
from fourierpos.errors import DomainError
from fourierpos.oracle import gaussian


class TestTruncation:
    def test_orders(self):
        assert truncation_1d(10.0, 0.5) == 20
        assert truncation_1d(10.0, 0.3) == 34
        assert truncation_2d(40.0, 0.5) == 81
        assert truncation_2d(40.0, 0.3) == 134

    def test_window(self):
        assert in_window(0.5, 20, 10.0)
        assert not in_window(0.5, 12, 10.0)
        assert not in_window(1.0, 40, 40.0)
        assert in_window(0.5, 80, 40.0)
        assert not in_window(math.pi / 6, 100, 10.0)

    def test_scan_validation(self):
        with pytest.raises(DomainError):
            CharScan1D(R=0.0)
        with pytest.raises(DomainError):
            CharScan1D(dr_grid=(0.0, 1.0, 5))
        with pytest.raises(DomainError):
            CharScan2D(angles=1)


class TestCharFn1D:
    def test_matches_alias_sum(self, pn_1d):
        psi, phi = psi_fn(pn_1d), lambda s: eval_phi_1d(pn_1d, s)
        s = np.linspace(0, 8, 81)
        for dr in (0.2, 0.5, 0.8):
            np.testing.assert_allclose(char_fn_1d(psi, dr, s), alias_sum_1d(phi, dr, s, 40), atol=1e-10)

    def test_even_and_periodic(self, pp_1d):
        psi = psi_fn(pp_1d)
        s = np.linspace(0, 3, 31)
        np.testing.assert_allclose(char_fn_1d(psi, 0.5, -s), char_fn_1d(psi, 0.5, s), atol=1e-14)
        np.testing.assert_allclose(char_fn_1d(psi, 0.5, s + 4 * math.pi), char_fn_1d(psi, 0.5, s), atol=1e-12)

    def test_grid_shape(self, gaussian_1d):
        scan = CharScan1D(dr_grid=(0.2, 1.0, 5), s_grid=(0.0, 4.0, 11))
        dr, s, F = char_grid_1d(psi_fn(gaussian_1d), scan)
        assert F.shape == (5, 11)
        assert np.all(F > 0)

    def test_invalid_step(self, gaussian_1d):
        with pytest.raises(DomainError):
            char_fn_1d(psi_fn(gaussian_1d), 0.0, 1.0)


class TestDetectPoisson1D:
    def test_pn_1d(self, pn_1d):
        psi = psi_fn(pn_1d)
        v = detect_poisson_1d(psi)
        assert v.detected and v.detector == "poisson1d"
        assert v.value == pytest.approx(-0.0821, abs=1e-3)
        assert char_fn_1d(psi, v.witness["dr"], v.witness["s"]) == pytest.approx(v.value, abs=1e-12)

    def test_pp_1d(self, pp_1d):
        v = detect_poisson_1d(psi_fn(pp_1d))
        assert not v.detected
        assert v.value > -1e-12

    def test_detector_class(self, pn_1d):
        det = PoissonDetector1D(dr_grid={"start": 0.1, "stop": 1.0, "steps": 19})
        assert det(LabeledFunction(pn_1d, Label.PN, 0)).detected


class TestReconstruct1D:
    def test_pn_1d_in_window(self, pn_1d):
        s = np.linspace(0, 6, 301)
        rec = reconstruct_phi_1d(psi_fn(pn_1d), 0.5, 20, s)
        assert rec.window_ok
        assert np.max(np.abs(rec.value - eval_phi_1d(pn_1d, s))) < 1e-4

    def test_error_decreases_with_K(self, pn_1d):
        s = np.linspace(0, 6, 301)
        exact = eval_phi_1d(pn_1d, s)
        errs = [np.max(np.abs(reconstruct_phi_1d(psi_fn(pn_1d), 0.5, K, s).value - exact))
                for K in (10, 20, 40, 60)]
        assert all(b <= a + 1e-12 for a, b in zip(errs, errs[1:]))

    def test_gaussian_window(self):
        s = np.linspace(0, 6, 61)
        inside = reconstruct_phi_1d(gaussian, 0.5, 20, s)
        assert inside.window_ok
        err_in = np.max(np.abs(inside.value - gaussian(s)))
        assert err_in <= 1e-8

        coarse = reconstruct_phi_1d(gaussian, 1.0, 10, s)
        short = reconstruct_phi_1d(gaussian, 0.5, 4, s)
        assert not coarse.window_ok and not short.window_ok
        assert np.max(np.abs(coarse.value - gaussian(s))) >= 1e3 * max(err_in, 1e-12)
        assert np.max(np.abs(short.value - gaussian(s))) >= 1e3 * max(err_in, 1e-12)

    def test_converges_at_fixed_support(self, pn_1d):
        # r K = R_1D throughout, so only the alias distance 2 pi / r changes
        s = np.linspace(0, 2, 41)
        exact = eval_phi_1d(pn_1d, s)
        errs = [np.max(np.abs(reconstruct_phi_1d(psi_fn(pn_1d), R_1D / K, K, s).value - exact)) for K in (5, 10, 20)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[0] > 1e-2 and errs[2] < 1e-8

    def test_outside_window(self, pn_1d):
        rec = reconstruct_phi_1d(psi_fn(pn_1d), 0.5, 12, 1.0)
        assert not rec.window_ok
        assert isinstance(rec.value, float)

    def test_invalid(self, pn_1d):
        with pytest.raises(DomainError):
            reconstruct_phi_1d(psi_fn(pn_1d), 0.0, 10, 1.0)
        with pytest.raises(DomainError):
            reconstruct_phi_1d(psi_fn(pn_1d), 0.5, 0, 1.0)


class TestCharFn2D:
    def test_gaussian_positive(self):
        a, g, F = char_grid_2d(gaussian, 0.5, angles=33, R=12.0)
        assert F.shape == (33, 33)
        assert np.all(F > 0)

    def test_pointwise_matches_grid(self, pn_radial):
        psi = psi_fn(pn_radial)
        a, g, F = char_grid_2d(psi, 0.5, angles=17)
        assert char_fn_2d(psi, 0.5, a[3], g[5]) == pytest.approx(F[3, 5], rel=1e-10, abs=1e-12)
        np.testing.assert_allclose(char_fn_2d(psi, 0.5, a, g), np.diag(F), rtol=1e-10, atol=1e-12)

    def test_origin_only(self):
        origin = lambda x: np.where(np.asarray(x) == 0, 1.0, 0.0)
        for a, g in ((0.0, 0.0), (0.7, 2.1), (math.pi, 1.0)):
            assert char_fn_2d(origin, 0.4, a, g) == pytest.approx(0.4 ** 2 / (2 * math.pi), rel=1e-12)
        assert 0.4 ** 2 / (2 * math.pi) == pytest.approx(0.0254648, abs=1e-7)

    def test_gaussian_single_alias(self):
        # one alias term: phi((alpha, gamma) / dr)
        assert char_fn_2d(gaussian, 0.3, 0.6, 0.8) == pytest.approx(math.exp(-0.5 * (2.0 ** 2 + (0.8 / 0.3) ** 2)),
                                                                    abs=1e-5)
        assert char_fn_2d(gaussian, 0.3, 0.6, 0.8) == pytest.approx(0.00386592, abs=1e-5)

    def test_symmetric_in_angles(self, pp_radial):
        a, g, F = char_grid_2d(psi_fn(pp_radial), 0.6, angles=17)
        np.testing.assert_allclose(F, F.T, rtol=1e-12, atol=1e-12)

    def test_angular_spread(self, pn_radial):
        assert angular_spread(psi_fn(pn_radial), 0.5, 0.5) < 0.10
        with pytest.raises(DomainError):
            angular_spread(psi_fn(pn_radial), 1.0, 4.0)


class TestDetectPoisson2D:
    def test_pn_radial(self, pn_radial):
        v = detect_poisson_2d(psi_fn(pn_radial))
        assert v.detected and v.detector == "poisson2d"
        assert v.value < -0.8
        assert set(v.witness) == {"dr", "alpha", "gamma"}

    def test_pp_radial(self, pp_radial):
        v = detect_poisson_2d(psi_fn(pp_radial))
        assert not v.detected
        assert v.value > 0

    def test_detector_class(self, pn_radial):
        det = PoissonDetector2D(dr_grid=(0.4, 0.6, 3), angles=65)
        assert det(LabeledFunction(pn_radial, Label.PN, 0)).detected


class TestReconstruct2D:
    def test_pn_radial_inside_window(self, pn_radial):
        s = np.asarray([0.336, 0.5, 0.73, 1.0])
        rec = reconstruct_phi_2d(psi_fn(pn_radial), 0.5, 80, s, 0.0)
        assert rec.window_ok
        assert rec.value[0] < 0 and rec.value[2] < 0
        assert rec.value[1] > 0 and rec.value[3] > 0
        np.testing.assert_allclose(rec.value, eval_phi_radial(pn_radial, s), atol=0.2)

    def test_gaussian_converges_at_fixed_support(self):
        s = np.linspace(0, 1, 11)
        errs = [np.max(np.abs(reconstruct_phi_2d(gaussian, 10.0 / K, K, s, 0.0, R=10.0).value - gaussian(s)))
                for K in (5, 10, 20)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[0] > 1e-2 and errs[1] < 1e-5

    def test_sign_pattern_on_grid(self, pn_radial):
        s1, s2 = np.meshgrid(np.linspace(0.0, 1.2, 13), np.linspace(0.0, 1.2, 13))
        exact = eval_phi_radial(pn_radial, np.hypot(s1, s2))
        rec = reconstruct_phi_2d(psi_fn(pn_radial), 0.5, 80, s1, s2)
        assert rec.window_ok
        clear = np.abs(exact) > 0.25
        assert np.any(clear & (exact < 0)) and np.any(clear & (exact > 0))
        np.testing.assert_array_equal(np.sign(rec.value[clear]), np.sign(exact[clear]))

    def test_pn_radial_coarse(self, pn_radial):
        s = np.asarray([0.336, 0.73])
        rec = reconstruct_phi_2d(psi_fn(pn_radial), 1.0, 40, s, 0.0)
        assert not rec.window_ok
        assert rec.value[0] < 0
        assert rec.value[1] > 0
