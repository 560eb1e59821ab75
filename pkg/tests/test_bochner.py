import math

import numpy as np
import pytest

from fourierpos.basis import CoefficientVector, Kind, Label, LabeledFunction, psi_fn
from fourierpos.detectors import PointSetDetector, SweepGrid, ToeplitzDetector
from fourierpos.detectors.bochner import BETA_GRID, POOL_SIZE, PointSet2D, R_GRID, ToeplitzProbe, \
    bochner_matrix_2d, detect_1d, detect_2d, eigen_curve_1d, eigen_curve_2d, inequalities_3x3, lattice_inequalities_3x3, \
    lattice_points, point_pool, toeplitz_determinant_sign, toeplitz_matrix
from fourierpos.errors import DegenerateInputError, DomainError, UsageError
from fourierpos.oracle import gaussian
from fourierpos.specialfn import min_eigenvalue

from .conftest import random_unit


def spike(x):
    return np.where(np.asarray(x) == 1.0, 1.0, 0.0)


def radial_unit(i):
    c = np.zeros(9)
    c[i] = 1.0
    return CoefficientVector(Kind.LAGUERRE_RADIAL, tuple(c))


class TestSweepGrid:
    def test_parse_and_values(self):
        g = SweepGrid.parse({"start": 0.05, "stop": 3.0, "steps": 120, "spacing": "log"})
        assert g == R_GRID
        v = g.values
        assert len(v) == 120 and v[0] == pytest.approx(0.05) and v[-1] == pytest.approx(3.0)
        np.testing.assert_allclose(v[1:] / v[:-1], v[1] / v[0])
        np.testing.assert_allclose(SweepGrid.parse((0.0, 1.0, 5)).values, [0, 0.25, 0.5, 0.75, 1.0])
        assert list(SweepGrid(0.5, 0.5, 1).values) == [0.5]

    def test_invalid(self):
        with pytest.raises(DomainError):
            SweepGrid(1.0, 0.5, 10)
        with pytest.raises(DomainError):
            SweepGrid(0.0, 1.0, 10, "log")
        with pytest.raises(DomainError):
            SweepGrid(0.0, 1.0, 0)


class TestToeplitz:
    def test_matrix_entries(self):
        m = toeplitz_matrix(gaussian, ToeplitzProbe(4, 0.5))
        assert m.order == 4
        assert m.entries[0, 3] == pytest.approx(math.exp(-0.5 * 1.5 ** 2))
        np.testing.assert_array_equal(np.diag(m.entries), np.ones(4))

    def test_probe_validation(self):
        with pytest.raises(DomainError):
            ToeplitzProbe(1, 0.5)
        with pytest.raises(DomainError):
            ToeplitzProbe(5, 0.0)

    def test_determinant_sign_misses_even_count(self):
        probe = ToeplitzProbe(4, 1.0)
        assert toeplitz_determinant_sign(spike, probe) == 1
        assert min_eigenvalue(toeplitz_matrix(spike, probe)) == pytest.approx(-(1 + math.sqrt(5)) / 2, abs=1e-12)

    def test_constant_is_rank_one(self):
        ones = lambda x: np.ones_like(np.asarray(x, dtype=np.float64))
        for k in (2, 5, 10):
            assert min_eigenvalue(toeplitz_matrix(ones, ToeplitzProbe(k, 0.5))) == pytest.approx(0.0, abs=1e-12)
        ps = PointSet2D(point_pool(0)[:20])
        assert min_eigenvalue(bochner_matrix_2d(ones, ps)) == pytest.approx(0.0, abs=1e-12)

    def test_gaussian_is_positive_definite(self):
        r, lam = eigen_curve_1d(gaussian, 10)
        assert np.all(lam > -1e-12)

    def test_order_interlacing(self, rng):
        for cv in random_unit(rng, Kind.HERMITE_1D, 100):
            _, lam5 = eigen_curve_1d(psi_fn(cv), 5)
            _, lam10 = eigen_curve_1d(psi_fn(cv), 10)
            assert np.all(lam10 <= lam5 + 1e-12)

    def test_pn_1d(self, pn_1d):
        v10 = detect_1d(psi_fn(pn_1d), 10)
        assert v10.detected and v10.detector == "toeplitz10" and v10.order == 10
        assert v10.value < -0.03
        assert 1.4 < v10.witness["r"] < 2.0
        assert not detect_1d(psi_fn(pn_1d), 5).detected

    def test_pp_1d_not_detected(self, pp_1d):
        for k in (5, 10):
            assert not detect_1d(psi_fn(pp_1d), k).detected

    def test_methods_agree(self, pn_1d):
        a = detect_1d(psi_fn(pn_1d), 10, method="eigh")
        b = detect_1d(psi_fn(pn_1d), 10, method="jacobi")
        assert a.detected == b.detected
        assert a.value == pytest.approx(b.value, abs=1e-10)


class TestThreePoint:
    def test_gaussian_passes(self):
        for r in (0.1, 0.5, 1.0, 2.0):
            assert inequalities_3x3(gaussian, r).passed
            assert lattice_inequalities_3x3(gaussian, r).passed

    def test_failures_are_named(self):
        assert inequalities_3x3(lambda x: 1.0 + x * (2.0 - x), 1.0).failed == "psi0_gt_psi1"
        assert inequalities_3x3(lambda x: 1.0 if x < 1.5 else 2.0, 0.5).failed == "psi0_gt_psi1"
        values = {0.0: 1.0, 1.0: 0.9, 2.0: 0.5}
        check = inequalities_3x3(values.get, 1.0)
        assert check.failed == "major" and check.delta < 0

    def test_agrees_with_eigenvalue(self, rng):
        for cv in random_unit(rng, Kind.HERMITE_1D, 20):
            psi = psi_fn(cv)
            if psi(0.0) <= 0:
                continue
            for r in (0.3, 0.9, 1.7):
                lam = min_eigenvalue(toeplitz_matrix(psi, ToeplitzProbe(3, r)))
                assert inequalities_3x3(psi, r).passed == (lam > 0)

    def test_degenerate(self):
        with pytest.raises(DegenerateInputError):
            inequalities_3x3(lambda x: 0.0 * x, 1.0)
        with pytest.raises(DomainError):
            inequalities_3x3(gaussian, 0.0)


class TestPointSets:
    def test_lattice_points(self):
        np.testing.assert_array_equal(lattice_points(2), [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1], [2, 0]])
        assert len(lattice_points(4, r=0.5)) == 15

    def test_pool(self):
        a = point_pool(3)
        assert a.shape == (POOL_SIZE, 2)
        assert np.all(np.abs(a) <= 20.0)
        np.testing.assert_array_equal(a, point_pool(3))
        assert not np.array_equal(a, point_pool(4))
        with pytest.raises(ValueError):
            a[0, 0] = 0.0

    def test_point_set_validation(self):
        ps = PointSet2D([[0, 0], [1, 0], [0, 0]])
        assert ps.degenerate and len(ps) == 3
        assert not ps.prefix(2).degenerate
        with pytest.raises(DomainError):
            PointSet2D([[0, 25]])
        with pytest.raises(DomainError):
            PointSet2D([[0, 0]], beta=0.0)

    def test_matrix(self):
        ps = PointSet2D([[0, 0], [3, 4]], beta=0.5)
        m = bochner_matrix_2d(gaussian, ps)
        assert m.entries[0, 1] == pytest.approx(math.exp(-0.5 * 2.5 ** 2))

    def test_repeated_points_warn(self, capsys):
        bochner_matrix_2d(gaussian, PointSet2D([[0, 0], [1, 0], [0, 0]]))
        out = capsys.readouterr().out
        assert "WARN" in out and "repeated" in out

        bochner_matrix_2d(gaussian, PointSet2D([[0, 0], [1, 0]]))
        assert "repeated" not in capsys.readouterr().out

        pool = np.concatenate([point_pool(0)[:5], point_pool(0)[:5]])
        v = detect_2d(gaussian, 10, pool=pool)
        assert "repeated" in capsys.readouterr().out
        assert not v.detected

    def test_prefix_interlacing(self, pn_radial):
        pool = point_pool(0)
        psi = psi_fn(pn_radial)
        _, lam20 = eigen_curve_2d(psi, pool[:20])
        _, lam80 = eigen_curve_2d(psi, pool[:80])
        assert np.all(lam80 <= lam20 + 1e-10)
        assert detect_2d(psi, 80, pool=pool).value <= detect_2d(psi, 20, pool=pool).value + 1e-10

    def test_pp_functions_not_detected(self, pp_radial):
        pool = point_pool(0)
        for cv in (pp_radial, radial_unit(0)):
            for n in (20, 60, 100):
                v = detect_2d(psi_fn(cv), n, pool=pool)
                assert not v.detected
                assert v.detector == "points{}".format(n) and "beta" in v.witness

    def test_n_points_range(self, pp_radial):
        with pytest.raises(DomainError):
            detect_2d(psi_fn(pp_radial), 101, pool=point_pool(0))


class TestDetectors:
    def test_toeplitz_detector(self, pn_1d):
        det = ToeplitzDetector(order=10, r_grid=dict(start=0.05, stop=3.0, steps=120, spacing="log"))
        assert det.name == "toeplitz10"
        verdict = det(LabeledFunction(pn_1d, Label.PN, 0))
        assert verdict.detected
        row = verdict.row(7, Label.PN)
        assert row[:5] == [7, "pn", "toeplitz10", 10, 1]
        assert row[5].startswith("r=")

    def test_kind_mismatch(self, pp_radial, pp_1d):
        with pytest.raises(UsageError):
            ToeplitzDetector()(LabeledFunction(pp_radial, Label.PP, 0))
        with pytest.raises(UsageError):
            PointSetDetector()(LabeledFunction(pp_1d, Label.PP, 0))

    def test_point_set_detector_uses_record_seed(self, pn_radial):
        det = PointSetDetector(n_points=20, beta_grid=BETA_GRID, name="p20")
        a = det(LabeledFunction(pn_radial, Label.PN, 5))
        b = detect_2d(psi_fn(pn_radial), 20, pool=point_pool(5), name="p20")
        assert a == b
