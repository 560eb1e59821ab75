"""
Bochner detectors.

A continuous psi has a nonnegative transform iff every matrix psi(x_i - x_j)
is positive semidefinite. Toeplitz matrices sample psi on a 1-D grid, point
set matrices on scattered planar points; a clearly negative smallest
eigenvalue proves the transform is negative somewhere.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.spatial.distance import pdist, squareform

from ..basis import Kind, psi_fn
from ..errors import DegenerateInputError, DomainError
from ..specialfn import SymMatrix, min_eigenvalues
from ..utils import logger
from .base import BaseDetector, DetectorVerdict, SweepGrid

__all__ = [
    "EPS_DET_REL",
    "POOL_SALT",
    "R_GRID",
    "BETA_GRID",
    "ToeplitzProbe",
    "PointSet2D",
    "InequalityCheck",
    "toeplitz_matrix",
    "toeplitz_stack",
    "toeplitz_determinant_sign",
    "inequalities_3x3",
    "lattice_inequalities_3x3",
    "lattice_points",
    "point_pool",
    "bochner_matrix_2d",
    "point_set_stack",
    "eigen_curve_1d",
    "eigen_curve_2d",
    "detect_1d",
    "detect_2d",
    "ToeplitzDetector",
    "PointSetDetector",
]

EPS_DET_REL = 1e-9
POOL_SALT = 0x5EED2D
POOL_SIZE = 100
POOL_HALF_WIDTH = 20.0

R_GRID = SweepGrid(0.05, 3.0, 120, "log")
BETA_GRID = SweepGrid(0.05, 1.0, 40)


@dataclass(frozen=True)
class ToeplitzProbe:
    k: int
    r: float

    def __post_init__(self):
        if self.k < 2 or not self.r > 0:
            raise DomainError("Toeplitz probe needs k >= 2 and r > 0, got {}".format(self))


@dataclass(frozen=True, eq=False)
class PointSet2D:
    points: np.ndarray
    beta: float = 1.0

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64).reshape(-1, 2)
        object.__setattr__(self, "points", pts)
        if not self.beta > 0:
            raise DomainError("point set scale beta must be > 0, got {}".format(self.beta))
        if np.any(np.abs(pts) > POOL_HALF_WIDTH):
            raise DomainError("point coordinates must lie in [-{0}, {0}]".format(POOL_HALF_WIDTH))

    def __len__(self):
        return len(self.points)

    @property
    def degenerate(self):
        """ Repeated points make the matrix singular. """
        return len(np.unique(self.points, axis=0)) < len(self.points)

    def prefix(self, n):
        return PointSet2D(self.points[:n], self.beta)


@dataclass(frozen=True)
class InequalityCheck:
    passed: bool
    failed: Optional[str] = None
    delta: float = 0.0


def toeplitz_matrix(psi, probe: ToeplitzProbe) -> SymMatrix:
    vals = np.asarray(psi(np.arange(probe.k) * probe.r), dtype=np.float64)
    idx = np.arange(probe.k)
    return SymMatrix(vals[np.abs(idx[:, None] - idx[None, :])])


def toeplitz_stack(psi, k, r_values):
    """ Toeplitz matrices of order k for every r, shape (len(r), k, k). """
    r_values = np.asarray(r_values, dtype=np.float64)
    vals = np.asarray(psi(np.multiply.outer(r_values, np.arange(k))), dtype=np.float64)
    idx = np.arange(k)
    return vals[:, np.abs(idx[:, None] - idx[None, :])]


def toeplitz_determinant_sign(psi, probe: ToeplitzProbe):
    """ Sign of det; blind to an even number of negative eigenvalues. """
    sign, _ = np.linalg.slogdet(toeplitz_matrix(psi, probe).entries)
    return int(sign)


def _three_point_check(a, b, d):
    # [[a, b, d], [b, a, b], [d, b, a]] and [[a, b, b], [b, a, d], [b, d, a]]
    # both have det = (a - d)(a^2 + a d - 2 b^2)
    if not a > 0:
        raise DegenerateInputError("psi(0) must be > 0, got {}".format(a))
    delta = (a - d) * (a * a + a * d - 2.0 * b * b)
    if not a > b:
        return InequalityCheck(False, "psi0_gt_psi1", delta)
    if not a > d:
        return InequalityCheck(False, "psi0_gt_psi2", delta)
    if not d > 2.0 * b * b / a - a:
        return InequalityCheck(False, "major", delta)
    if not delta > 0:
        return InequalityCheck(False, "determinant", delta)
    return InequalityCheck(True, None, delta)


def inequalities_3x3(psi, r):
    """
    Positivity of the 3x3 Toeplitz matrix on {0, r, 2r} through its minors:
    psi(0) > psi(r), psi(0) > psi(2r), psi(2r) > 2 psi(r)^2 / psi(0) - psi(0)
    and det > 0. The first violated one is reported.
    """
    if not r > 0:
        raise DomainError("r must be > 0")
    return _three_point_check(float(psi(0.0)), float(psi(r)), float(psi(2.0 * r)))


def lattice_inequalities_3x3(psi, r):
    """ Same checks for the planar points (0, 0), (0, r), (r, 0); psi(2r) becomes psi(r sqrt 2). """
    if not r > 0:
        raise DomainError("r must be > 0")
    return _three_point_check(float(psi(0.0)), float(psi(r)), float(psi(r * math.sqrt(2.0))))


def lattice_points(degree, r=1.0):
    """ {(a r, b r): a, b >= 0, a + b <= degree}, grouped by a + b. """
    pts = [(a * r, (d - a) * r) for d in range(degree + 1) for a in range(d + 1)]
    return np.asarray(pts, dtype=np.float64)


@lru_cache(maxsize=8)
def _pool(seed, size, half_width):
    rng = np.random.default_rng(seed ^ POOL_SALT)
    pts = rng.uniform(-half_width, half_width, (size, 2))
    pts.setflags(write=False)
    return pts


def point_pool(seed, size=POOL_SIZE, half_width=POOL_HALF_WIDTH):
    """ The shared random points of one experiment; point counts take prefixes. """
    return _pool(int(seed), int(size), float(half_width))


def _warn_if_degenerate(points):
    if len(np.unique(points, axis=0)) < len(points):
        logger.get_logger().warn("point set has repeated points, its Bochner matrix is singular")


def bochner_matrix_2d(psi_radial, ps: PointSet2D) -> SymMatrix:
    _warn_if_degenerate(ps.points)
    dist = squareform(pdist(ps.points))
    return SymMatrix(np.asarray(psi_radial(ps.beta * dist), dtype=np.float64))


def point_set_stack(psi_radial, points, beta_values):
    dist = squareform(pdist(np.asarray(points, dtype=np.float64)))
    beta_values = np.asarray(beta_values, dtype=np.float64)
    return np.asarray(psi_radial(np.multiply.outer(beta_values, dist)), dtype=np.float64)


def eigen_curve_1d(psi, k, r_grid=R_GRID, method="eigh"):
    """ lambda_min of the order-k Toeplitz matrix along the r sweep. """
    r = SweepGrid.parse(r_grid).values
    return r, min_eigenvalues(toeplitz_stack(psi, k, r), method=method)


def eigen_curve_2d(psi_radial, points, beta_grid=BETA_GRID, method="eigh"):
    beta = SweepGrid.parse(beta_grid).values
    return beta, min_eigenvalues(point_set_stack(psi_radial, points, beta), method=method)


def _verdict(name, order, grid_name, grid, lam, psi0, eps_rel):
    i = int(np.argmin(lam))
    eps = eps_rel * psi0
    return DetectorVerdict(name, bool(lam[i] < -eps), float(lam[i]), {grid_name: float(grid[i])}, order)


def detect_1d(psi, k, r_grid=R_GRID, eps_rel=EPS_DET_REL, method="eigh", name=None):
    """ Detected iff lambda_min < -eps_rel * psi(0) somewhere on the r sweep. """
    r, lam = eigen_curve_1d(psi, k, r_grid, method)
    return _verdict(name or "toeplitz{}".format(k), k, "r", r, lam, float(psi(0.0)), eps_rel)


def detect_2d(psi_radial, n_points, beta_grid=BETA_GRID, pool=None, eps_rel=EPS_DET_REL, method="eigh",
              name=None):
    """
    Point set detector on the first `n_points` of the pool. Prefixes nest, so
    by interlacing a detection at n stays a detection at every larger n.
    """
    pool = point_pool(0) if pool is None else np.asarray(pool)
    if not 1 <= n_points <= len(pool):
        raise DomainError("n_points must be in [1, {}], got {}".format(len(pool), n_points))
    _warn_if_degenerate(pool[:n_points])
    beta, lam = eigen_curve_2d(psi_radial, pool[:n_points], beta_grid, method)
    return _verdict(name or "points{}".format(n_points), n_points, "beta", beta, lam, float(psi_radial(0.0)), eps_rel)


class ToeplitzDetector(BaseDetector):
    kind = Kind.HERMITE_1D

    def __init__(self, order=10, r_grid=None, eps_rel=EPS_DET_REL, method="eigh", name=None) -> None:
        super().__init__(name or "toeplitz{}".format(order))
        self.order = order
        self.r_grid = SweepGrid.parse(r_grid) if r_grid is not None else R_GRID
        self.eps_rel = eps_rel
        self.method = method

    def detect(self, cv, seed=0):
        return detect_1d(psi_fn(cv), self.order, self.r_grid, self.eps_rel, self.method, self.name)


class PointSetDetector(BaseDetector):
    kind = Kind.LAGUERRE_RADIAL

    def __init__(self, n_points=20, beta_grid=None, pool_size=POOL_SIZE, half_width=POOL_HALF_WIDTH,
                 eps_rel=EPS_DET_REL, method="eigh", name=None) -> None:
        super().__init__(name or "points{}".format(n_points))
        self.n_points = n_points
        self.beta_grid = SweepGrid.parse(beta_grid) if beta_grid is not None else BETA_GRID
        self.pool_size = pool_size
        self.half_width = half_width
        self.eps_rel = eps_rel
        self.method = method

    def detect(self, cv, seed=0):
        pool = point_pool(seed, self.pool_size, self.half_width)
        return detect_2d(psi_fn(cv), self.n_points, self.beta_grid, pool, self.eps_rel, self.method, self.name)
