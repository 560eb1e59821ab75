"""
Poisson detectors.

By Poisson summation the comb sum of psi samples equals an aliased sum of phi
values, F(s, dr) = sum_h phi(s + 2 pi h / dr). F is built from psi alone and
cannot go negative when phi >= 0, so a negative F anywhere on the scan proves
phi takes negative values. Inside the window R/K <= r < pi/S a single alias
dominates and the same sum reconstructs phi itself.

All sums use cosines only; psi is even so the sine parts vanish identically.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..basis import Kind, psi_fn
from ..errors import DomainError
from ..oracle.identity import alias_sum_1d, comb_sum_1d
from .base import BaseDetector, DetectorVerdict, SweepGrid

__all__ = [
    "EPS_F_REL",
    "R_1D",
    "R_RADIAL",
    "S_CUT",
    "CharScan1D",
    "CharScan2D",
    "Reconstruction",
    "truncation_1d",
    "truncation_2d",
    "in_window",
    "char_fn_1d",
    "char_fn_2d",
    "char_grid_1d",
    "char_grid_2d",
    "alias_sum_1d",
    "detect_poisson_1d",
    "detect_poisson_2d",
    "reconstruct_phi_1d",
    "reconstruct_phi_2d",
    "angular_spread",
    "PoissonDetector1D",
    "PoissonDetector2D",
]

EPS_F_REL = 1e-10
R_1D = 10.0
R_RADIAL = 40.0
S_CUT = 6.0


@dataclass(frozen=True)
class CharScan1D:
    R: float = R_1D
    dr_grid: SweepGrid = SweepGrid(0.1, 1.0, 19)
    s_grid: SweepGrid = SweepGrid(0.0, 8.0, 401)

    def __post_init__(self):
        object.__setattr__(self, "dr_grid", SweepGrid.parse(self.dr_grid))
        object.__setattr__(self, "s_grid", SweepGrid.parse(self.s_grid))
        if not (self.R > 0 and self.dr_grid.start > 0):
            raise DomainError("1-D scan needs R > 0 and dr > 0, got {}".format(self))


@dataclass(frozen=True)
class CharScan2D:
    R: float = R_RADIAL
    dr_grid: SweepGrid = SweepGrid(0.2, 1.0, 9)
    angles: int = 129

    def __post_init__(self):
        object.__setattr__(self, "dr_grid", SweepGrid.parse(self.dr_grid))
        if not (self.R > 0 and self.dr_grid.start > 0 and self.angles >= 2):
            raise DomainError("2-D scan needs R > 0, dr > 0 and at least 2 angles, got {}".format(self))

    @property
    def angle_values(self):
        return np.linspace(0.0, math.pi, self.angles)


class Reconstruction(NamedTuple):
    value: object
    window_ok: bool


def truncation_1d(R, dr):
    return int(math.ceil(R / dr))


def truncation_2d(R, dr):
    return int(math.floor(R / dr)) + 1


def in_window(r, K, R, S=S_CUT):
    """ R/K <= r < pi/S: the comb covers psi's support and aliases stay past S. """
    return R / K <= r < math.pi / S


def _lattice_weights(psi_radial, r, K):
    m = np.arange(K + 1)
    e = np.where(m == 0, 1.0, 2.0)
    rho = r * np.sqrt(np.add.outer(m * m, m * m))
    return m, np.outer(e, e) * np.asarray(psi_radial(rho), dtype=np.float64)


def _lattice_sum_2d(psi_radial, r, K, alpha, gamma, outer):
    """ (r^2 / 2 pi) sum_{m,n=0}^K e_m e_n psi(r sqrt(m^2+n^2)) cos(m alpha) cos(n gamma). """
    m, W = _lattice_weights(psi_radial, r, K)
    ca = np.cos(np.multiply.outer(np.asarray(alpha, dtype=np.float64), m))
    cg = np.cos(np.multiply.outer(np.asarray(gamma, dtype=np.float64), m))
    if outer:
        out = ca @ W @ cg.T
    else:
        ca, cg = np.broadcast_arrays(ca, cg)
        out = np.einsum("...m,mn,...n->...", ca, W, cg)
    out = r * r / (2.0 * math.pi) * out
    return float(out) if np.ndim(out) == 0 else out


def char_fn_1d(psi, dr, s, R=R_1D):
    """ (dr/sqrt(2 pi)) [psi(0) + 2 sum_{n=1}^K psi(n dr) cos(n dr s)], K = ceil(R/dr). """
    if not dr > 0:
        raise DomainError("dr must be > 0")
    out = comb_sum_1d(psi, dr, s, truncation_1d(R, dr))
    return float(out) if np.ndim(out) == 0 else out


def char_fn_2d(psi_radial, dr, alpha, gamma, R=R_RADIAL):
    """ Radial characteristic function with K = floor(R/dr) + 1; array angles broadcast pointwise. """
    if not dr > 0:
        raise DomainError("dr must be > 0")
    return _lattice_sum_2d(psi_radial, dr, truncation_2d(R, dr), alpha, gamma, outer=False)


def char_grid_1d(psi, scan: CharScan1D = CharScan1D()):
    """ F on the (dr, s) scan, shape (len(dr), len(s)). """
    dr = scan.dr_grid.values
    s = scan.s_grid.values
    F = np.stack([np.atleast_1d(char_fn_1d(psi, d, s, scan.R)) for d in dr])
    return dr, s, F


def char_grid_2d(psi_radial, dr, angles=129, R=R_RADIAL):
    """ F(alpha, gamma) at fixed dr on [0, pi]^2, shape (angles, angles). """
    a = np.linspace(0.0, math.pi, angles)
    return a, a, _lattice_sum_2d(psi_radial, dr, truncation_2d(R, dr), a, a, outer=True)


def detect_poisson_1d(psi, scan: CharScan1D = CharScan1D(), eps_rel=EPS_F_REL, name="poisson1d"):
    """ Detected iff F < -eps_rel |F(0, dr)| at some (dr, s) of the scan. """
    dr, s, F = char_grid_1d(psi, scan)
    scale = np.abs([char_fn_1d(psi, d, 0.0, scan.R) for d in dr])
    detected = bool(np.any(F.min(axis=1) < -eps_rel * scale))
    i, j = np.unravel_index(np.argmin(F), F.shape)
    return DetectorVerdict(name, detected, float(F[i, j]), {"dr": float(dr[i]), "s": float(s[j])})


def detect_poisson_2d(psi_radial, scan: CharScan2D = CharScan2D(), eps_rel=EPS_F_REL, name="poisson2d"):
    best = None
    detected = False
    for d in scan.dr_grid.values:
        a, g, F = char_grid_2d(psi_radial, d, scan.angles, scan.R)
        scale = abs(_lattice_sum_2d(psi_radial, d, truncation_2d(scan.R, d), 0.0, 0.0, outer=False))
        detected = detected or bool(F.min() < -eps_rel * scale)
        i, j = np.unravel_index(np.argmin(F), F.shape)
        if best is None or F[i, j] < best[0]:
            best = (float(F[i, j]), {"dr": float(d), "alpha": float(a[i]), "gamma": float(g[j])})
    return DetectorVerdict(name, detected, best[0], best[1])


def reconstruct_phi_1d(psi, r, K, s, R=R_1D, S=S_CUT):
    """ Finite comb sum with step r and K terms as an estimate of phi(s). """
    if not r > 0 or K < 1:
        raise DomainError("reconstruction needs r > 0 and K >= 1")
    out = comb_sum_1d(psi, r, s, K)
    return Reconstruction(float(out) if np.ndim(out) == 0 else out, in_window(r, K, R, S))


def reconstruct_phi_2d(psi_radial, r, K, s1, s2, R=R_RADIAL, S=S_CUT):
    if not r > 0 or K < 1:
        raise DomainError("reconstruction needs r > 0 and K >= 1")
    s1 = np.asarray(s1, dtype=np.float64)
    s2 = np.asarray(s2, dtype=np.float64)
    out = _lattice_sum_2d(psi_radial, r, K, r * s1, r * s2, outer=False)
    return Reconstruction(out, in_window(r, K, R, S))


def angular_spread(psi_radial, dr, s, n_angles=16, R=R_RADIAL):
    """ (max - min) / |mean| of F over directions at fixed |(alpha, gamma)| = dr s. """
    if dr * s > math.pi:
        raise DomainError("dr * s must stay inside [0, pi]")
    theta = np.linspace(0.0, 0.5 * math.pi, n_angles)
    F = char_fn_2d(psi_radial, dr, dr * s * np.cos(theta), dr * s * np.sin(theta), R)
    return float((F.max() - F.min()) / abs(F.mean()))


class PoissonDetector1D(BaseDetector):
    kind = Kind.HERMITE_1D

    def __init__(self, R=R_1D, dr_grid=None, s_grid=None, eps_rel=EPS_F_REL, name="poisson1d") -> None:
        super().__init__(name)
        kwargs = {k: v for k, v in (("dr_grid", dr_grid), ("s_grid", s_grid)) if v is not None}
        self.scan = CharScan1D(R, **kwargs)
        self.eps_rel = eps_rel

    def detect(self, cv, seed=0):
        return detect_poisson_1d(psi_fn(cv), self.scan, self.eps_rel, self.name)


class PoissonDetector2D(BaseDetector):
    kind = Kind.LAGUERRE_RADIAL

    def __init__(self, R=R_RADIAL, dr_grid=None, angles=129, eps_rel=EPS_F_REL, name="poisson2d") -> None:
        super().__init__(name)
        kwargs = {"dr_grid": dr_grid} if dr_grid is not None else {}
        self.scan = CharScan2D(R, angles=angles, **kwargs)
        self.eps_rel = eps_rel

    def detect(self, cv, seed=0):
        return detect_poisson_2d(psi_fn(cv), self.scan, self.eps_rel, self.name)
