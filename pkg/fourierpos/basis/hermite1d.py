"""
Even Hermite family on the line.

psi(r) = sum_p c_{2p} u_{2p}(r), p = 0..4. Under the unitary Fourier transform
u_n picks up the phase i^n, so phi has the same expansion with the c2 and c6
signs flipped. Values come from the normalized recursion in specialfn. Both are
also pi^(-1/4) exp(-t/2) P(t) with t = r^2, and P is kept as an explicit
polynomial so sign questions reduce to polynomial roots.
"""
import math
from functools import partial

import numpy as np

from ..errors import KindError
from ..specialfn import hermite_functions
from .coefficients import CoefficientVector, Kind

__all__ = [
    "HERMITE_MODES",
    "PHI_SIGNS",
    "psi_polynomial_1d",
    "phi_polynomial_1d",
    "eval_psi_1d",
    "eval_phi_1d",
    "psi_1d_values",
    "phi_1d_values",
    "psi_fn_1d",
    "phi_fn_1d",
]

HERMITE_MODES = (0, 2, 4, 6, 8)
PHI_SIGNS = np.asarray([1.0, -1.0, 1.0, -1.0, 1.0])

_PI_M14 = math.pi ** -0.25

# rows: u_0, u_2, u_4, u_6, u_8 without the envelope; columns: ascending powers of t = r^2
_MODE_POLY = np.asarray([
    [1.0, 0.0, 0.0, 0.0, 0.0],
    np.asarray([-1.0, 2.0, 0.0, 0.0, 0.0]) / math.sqrt(2.0),
    np.asarray([3.0, -12.0, 4.0, 0.0, 0.0]) / (2.0 * math.sqrt(6.0)),
    np.asarray([-15.0, 90.0, -60.0, 8.0, 0.0]) / (12.0 * math.sqrt(5.0)),
    np.asarray([105.0, -840.0, 840.0, -224.0, 16.0]) / (24.0 * math.sqrt(70.0)),
]) * _PI_M14


def _check_kind(cv):
    if not isinstance(cv, CoefficientVector) or cv.kind is not Kind.HERMITE_1D:
        raise KindError("expected a hermite1d coefficient vector, got {!r}".format(getattr(cv, "kind", cv)))


def psi_polynomial_1d(coeffs):
    """ Ascending coefficients in t = r^2 of exp(t/2) psi; `coeffs` is (..., 5). """
    return np.asarray(coeffs, dtype=np.float64) @ _MODE_POLY


def phi_polynomial_1d(coeffs):
    return psi_polynomial_1d(np.asarray(coeffs, dtype=np.float64) * PHI_SIGNS)


def _even_modes(r):
    # u_0, u_2, ..., u_8 by the recursion, finite for every finite r
    return hermite_functions(HERMITE_MODES[-1], r)[::2]


def _evaluate(coeffs, r):
    out = np.tensordot(coeffs, _even_modes(r), axes=1)
    return float(out) if out.ndim == 0 else out


def eval_psi_1d(cv: CoefficientVector, r):
    _check_kind(cv)
    return _evaluate(cv.array, r)


def eval_phi_1d(cv: CoefficientVector, s):
    _check_kind(cv)
    return _evaluate(cv.array * PHI_SIGNS, s)


def psi_1d_values(coeffs, r):
    """ Batched psi: coeffs (B, 5), r (N,) -> (B, N). """
    return np.asarray(coeffs, dtype=np.float64) @ _even_modes(np.asarray(r, dtype=np.float64))


def phi_1d_values(coeffs, s):
    return psi_1d_values(np.asarray(coeffs, dtype=np.float64) * PHI_SIGNS, s)


def psi_fn_1d(cv):
    _check_kind(cv)
    return partial(eval_psi_1d, cv)


def phi_fn_1d(cv):
    _check_kind(cv)
    return partial(eval_phi_1d, cv)
