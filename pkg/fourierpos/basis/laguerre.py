"""
Radial Laguerre family in the plane.

psi(x) = exp(-x/2) sum_i c_i l_i(x), i = 0..8, with l_i the signed, normalized
generalized Laguerre polynomials (-1)^i L_i^(1)(x) / sqrt(i+1), so that
int_0^inf x psi^2 dx = sum c_i^2. The Hankel partners
phi(p) = int_0^inf x J_0(p x) psi(x) dx are rational in q = p^2 and share the
denominator (1 + 4q)^(19/2).
"""
import math
from functools import partial

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.linalg import solve_triangular

from ..errors import DomainError, KindError
from .coefficients import CoefficientVector, Kind

__all__ = [
    "N_RADIAL",
    "psi_polynomial_radial",
    "phi_numerator",
    "eval_psi_radial",
    "eval_phi_radial",
    "psi_radial_values",
    "phi_radial_values",
    "psi_fn_radial",
    "phi_fn_radial",
    "coefficients_from_polynomial",
]

N_RADIAL = 9

# l_i(x) as (ascending integer coefficients, divisor)
_PSI_BASIS = [
    ([1], 1.0),
    ([-2, 1], math.sqrt(2.0)),
    ([6, -6, 1], 2.0 * math.sqrt(3.0)),
    ([-24, 36, -12, 1], 12.0),
    ([120, -240, 120, -20, 1], 24.0 * math.sqrt(5.0)),
    ([-720, 1800, -1200, 300, -30, 1], 120.0 * math.sqrt(6.0)),
    ([5040, -15120, 12600, -4200, 630, -42, 1], 720.0 * math.sqrt(7.0)),
    ([-40320, 141120, -141120, 58800, -11760, 1176, -56, 1], 10080.0 * math.sqrt(2.0)),
    ([362880, -1451520, 1693440, -846720, 211680, -28224, 2016, -72, 1], 120960.0),
]

# phi_i(p) = prefactor * poly(q) / (1 + 4q)^(i + 3/2), poly ascending in q = p^2
_PHI_BASIS = [
    (4.0, [1]),
    (-4.0 * math.sqrt(2.0), [-1, 8]),
    (4.0 * math.sqrt(3.0), [1, -24, 48]),
    (-8.0, [-1, 48, -288, 256]),
    (4.0 * math.sqrt(5.0), [1, -80, 960, -2560, 1280]),
    (-4.0 * math.sqrt(6.0), [-1, 120, -2400, 12800, -19200, 6144]),
    (4.0 * math.sqrt(7.0), [1, -168, 5040, -44800, 134400, -129024, 28672]),
    (-8.0 * math.sqrt(2.0), [-1, 224, -9408, 125440, -627200, 1204224, -802816, 131072]),
    (12.0, [1, -288, 16128, -301056, 2257920, -7225344, 9633792, -4718592, 589824]),
]


def _psi_matrix():
    m = np.zeros((N_RADIAL, N_RADIAL))
    for i, (coef, div) in enumerate(_PSI_BASIS):
        m[i, :len(coef)] = np.asarray(coef, dtype=np.float64) / div
    return m


def _phi_matrix():
    # each element brought over the common denominator (1 + 4q)^(19/2)
    m = np.zeros((N_RADIAL, N_RADIAL))
    for i, (pref, coef) in enumerate(_PHI_BASIS):
        num = P.polymul(pref * np.asarray(coef, dtype=np.float64), P.polypow([1.0, 4.0], N_RADIAL - 1 - i))
        m[i, :len(num)] = num
    return m


_PSI_MATRIX = _psi_matrix()
_PHI_MATRIX = _phi_matrix()


def _check_kind(cv):
    if not isinstance(cv, CoefficientVector) or cv.kind is not Kind.LAGUERRE_RADIAL:
        raise KindError("expected a radial2d coefficient vector, got {!r}".format(getattr(cv, "kind", cv)))


def _nonnegative(x, name):
    x = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise DomainError("{} must be finite".format(name))
    if np.any(x < 0):
        raise DomainError("{} must be >= 0, got min {}".format(name, float(np.min(x))))
    return x


def psi_polynomial_radial(coeffs):
    """ Ascending monomial coefficients of exp(x/2) psi(x); `coeffs` is (..., 9). """
    return np.asarray(coeffs, dtype=np.float64) @ _PSI_MATRIX


def phi_numerator(coeffs):
    """ N(q) with phi(p) = N(p^2) / (1 + 4p^2)^(19/2), ascending in q. """
    return np.asarray(coeffs, dtype=np.float64) @ _PHI_MATRIX


# exp(-x/2) is exactly 0 past here while the polynomial part stays finite
_X_CLAMP = 2000.0
# q beyond this only changes phi below the smallest double
_Q_CLAMP = 1e300


def _psi(poly, x):
    xc = np.minimum(x, _X_CLAMP)
    return np.exp(-0.5 * xc) * P.polyval(xc, poly)


def _phi_basis(p):
    """
    sqrt(v) w^j v^(9-j), j = 0..8, with v = 1/(1+4q) and w = q v, so that
    N(q) / (1+4q)^(19/2) = sum_j n_j sqrt(v) w^j v^(9-j) and every factor is in [0, 1].
    """
    q = np.minimum(p * p, _Q_CLAMP)
    v = 1.0 / (1.0 + 4.0 * q)
    w = q * v
    j = np.arange(N_RADIAL).reshape((N_RADIAL,) + (1,) * np.ndim(q))
    return np.sqrt(v) * w ** j * v ** (N_RADIAL - 1 - j)


def _phi(num, p):
    return np.tensordot(num, _phi_basis(p), axes=1)


def eval_psi_radial(cv: CoefficientVector, x):
    _check_kind(cv)
    x = _nonnegative(x, "radial argument x")
    out = _psi(psi_polynomial_radial(cv.array), x)
    return float(out) if out.ndim == 0 else out


def eval_phi_radial(cv: CoefficientVector, p):
    _check_kind(cv)
    p = _nonnegative(p, "radial momentum p")
    out = _phi(phi_numerator(cv.array), p)
    return float(out) if out.ndim == 0 else out


def psi_radial_values(coeffs, x):
    """ Batched psi: coeffs (B, 9), x (N,) -> (B, N). """
    xc = np.minimum(np.asarray(x, dtype=np.float64), _X_CLAMP)
    return np.exp(-0.5 * xc) * P.polyval(xc, psi_polynomial_radial(coeffs).T, tensor=True)


def phi_radial_values(coeffs, p):
    return phi_numerator(coeffs) @ _phi_basis(np.asarray(p, dtype=np.float64))


def psi_fn_radial(cv):
    _check_kind(cv)
    return partial(eval_psi_radial, cv)


def phi_fn_radial(cv):
    _check_kind(cv)
    return partial(eval_phi_radial, cv)


def coefficients_from_polynomial(monomials, normalize=True):
    """
    Recover c from psi written as exp(-x/2) * sum_j a_j x^j.

    Element i has degree i, so the monomial matrix is triangular and c follows
    by back substitution. Printed polynomials are rounded, hence the final
    renormalization.
    """
    a = np.zeros(N_RADIAL)
    monomials = np.asarray(monomials, dtype=np.float64)
    if monomials.ndim != 1 or len(monomials) > N_RADIAL:
        raise DomainError("expected at most {} monomial coefficients".format(N_RADIAL))
    a[:len(monomials)] = monomials
    c = solve_triangular(_PSI_MATRIX.T, a, lower=False)
    if normalize:
        return CoefficientVector.normalized(Kind.LAGUERRE_RADIAL, c)
    return c
