import math

import numpy as np

from ..basis import CoefficientVector, Kind, phi_fn, psi_fn
from ..errors import DomainError, KindError

__all__ = ["gaussian", "gaussian_pair", "comb_sum_1d", "alias_sum_1d", "poisson_identity_residual"]


def gaussian(x):
    return np.exp(-0.5 * np.square(x))


def gaussian_pair():
    """ exp(-x^2/2) is its own transform in 1-D and its own Hankel partner radially. """
    return gaussian, gaussian


def comb_sum_1d(psi, r, s, K):
    """ (|r|/sqrt(2 pi)) sum_{|k| <= K} psi(k r) exp(i k r s), cosine form. """
    k = np.arange(1, K + 1)
    s = np.asarray(s, dtype=np.float64)
    tail = np.cos(np.multiply.outer(s, k * r)) @ np.asarray(psi(k * r), dtype=np.float64)
    return abs(r) / math.sqrt(2.0 * math.pi) * (psi(0.0) + 2.0 * tail)


def alias_sum_1d(phi, r, s, H):
    """ sum_{|h| <= H} phi(s + 2 pi h / r). """
    if r == 0:
        raise DomainError("alias sum needs r != 0")
    h = np.arange(-H, H + 1)
    s = np.asarray(s, dtype=np.float64)
    return np.sum(phi(np.abs(np.add.outer(s, 2.0 * math.pi * h / r))), axis=-1)


def poisson_identity_residual(pair, r, s, K=40, H=40):
    """
    |alias sum - comb sum| for a 1-D pair at (r, s).

    `pair` is a hermite1d CoefficientVector or a (psi, phi) tuple of even
    functions.
    """
    if r == 0:
        raise DomainError("Poisson identity needs r != 0")
    if isinstance(pair, CoefficientVector):
        if pair.kind is not Kind.HERMITE_1D:
            raise KindError("the Poisson identity residual is one-dimensional")
        psi, phi = psi_fn(pair), phi_fn(pair)
    else:
        psi, phi = pair
    out = np.abs(alias_sum_1d(phi, r, s, H) - comb_sum_1d(psi, r, s, K))
    return float(out) if out.ndim == 0 else out
