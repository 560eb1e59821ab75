import math

import numpy as np

from ..errors import DomainError

__all__ = ["MAX_HERMITE_ORDER", "hermite_functions", "hermite_u"]

MAX_HERMITE_ORDER = 8

_PI_M14 = math.pi ** -0.25


def hermite_functions(pmax, r):
    """
    Square normalized Hermite functions u_0 ... u_pmax at `r`.

    u_p(r) = pi^(-1/4) exp(-r^2/2) H_p(r), with H_p normalized and with a
    positive leading coefficient. The three term recursion runs on the
    normalized functions themselves,

        u_{p+1} = sqrt(2/(p+1)) r u_p - sqrt(p/(p+1)) u_{p-1},

    so the Gaussian envelope and the polynomial never overflow separately.
    Returns an array of shape `(pmax + 1,) + r.shape`.
    """
    if int(pmax) != pmax or not 0 <= pmax <= MAX_HERMITE_ORDER:
        raise DomainError("Hermite order must be an integer in [0, {}], got {}".format(MAX_HERMITE_ORDER, pmax))
    pmax = int(pmax)
    r = np.asarray(r, dtype=np.float64)
    if not np.all(np.isfinite(r)):
        raise DomainError("Hermite functions need finite arguments")

    out = np.empty((pmax + 1,) + r.shape, dtype=np.float64)
    out[0] = _PI_M14 * np.exp(-0.5 * r * r)
    if pmax >= 1:
        out[1] = math.sqrt(2.0) * r * out[0]
    for p in range(1, pmax):
        out[p + 1] = math.sqrt(2.0 / (p + 1)) * r * out[p] - math.sqrt(p / (p + 1)) * out[p - 1]
    return out


def hermite_u(p, r):
    u = hermite_functions(p, r)[p]
    return float(u) if u.ndim == 0 else u
