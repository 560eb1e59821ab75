"""
Bessel function of the first kind, order zero.

Power series below x = 8, Hankel asymptotic form with the Cephes rational
corrections (Cephes Math Library, S. L. Moshier) from x = 8 on.
"""
import numpy as np

from ..errors import DomainError

__all__ = ["SERIES_CUTOFF", "bessel_j0"]

SERIES_CUTOFF = 8.0
_SERIES_TERMS = 40

PIO4 = 7.85398163397448309616E-1  # pi/4
SQ2OPI = 7.9788456080286535587989E-1  # sqrt(2/pi)

PP = np.asarray([
    7.96936729297347051624E-4,
    8.28352392107440799803E-2,
    1.23953371646414299388E0,
    5.44725003058768775090E0,
    8.74716500199817011941E0,
    5.30324038235394892183E0,
    9.99999999999999997821E-1,
])
PQ = np.asarray([
    9.24408810558863637013E-4,
    8.56288474354474431428E-2,
    1.25352743901058953537E0,
    5.47097740330417105182E0,
    8.76190883237069594232E0,
    5.30605288235394617618E0,
    1.00000000000000000218E0,
])
QP = np.asarray([
    -1.13663838898469149931E-2,
    -1.28252718670509318512E0,
    -1.95539544257735972385E1,
    -9.32060152123768231369E1,
    -1.77681167980488050595E2,
    -1.47077505154951170175E2,
    -5.14105326766599330220E1,
    -6.05014350600728481186E0,
])
# leading coefficient 1 implied
QQ = np.asarray([
    6.43178256118178023184E1,
    8.56430025976980587198E2,
    3.88240183605401609683E3,
    7.24046774195652478189E3,
    5.93072701187316984827E3,
    2.06209331660327847417E3,
    2.42005740240291393179E2,
])


def polevl(x, coef):
    """ coef[0] x^N + ... + coef[N] """
    ans = np.full_like(x, coef[0])
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def p1evl(x, coef):
    """ x^N + coef[0] x^(N-1) + ... + coef[N-1] """
    ans = x + coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _series(x):
    z = 0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, _SERIES_TERMS):
        term = -term * z / (k * k)
        total = total + term
    return total


def _asymptotic(x):
    w = 5.0 / x
    z = 25.0 / (x * x)
    p = polevl(z, PP) / polevl(z, PQ)
    q = polevl(z, QP) / p1evl(z, QQ)
    xn = x - PIO4
    p = p * np.cos(xn) - w * q * np.sin(xn)
    return p * SQ2OPI / np.sqrt(x)


def bessel_j0(x):
    """ J_0(x) for x >= 0; scalars in, float out, arrays in, arrays out. """
    x = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise DomainError("bessel_j0 needs finite arguments")
    if np.any(x < 0):
        raise DomainError("bessel_j0 is defined here for x >= 0, got min {}".format(float(np.min(x))))

    small = x < SERIES_CUTOFF
    out = np.empty_like(x)
    out[small] = _series(x[small])
    out[~small] = _asymptotic(x[~small])
    return float(out) if out.ndim == 0 else out
