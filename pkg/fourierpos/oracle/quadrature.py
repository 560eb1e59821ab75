import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import integrate

from ..errors import DomainError
from ..specialfn import bessel_j0

__all__ = ["Rule", "QuadratureSpec", "DEFAULT_1D", "DEFAULT_RADIAL", "fourier_1d", "hankel"]


class Rule(Enum):
    TRAPEZOID = "trapezoid"
    SIMPSON = "simpson"


@dataclass(frozen=True)
class QuadratureSpec:
    upper_limit: float
    step: float
    rule: Rule = Rule.SIMPSON

    def __post_init__(self):
        object.__setattr__(self, "rule", Rule(self.rule))
        if not (self.upper_limit > 0 and self.step > 0 and self.step <= self.upper_limit):
            raise DomainError("need 0 < step <= upper_limit, got {}".format(self))

    @property
    def nodes(self):
        return np.linspace(0.0, self.upper_limit, int(round(self.upper_limit / self.step)) + 1)

    def halved(self):
        return QuadratureSpec(self.upper_limit, self.step / 2, self.rule)

    def integrate(self, y, x):
        """ Integrate samples y (..., N) taken at the nodes x along the last axis. """
        if self.rule is Rule.SIMPSON:
            return integrate.simpson(y, x=x, axis=-1)
        return integrate.trapezoid(y, x=x, axis=-1)


DEFAULT_1D = QuadratureSpec(12.0, 1e-3, Rule.SIMPSON)
DEFAULT_RADIAL = QuadratureSpec(120.0, 2e-3, Rule.SIMPSON)


def _out(v):
    v = np.asarray(v)
    return float(v) if v.ndim == 0 else v


def fourier_1d(psi, s, q: QuadratureSpec = DEFAULT_1D):
    """ sqrt(2/pi) int_0^U cos(s r) psi(r) dr, the unitary transform of an even psi. """
    r = q.nodes
    s = np.asarray(s, dtype=np.float64)
    y = np.cos(np.multiply.outer(s, r)) * psi(r)
    return _out(math.sqrt(2.0 / math.pi) * q.integrate(y, r))


def hankel(psi, s, q: QuadratureSpec = DEFAULT_RADIAL):
    """ int_0^U r J_0(s r) psi(r) dr. """
    r = q.nodes
    s = np.asarray(s, dtype=np.float64)
    if np.any(s < 0):
        raise DomainError("Hankel transform needs s >= 0")
    y = bessel_j0(np.multiply.outer(s, r)) * (r * psi(r))
    return _out(q.integrate(y, r))
