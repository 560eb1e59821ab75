import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from ..errors import DataError

__all__ = ["Kind", "Label", "CoefficientVector", "LabeledFunction", "UNIT_NORM_TOL"]

UNIT_NORM_TOL = 1e-12


class Kind(Enum):
    HERMITE_1D = "hermite1d"
    LAGUERRE_RADIAL = "radial2d"

    @property
    def size(self):
        return 5 if self is Kind.HERMITE_1D else 9

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DataError("unknown basis kind {!r}, expected one of {}".format(value, [k.value for k in cls]))


class Label(Enum):
    PP = "pp"
    PN = "pn"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DataError("unknown label {!r}".format(value))


@dataclass(frozen=True)
class CoefficientVector:
    """
    Unit-norm mixing coefficients of one test function.

    Hermite1D holds (c0, c2, c4, c6, c8), the even Hermite modes; LaguerreRadial
    holds (c0, ..., c8) over the radial Laguerre basis.
    """
    kind: Kind
    coeffs: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if len(self.coeffs) != self.kind.size:
            raise DataError("{} needs {} coefficients, got {}".format(self.kind.value, self.kind.size, len(self.coeffs)))
        if not all(math.isfinite(c) for c in self.coeffs):
            raise DataError("non-finite coefficient in {}".format(self.coeffs))
        norm2 = math.fsum(c * c for c in self.coeffs)
        if abs(norm2 - 1.0) > UNIT_NORM_TOL:
            raise DataError("coefficients must have unit norm, got sum of squares {!r}".format(norm2))

    @classmethod
    def normalized(cls, kind, coeffs):
        """ Scale `coeffs` onto the unit sphere. """
        c = np.asarray(coeffs, dtype=np.float64)
        norm = np.sqrt(np.sum(c * c))
        if not norm > 0:
            raise DataError("cannot normalize a zero coefficient vector")
        return cls(kind, tuple(c / norm))

    @property
    def array(self):
        return np.asarray(self.coeffs, dtype=np.float64)

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class LabeledFunction:
    cv: CoefficientVector
    label: Label
    seed: int

    @property
    def kind(self):
        return self.cv.kind
