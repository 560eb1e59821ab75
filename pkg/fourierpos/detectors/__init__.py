from . import bochner, poisson
from .base import SweepGrid, DetectorVerdict, BaseDetector, VERDICT_FIELDS
from .bochner import ToeplitzDetector, PointSetDetector, detect_1d, detect_2d
from .poisson import PoissonDetector1D, PoissonDetector2D, detect_poisson_1d, detect_poisson_2d

__all__ = ["bochner", "poisson", "SweepGrid", "DetectorVerdict", "BaseDetector", "VERDICT_FIELDS",
    "ToeplitzDetector", "PointSetDetector", "detect_1d", "detect_2d", "PoissonDetector1D", "PoissonDetector2D",
    "detect_poisson_1d", "detect_poisson_2d"]
