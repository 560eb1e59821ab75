from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..basis import CoefficientVector, Kind, LabeledFunction
from ..errors import DomainError, UsageError

__all__ = ["SweepGrid", "DetectorVerdict", "BaseDetector", "VERDICT_FIELDS"]

VERDICT_FIELDS = ["index", "label", "detector", "order", "detected", "witness", "value"]


@dataclass(frozen=True)
class SweepGrid:
    start: float
    stop: float
    steps: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.steps < 1 or self.stop < self.start:
            raise DomainError("invalid sweep {}".format(self))
        if self.spacing not in ("linear", "log"):
            raise DomainError("sweep spacing must be linear or log, got {!r}".format(self.spacing))
        if self.spacing == "log" and self.start <= 0:
            raise DomainError("log sweep needs start > 0")

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, dict):
            return cls(**value)
        return cls(*value)

    @property
    def values(self):
        if self.steps == 1:
            return np.asarray([self.start], dtype=np.float64)
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.steps)
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class DetectorVerdict:
    """
    One detector run on one function.

    `value` is the minimal eigenvalue (Bochner) or the minimal characteristic
    function value (Poisson); `witness` holds the parameters it was found at.
    """
    detector: str
    detected: bool
    value: float
    witness: dict = field(default_factory=dict)
    order: Optional[int] = None

    def witness_str(self):
        return ";".join("{}={:.17g}".format(k, v) for k, v in self.witness.items())

    def row(self, index, label):
        return [
            index,
            label.value if hasattr(label, "value") else label,
            self.detector,
            "" if self.order is None else self.order,
            int(self.detected),
            self.witness_str(),
            "{:.17g}".format(self.value),
        ]


class BaseDetector(metaclass=ABCMeta):
    kind: Kind = None

    def __init__(self, name=None) -> None:
        self.name = name or type(self).__name__

    def check_kind(self, cv: CoefficientVector):
        if cv.kind is not self.kind:
            raise UsageError("{} runs on {} functions, got {}".format(self.name, self.kind.value, cv.kind.value))

    @abstractmethod
    def detect(self, cv: CoefficientVector, seed=0) -> DetectorVerdict:
        pass

    def __call__(self, fn: LabeledFunction) -> DetectorVerdict:
        self.check_kind(fn.cv)
        return self.detect(fn.cv, seed=fn.seed)
