import math
import os
import random
from collections import OrderedDict
from inspect import isfunction

import numpy as np
import torch

__all__ = [
    "default",
    "RateMeter",
    "RateMeters",
    "seed_everything",
]


def default(val, d):
    if val is not None:
        return val
    return d() if isfunction(d) else d


class RateMeter(object):
    """ Success counter with a binomial standard error. """

    def __init__(self):
        self.hits = 0
        self.cnt = 0

    def update(self, hit, n=1):
        if n > 0:
            self.hits += int(hit) * n
            self.cnt += n

    @property
    def rate(self):
        return self.hits / self.cnt if self.cnt else 0.0

    @property
    def stderr(self):
        if not self.cnt:
            return 0.0
        p = self.rate
        return math.sqrt(p * (1.0 - p) / self.cnt)

    def __call__(self):
        return self.rate


class RateMeters:
    def __init__(self, *keys) -> None:
        self.data = OrderedDict()
        for k in keys:
            self.data[k] = RateMeter()

    def __getitem__(self, key):
        if key not in self.data:
            self.data[key] = RateMeter()
        return self.data[key]

    def __contains__(self, key):
        return key in self.data

    def keys(self):
        return self.data.keys()

    def to_msg(self, format="%s:%.2f%%"):
        return " ".join(format % (k, 100.0 * v()) for k, v in self.data.items())


def seed_everything(seed):
    random.seed(seed)
    os.environ["PYTHONHASHSEED"] = str(seed)
    np.random.seed(seed % 2**32)
    torch.manual_seed(seed)
