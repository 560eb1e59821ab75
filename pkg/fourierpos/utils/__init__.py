from . import logger, options, pool
from .utils import default, RateMeter, RateMeters, seed_everything
from .options import get_obj_from_str, instantiate_from_config
from .pool import map_ordered, iter_ordered

__all__ = ["logger", "options", "pool", "default", "RateMeter", "RateMeters", "seed_everything",
    "get_obj_from_str", "instantiate_from_config", "map_ordered", "iter_ordered"]
