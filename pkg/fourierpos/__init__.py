__version__ = "0.1.0"

from .utils import logger, options
from . import errors, specialfn, basis, oracle, detectors

__all__ = ["logger", "options", "errors", "specialfn", "basis", "oracle", "detectors", "__version__"]
