from .experiment import (COMMANDS, build_detectors, cmd_contour, cmd_curve, cmd_detect, cmd_generate,
    cmd_reconstruct, cmd_report, validate_config)
from .report import CorpusReport

__all__ = ["COMMANDS", "build_detectors", "cmd_contour", "cmd_curve", "cmd_detect", "cmd_generate",
    "cmd_reconstruct", "cmd_report", "validate_config", "CorpusReport"]
