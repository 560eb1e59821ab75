__all__ = [
    "FourierPosError",
    "DomainError",
    "DegenerateInputError",
    "KindError",
    "DataError",
    "UsageError",
    "FalsePositiveError",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_DATA",
    "EXIT_FALSE_POSITIVE",
    "exit_code_for",
]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_FALSE_POSITIVE = 3


class FourierPosError(Exception):
    pass


class DomainError(FourierPosError, ValueError):
    """ Argument outside the domain an evaluator supports. """


class DegenerateInputError(DomainError):
    pass


class KindError(FourierPosError, TypeError):
    """ Coefficient vector of the wrong basis family. """


class DataError(FourierPosError, ValueError):
    """ Malformed numbers or files. """


class UsageError(FourierPosError):
    pass


class FalsePositiveError(FourierPosError, RuntimeError):
    """
    A doubly-positive function was flagged by a detector. Both detectors only
    ever flag functions whose transform is negative somewhere, so this is a bug
    in thresholds or in the eigensolver, never a statistic.
    """

    def __init__(self, record, verdict) -> None:
        self.record = record
        self.verdict = verdict
        super().__init__("false positive on {} by {}".format(record, verdict))


def exit_code_for(err: BaseException) -> int:
    if isinstance(err, FalsePositiveError):
        return EXIT_FALSE_POSITIVE
    if isinstance(err, UsageError):
        return EXIT_USAGE
    if isinstance(err, (FourierPosError, OSError)):
        return EXIT_DATA
    raise err
