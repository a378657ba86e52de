"""Exception hierarchy shared by all modules."""


class GreenBoundError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(GreenBoundError, ValueError):
    pass


class EigenFailure(GreenBoundError):
    pass


class RangeError(GreenBoundError, OverflowError):
    pass


class EvaluationError(GreenBoundError):
    """A jet evaluator was asked for a point where the function is singular."""


class ContourError(GreenBoundError):
    pass


class DistinctnessViolation(GreenBoundError, ValueError):
    pass


class DichotomyViolation(GreenBoundError):
    """Some eigenvalue lies on (or numerically at) the imaginary axis."""


class WindowError(GreenBoundError):
    pass


class GenerationError(GreenBoundError):
    pass
