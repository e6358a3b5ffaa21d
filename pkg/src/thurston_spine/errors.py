"""Exception types raised by the library."""


class SpineError(Exception):
    """Base class for all library errors."""


class DomainError(SpineError, ValueError):
    """Argument outside the supported numeric window or function domain."""


class PreconditionError(SpineError, ValueError):
    """Operation called on a point where its formula does not apply."""


class SolverError(SpineError, RuntimeError):
    pass


class NoSignChangeError(SolverError):
    pass


class MaxIterationError(SolverError):
    pass


class ReductionError(SpineError, RuntimeError):
    """Reduction into the fundamental domain did not terminate."""

    def __init__(self, message, state=None, word=None):
        super().__init__(message)
        self.state = state
        self.word = word
