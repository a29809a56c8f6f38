"""Exception hierarchy for maglap."""


class MaglapError(Exception):
    """Base class for every error raised by this package."""


class GraphError(MaglapError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class BadEdgeId(GraphError, IndexError):
    pass


class Disconnected(GraphError):
    pass


class NotAMatching(GraphError):
    pass


class NotAChord(GraphError):
    pass


class GraphMismatch(GraphError):
    pass


class SizeMismatch(MaglapError, ValueError):
    pass


class NotClosed(MaglapError, ValueError):
    pass


class BadShift(MaglapError, ValueError):
    pass


class CycleTooSmall(MaglapError, ValueError):
    pass


class EigenSolverFailure(MaglapError, RuntimeError):
    pass


class TooLarge(MaglapError):
    """Hamiltonian search gave up before exhausting the search space."""


class BudgetExceeded(MaglapError):
    pass


class NotApplicable(MaglapError):
    pass


class SoundnessViolation(MaglapError, AssertionError):
    """A spectral certificate contradicts an exact combinatorial oracle.

    The underlying inequalities make this impossible, so seeing it means a bug.
    """


class ParseError(MaglapError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
