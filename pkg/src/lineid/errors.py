"""Exception types shared across the package."""


class LineIdError(Exception):
    """Base class for all errors raised by lineid."""


class DigraphError(LineIdError, ValueError):
    """Malformed digraph input (loops, duplicate arcs, bad endpoints, parse errors)."""


class PreconditionError(LineIdError, ValueError):
    """An operation was called outside the hypotheses it is defined for."""


class BudgetExhausted(LineIdError):
    """A bounded search ran out of nodes before reaching a conclusion."""

    def __init__(self, message, nodes_explored=0, partial=None):
        super().__init__(message)
        self.nodes_explored = nodes_explored
        self.partial = partial


class VerificationError(LineIdError, RuntimeError):
    """A construction produced output that failed its own post-check.

    This always signals a bug or a misread formula, never bad user input.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
