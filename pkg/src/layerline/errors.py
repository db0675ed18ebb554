"""Exception types shared across the package."""


class LayerlineError(Exception):
    """Base class for every error raised by layerline."""


class ParamsOutOfRange(LayerlineError, ValueError):
    pass


class PreconditionViolated(LayerlineError, ValueError):
    pass


class Disconnected(LayerlineError):
    """Raised when an operation needs a connected graph."""


class OddCycle(LayerlineError):
    """Raised by bipartition when the graph contains an odd cycle."""


class NotAutomorphism(LayerlineError):
    pass


class CompNotApplicable(LayerlineError, ValueError):
    """The complement map only exists on the middle layers, n = 2k + 1."""


class SearchBudgetExceeded(LayerlineError):
    """A combinatorial search visited more nodes than its budget allows."""


# Enumeration budgets share the same failure mode as search budgets.
BudgetExceeded = SearchBudgetExceeded


class NotEulerian(LayerlineError):
    pass


class InvalidConnectionSet(LayerlineError, ValueError):
    pass


class NotSquare(LayerlineError, ValueError):
    pass


class GroupAxiomError(LayerlineError):
    """A multiplication rule failed closure, identity, inverse or associativity."""


class DivisionByZero(LayerlineError, ZeroDivisionError):
    pass
