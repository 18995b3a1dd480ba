"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class DisconnectedGraphError(GraphError):
    """A connected graph was required."""


class CapabilityError(RuntimeError):
    """An exhaustive search would exceed its configured size cap."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap."""
