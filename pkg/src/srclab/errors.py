"""Exception hierarchy shared by every srclab module."""


class SrcLabError(Exception):
    """Base class for all srclab errors."""


class GraphError(SrcLabError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TooLarge(GraphError):
    pass


class NotAPath(SrcLabError, ValueError):
    pass


class ColoringMismatch(SrcLabError, ValueError):
    """A coloring does not have one color per edge of its graph."""


class BudgetExceeded(SrcLabError):
    """The exact search hit its coloring budget before certifying a minimum.

    ``upper_bound`` and ``certificate`` carry the best verified coloring known
    at the time; it is *not* certified minimal.
    """

    def __init__(self, message, upper_bound=None, certificate=None, examined=0):
        super().__init__(message)
        self.upper_bound = upper_bound
        self.certificate = certificate
        self.examined = examined


class Acyclic(SrcLabError, ValueError):
    pass


class InvalidPacking(SrcLabError, ValueError):
    pass


class NotUnicyclic(SrcLabError, ValueError):
    pass


class CycleTooLong(SrcLabError, ValueError):
    pass


class SchemeNotApplicable(SrcLabError, ValueError):
    pass


class ConstructionFailed(SrcLabError):
    """A construction produced a coloring that the verifier rejected."""


class NotGBar(SrcLabError, ValueError):
    pass


class GirthOutOfRange(SrcLabError, ValueError):
    pass


class NotCubic(SrcLabError, ValueError):
    pass
