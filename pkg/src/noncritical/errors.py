"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for invalid input or failed preconditions."""


class LoopRejected(GraphError):
    def __init__(self, vertex, line=None):
        self.vertex = vertex
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"loop at vertex {vertex}{where}")


class DuplicateArc(GraphError):
    def __init__(self, arc, line=None):
        self.arc = arc
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate arc {arc[0]}->{arc[1]}{where}")


class IndexOutOfRange(GraphError):
    def __init__(self, vertex, n, line=None):
        self.vertex = vertex
        self.n = n
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"vertex {vertex} outside 0..{n - 1}{where}")


class EdgeListSyntaxError(GraphError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CountMismatch(GraphError):
    pass


class EmptySet(GraphError):
    pass


class NotStronglyConnected(GraphError):
    pass


class TooSmall(GraphError):
    pass


class TooLarge(GraphError):
    pass


class BadSize(GraphError):
    pass


class DegenerateWhole(GraphError):
    pass


class SeedNotStronglyConnected(GraphError):
    pass


class SeedNotProper(GraphError):
    pass


class NoHandle(GraphError):
    pass


class UnreachableVertex(GraphError):
    pass


class PathEnumerationBudgetExceeded(GraphError):
    pass


class HypothesisNotMet(GraphError):
    def __init__(self, message, hypothesis=None):
        self.hypothesis = hypothesis
        super().__init__(message)


class ExhaustedBudget(RuntimeError):
    pass


class TheoremContradicted(RuntimeError):
    """The constructive argument broke down on a hypothesis-satisfying input.

    This is a reportable discovery rather than a crash: ``digraph`` holds the
    full instance so it can be archived and replayed.
    """

    def __init__(self, reason, digraph=None, detail=None):
        self.reason = reason
        self.digraph = digraph
        self.detail = detail or {}
        super().__init__(reason)
