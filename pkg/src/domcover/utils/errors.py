"""Errors raised across domcover.

Every error is a `ValueError` underneath, so callers that only care about "bad input"
can keep catching `ValueError`. The command-line runner maps any `DomcoverError` to exit code 2.

Usage:
    Raise or catch any error from a separate script.

"""


class DomcoverError(ValueError):
    """Base class for every input or precondition error raised by domcover."""


##########
# GRAPHS #
##########
class OutOfRange(DomcoverError):
    """An edge endpoint is not a valid vertex id."""


class SelfLoop(DomcoverError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(DomcoverError):
    """The same unordered edge was given twice."""


class Disconnected(DomcoverError):
    """The operation requires a connected graph."""


class NotBipartite(DomcoverError):
    """The operation requires a bipartite graph."""


class TooSmall(DomcoverError):
    """The input is below the minimum size the operation accepts."""


class IsolatedVertex(DomcoverError):
    """The operation requires a graph without isolated vertices."""


###########
# ORACLES #
###########
class SizeCapExceeded(DomcoverError):
    """The graph is larger than the exact oracles are allowed to handle."""

    def __init__(self, n: int, cap: int):
        """Keep the offending size and the cap for reports."""
        super().__init__(f"ERROR @ oracle. Graph has {n} vertices, above the cap of {cap}.")
        self.n = n
        self.cap = cap


class XDoesNotContainX(DomcoverError):
    """A private neighborhood was requested for a vertex outside its set."""


class NotMaximumIndependent(DomcoverError):
    """A supplied vertex set is not a maximum independent set."""


#########
# TREES #
#########
class NotATree(DomcoverError):
    """The operation requires a tree."""


class PreconditionViolated(DomcoverError):
    """A tree operation was requested at an attacher that does not allow it."""

    def __init__(self, kind: str, attacher: int, reason: str):
        """Keep the operation kind, attacher and reason for reports."""
        super().__init__(f"ERROR @ {kind}. Attacher {attacher} not allowed: {reason}.")
        self.kind = kind
        self.attacher = attacher
        self.reason = reason


#########
# GRIDS #
#########
class GridError(DomcoverError):
    """Base class for grid validation errors; carries the offending segment indices."""

    def __init__(self, message: str, segment_ids: tuple[int, ...] = ()):
        """Keep the indices of the offending segments so callers can map them to lines."""
        super().__init__(message)
        self.segment_ids = segment_ids


class TooFewSegments(GridError):
    """A grid needs at least two segments."""


class DegenerateSegment(GridError):
    """A segment whose endpoints coincide."""


class DuplicateSegment(GridError):
    """Two identical segments."""


class CollinearOverlap(GridError):
    """Two collinear segments share at least one point."""


class DisconnectedUnion(GridError):
    """The union of the segments is not connected."""


###########
# PARSING #
###########
class ParseError(DomcoverError):
    """A malformed line in an input file."""

    def __init__(self, line_no: int, message: str):
        """Keep the 1-based line number of the malformed line."""
        super().__init__(f"ERROR @ line {line_no}. {message}")
        self.line_no = line_no
