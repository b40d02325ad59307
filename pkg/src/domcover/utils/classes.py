"""Classes for key objects used in domcover.

Usage:
    Call any required class from a separate script.

"""

from dataclasses import dataclass, field
from typing import Any, Literal, TypedDict

# Types used throughout to refer to vertices and edges
Vertex = int
Edge = tuple[int, int]
VertexSet = frozenset[int]


##########
# GRAPHS #
##########
@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with dense vertex ids `0..n-1`.

    Attributes:
        n: The number of vertices.
        adjacency: Per-vertex neighbor ids, sorted ascending.
        edge_count: The number of edges.

    Notes:
        Build instances with `graph_core.build_graph`, which validates the input. Instances
            are immutable and safe to share across processes.

    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    def __str__(self) -> str:
        """Return a readable representation."""
        return f"Graph(n={self.n}, m={self.edge_count})"

    def degree(self, v: Vertex) -> int:
        """Get the degree of a vertex."""
        return len(self.adjacency[v])

    def neighbors(self, v: Vertex) -> tuple[int, ...]:
        """Get the sorted open neighborhood of a vertex."""
        return self.adjacency[v]

    def edges(self) -> list[Edge]:
        """Get all edges as (smaller id, larger id), in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]


@dataclass(frozen=True)
class StructuralMarks:
    """Leaves, supports and weak supports of a graph.

    Attributes:
        leaves: Vertices of degree one.
        supports: Vertices adjacent to at least one leaf.
        weak_supports: Vertices adjacent to exactly one leaf.
        degrees: Degree of every vertex.

    """

    leaves: VertexSet
    supports: VertexSet
    weak_supports: VertexSet
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring with the smaller side first.

    Attributes:
        side_a: The smaller side (the side holding vertex 0 when sizes are equal).
        side_b: The other side.

    """

    side_a: VertexSet
    side_b: VertexSet


###########
# ORACLES #
###########
@dataclass(frozen=True)
class OracleResult:
    """Output of an exact oracle.

    Attributes:
        value: The optimum (γ, β or α).
        witness: A set attaining the optimum.
        explored: Search nodes visited while computing it.

    """

    value: int
    witness: VertexSet
    explored: int = 0


###############
# RECOGNITION #
###############
@dataclass(frozen=True)
class WitnessGammaSet:
    """Certificate for a positive verdict: a dominating set attaining the claimed γ."""

    vertices: VertexSet


@dataclass(frozen=True)
class ViolatedCondition:
    """Certificate for a negative verdict.

    Attributes:
        condition: Id of the violated condition.
            "1", "2", "3": conditions on a maximum independent set.
            "3a", "3b": conditions on the larger side of a bipartite graph.
            "corona-or-c4": equal sides but neither a corona nor a 4-cycle.
            "degree-bound": a grid segment crossing five or more interior segments.
            "h-bipartite": the graph minus support-support edges is not bipartite.
            "support-sides": supports of one component fall on both sides.
        vertices: The vertices that violate it.

    """

    condition: str
    vertices: tuple[int, ...]


Certificate = WitnessGammaSet | ViolatedCondition


@dataclass(frozen=True)
class Verdict:
    """Class-membership answer with a machine-checkable certificate.

    Attributes:
        member: Whether the input belongs to the class.
        certificate: A witness γ-set if `member`, else the violated condition.
        pair_checks: Elementary pair tests performed.

    """

    member: bool
    certificate: Certificate
    pair_checks: int = 0

    def __post_init__(self) -> None:
        """Ensure certificate kind matches the membership bit."""
        if self.member != isinstance(self.certificate, WitnessGammaSet):
            raise ValueError("ERROR @ Verdict. Certificate does not match membership bit.")


#########
# TREES #
#########
OpKind = Literal["O1", "O2", "O3", "O4"]


@dataclass(frozen=True)
class RootedTreeView:
    """A graph known to be a tree, rooted at vertex 0.

    Attributes:
        graph: The underlying graph.
        parent: Parent of every vertex (-1 for the root).
        order: Vertices in breadth-first order from the root; reversed it is a valid post-order.
        bipartition: Bipartition of the tree, smaller side first.

    """

    graph: Graph
    parent: tuple[int, ...]
    order: tuple[int, ...]
    bipartition: Bipartition


@dataclass(frozen=True)
class TreeOp:
    """One tree-growing operation.

    Attributes:
        kind: One of O1, O2, O3, O4.
        attacher: Vertex of the existing tree the new vertices hang from.
        new_ids: Ids of the new vertices. O1: (b,). O2: (a,). O3: (b, a). O4: (a, b).
            The first id is always the one joined to the attacher.

    """

    kind: OpKind
    attacher: Vertex
    new_ids: tuple[int, ...] = ()


@dataclass(frozen=True)
class BuildScript:
    """Sequence of operations growing a tree from K2.

    Attributes:
        ops: Operations in application order.
        base: Ids of the starting K2 as (A-vertex, B-vertex).

    """

    ops: tuple[TreeOp, ...] = ()
    base: tuple[int, int] = (0, 1)

    def __len__(self) -> int:
        """Return the number of operations."""
        return len(self.ops)


@dataclass(frozen=True)
class NotMember:
    """Outcome of a failed deconstruction: the tree's γ is below its smaller side."""

    gamma: int
    size_a: int


#########
# GRIDS #
#########
Orientation = Literal["H", "V"]


@dataclass(frozen=True, order=True)
class Segment:
    """An axis-parallel closed segment with scaled-integer coordinates.

    Attributes:
        orientation: "H" for horizontal, "V" for vertical.
        fixed: The y of a horizontal or the x of a vertical.
        lo: Smaller end of the span.
        hi: Larger end of the span.

    """

    orientation: Orientation
    fixed: int
    lo: int
    hi: int

    def __str__(self) -> str:
        """Return a readable representation."""
        return f"{self.orientation}[{self.fixed}: {self.lo} => {self.hi}]"

    def intersects(self, other: "Segment") -> bool:
        """Closed-segment intersection test for a perpendicular pair."""
        if self.orientation == other.orientation:
            return False
        return self.lo <= other.fixed <= self.hi and other.lo <= self.fixed <= other.hi


@dataclass
class SweepStats:
    """Work counters for one plane sweep.

    Attributes:
        queries: Vertical range queries issued.
        reported: Edges reported by those queries.
        visited: Active entries walked by the range queries.
        probes: Binary-search steps charged to inserts, deletes and query bounds, each
            costing `len(active).bit_length()`, which is ceil(log2(len(active) + 1)).
        max_active: Largest active set seen.

    """

    queries: int = 0
    reported: int = 0
    visited: int = 0
    probes: int = 0
    max_active: int = 0


@dataclass(frozen=True)
class Grid:
    """A validated family of segments.

    Attributes:
        segments: The segments, indexed by position.
        vertical_ids: Indices of vertical segments.
        horizontal_ids: Indices of horizontal segments.
        scale: Power of ten the input coordinates were multiplied by.
        graph: Intersection graph built during validation.
        sweep_stats: Counters of the sweep that built `graph`.

    """

    segments: tuple[Segment, ...]
    vertical_ids: VertexSet
    horizontal_ids: VertexSet
    scale: int = 0
    graph: Graph | None = field(default=None, compare=False, repr=False)
    sweep_stats: SweepStats | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class GridGraph:
    """Intersection graph of a grid with the vertical/horizontal split.

    Attributes:
        graph: Graph over segment indices.
        bipartition: Vertical and horizontal ids, smaller side first.
        stats: Sweep counters from construction.

    """

    graph: Graph
    bipartition: Bipartition
    stats: SweepStats = field(default_factory=SweepStats, compare=False)


#######
# CLI #
#######
class ReportStats(TypedDict):
    """Instrumentation attached to every report."""

    pair_checks: int
    oracle_nodes: int
    elapsed_ms: float


# A single JSON object emitted by the command-line runner ("class" is a keyword, hence the call form)
VerdictReport = TypedDict(
    "VerdictReport",
    {
        "command": str,
        "input": str,
        "class": str,
        "member": bool,
        "certificate": dict[str, Any],
        "stats": ReportStats,
        "details": dict[str, Any],
        "labels": dict[str, int],
    },
    total=False,
)


#########
# PRINT #
#########
class Colors:
    """Colours to use in printouts."""

    RED = "\033[31m"
    GREEN = "\033[32m"
    BLUE = "\033[34m"
    YELLOW = "\033[33m"
    RESET = "\033[0m"
