"""Static undirected graphs with dense integer edge ids.

Vertices are ``0..n-1``.  Edges receive ids ``0..m-1`` in input order, and
every other module in this package keys its per-edge state by those ids.
Graphs are simple (no self-loops, no parallel edges) and immutable once
built.

The weight of an edge is the smaller of its endpoint degrees; the weight
of a graph is the sum of its edge weights.  For sparse graphs this sum
stays close to linear in the edge count, which is what makes the
coloring algorithms in this package fast, so the module also exposes a
degeneracy computation as a cheap density proxy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph construction or parse input."""


class SelfLoopError(GraphError):
    def __init__(self, index: int, u: int, v: int):
        super().__init__(f"edge {index} ({u}, {v}) is a self-loop")
        self.index = index
        self.edge = (u, v)


class DuplicateEdgeError(GraphError):
    def __init__(self, index: int, u: int, v: int):
        super().__init__(f"edge {index} ({u}, {v}) duplicates an earlier edge")
        self.index = index
        self.edge = (u, v)


class VertexOutOfRangeError(GraphError):
    def __init__(self, index: int, u: int, v: int, n: int):
        super().__init__(f"edge {index} ({u}, {v}) has an endpoint outside 0..{n - 1}")
        self.index = index
        self.edge = (u, v)


class ParseError(GraphError):
    """Malformed text input; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Immutable adjacency-list graph.

    Attributes:
        n: number of vertices.
        m: number of edges.
        endpoints: per edge id, the ``(u, v)`` pair as given on input.
        adjacency: per vertex, a list of ``(neighbor, edge_id)`` pairs.
        degree: per vertex, its degree.
        max_degree: largest degree (0 for an edgeless graph).
    """

    n: int
    m: int
    endpoints: list[tuple[int, int]]
    adjacency: list[list[tuple[int, int]]]
    degree: list[int]
    max_degree: int

    def other_endpoint(self, edge: int, vertex: int) -> int:
        u, v = self.endpoints[edge]
        if vertex == u:
            return v
        if vertex == v:
            return u
        raise ValueError(f"vertex {vertex} is not an endpoint of edge {edge}")


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    graph_weight: int
    degeneracy: int
    normalized_weight: float


def build_graph(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises :class:`VertexOutOfRangeError`, :class:`SelfLoopError` or
    :class:`DuplicateEdgeError`, each identifying the offending edge.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    endpoints: list[tuple[int, int]] = []
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for index, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(index, u, v, n)
        if u == v:
            raise SelfLoopError(index, u, v)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(index, u, v)
        seen.add(key)
        endpoints.append((u, v))
        adjacency[u].append((v, index))
        adjacency[v].append((u, index))
    degree = [len(adjacency[v]) for v in range(n)]
    max_degree = max(degree, default=0)
    return Graph(n, len(endpoints), endpoints, adjacency, degree, max_degree)


def edge_weight(g: Graph, edge: int) -> int:
    """Weight of an edge: the smaller endpoint degree."""
    u, v = g.endpoints[edge]
    du, dv = g.degree[u], g.degree[v]
    return du if du < dv else dv


def graph_weight(g: Graph) -> int:
    """Total weight: sum of min endpoint degrees over all edges."""
    degree = g.degree
    total = 0
    for u, v in g.endpoints:
        du, dv = degree[u], degree[v]
        total += du if du < dv else dv
    return total


def degeneracy(g: Graph) -> int:
    """Degeneracy via min-degree peeling.

    Repeatedly removes a minimum-degree vertex; the answer is the largest
    degree seen at removal time.  Runs in O(n + m) with lazy bucket
    queues.  The degeneracy is a constant-factor proxy for arboricity:
    arboricity <= degeneracy <= 2*arboricity - 1.
    """
    n = g.n
    if n == 0:
        return 0
    deg = list(g.degree)
    bins: list[list[int]] = [[] for _ in range(g.max_degree + 1)]
    for v in range(n):
        bins[deg[v]].append(v)
    removed = [False] * n
    best = 0
    cur = 0
    adjacency = g.adjacency
    for _ in range(n):
        # Skip stale bucket entries; a vertex is live only in the bucket
        # matching its current degree.
        while True:
            if cur >= len(bins):  # pragma: no cover - defensive
                return best
            if not bins[cur]:
                cur += 1
                continue
            v = bins[cur].pop()
            if not removed[v] and deg[v] == cur:
                break
        removed[v] = True
        if cur > best:
            best = cur
        for u, _ in adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                bins[deg[u]].append(u)
        if cur:
            cur -= 1
    return best


def graph_stats(g: Graph) -> GraphStats:
    w = graph_weight(g)
    return GraphStats(
        max_degree=g.max_degree,
        graph_weight=w,
        degeneracy=degeneracy(g),
        normalized_weight=(w / g.m) if g.m else 0.0,
    )


def read_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first significant line is ``n m``; exactly ``m`` lines ``u v``
    follow (0-indexed vertices).  Blank lines and ``#`` comments are
    skipped anywhere.  Raises :class:`ParseError` with the offending
    line number, or the :func:`build_graph` errors for structural
    problems.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected two integers, got {raw.strip()!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"expected two integers, got {raw.strip()!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(line_no, "header counts must be non-negative")
            header = (a, b)
        else:
            if len(edges) >= header[1]:
                raise ParseError(line_no, f"more than {header[1]} edge lines")
            edges.append((a, b))
    if header is None:
        raise ParseError(1, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(1, f"header promises {m} edges, found {len(edges)}")
    return build_graph(edges, n)


def write_edge_list(g: Graph) -> str:
    """Serialize in the format accepted by :func:`read_edge_list`."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.endpoints)
    return "\n".join(lines) + "\n"


def canonical_edge_list(g: Graph) -> list[tuple[int, int]]:
    """Sorted list of normalized ``(min, max)`` endpoint pairs."""
    return sorted((u, v) if u < v else (v, u) for u, v in g.endpoints)
