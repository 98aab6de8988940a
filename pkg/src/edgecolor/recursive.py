"""Divide-and-conquer coloring via Euler partitions.

An Euler partition decomposes the edges into maximal tours: every
odd-degree vertex is the endpoint of exactly one open tour, and the
remaining edges fall into closed tours.  Assigning the edges of each
tour alternately to two sides splits the graph into halves whose degrees
differ from half the original by at most one everywhere:

    d(v)/2 - 1  <=  d_side(v)  <=  d(v)/2 + 1.

The recursive colorer splits until the max degree falls under a
threshold tied to the *original* vertex count, colors the leaves with
the sequential algorithm, and on the way back up merges the two child
palettes, prunes the cheapest surplus color classes (by total edge
weight), and repairs the few uncolored edges sequentially.  Because at
most three classes are pruned out of at least max_degree + 4, the weight
of edges to repair is at most ``3 * W / (max_degree + 4)`` per node,
which keeps repair cheap on every level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from random import Random

from .coloring import PartialColoring, ColorConflictError
from .graph import Graph, build_graph, edge_weight, graph_weight
from .sequential import color_edges

LEFT = 0
RIGHT = 1


class ImproperInputError(ValueError):
    """A coloring handed to merge/prune is not total and proper."""


@dataclass(frozen=True)
class EulerSplit:
    """Result of an Euler partition.

    The two child graphs use dense vertex and edge ids of their own;
    ``left_vertices[i]`` is the parent id of the left child's vertex
    ``i`` (same for the right), and ``edge_map[e]`` maps each parent
    edge to ``(side, child edge id)`` with side 0 = left, 1 = right.
    Vertices isolated on a side are dropped from that child.
    """

    left: Graph
    right: Graph
    left_vertices: list[int]
    right_vertices: list[int]
    edge_map: list[tuple[int, int]]

    def side_degrees(self) -> tuple[dict[int, int], dict[int, int]]:
        """Per side, degrees keyed by parent vertex id (absent = 0)."""
        left = {p: self.left.degree[c] for c, p in enumerate(self.left_vertices)}
        right = {p: self.right.degree[c] for c, p in enumerate(self.right_vertices)}
        return left, right


def _tour_decomposition(g: Graph) -> list[tuple[list[int], list[int]]]:
    """Greedy maximal-tour removal; returns (vertices, edge_ids) per tour.

    Open tours are walked from odd-degree vertices first, so each odd
    vertex terminates exactly one tour; what remains has even degrees
    everywhere and decomposes into closed tours.  Linear time via one
    adjacency cursor per vertex.
    """
    used = bytearray(g.m)
    cursor = [0] * g.n
    rem = list(g.degree)
    adjacency = g.adjacency
    tours: list[tuple[list[int], list[int]]] = []

    def walk(start: int) -> tuple[list[int], list[int]]:
        verts = [start]
        eids: list[int] = []
        cur = start
        while True:
            adj = adjacency[cur]
            i = cursor[cur]
            while i < len(adj) and used[adj[i][1]]:
                i += 1
            cursor[cur] = i
            if i == len(adj):
                return verts, eids
            nxt, e = adj[i]
            used[e] = 1
            rem[cur] -= 1
            rem[nxt] -= 1
            verts.append(nxt)
            eids.append(e)
            cur = nxt

    for v in range(g.n):
        if g.degree[v] % 2 == 1 and rem[v] % 2 == 1:
            tours.append(walk(v))
    for v in range(g.n):
        while rem[v] > 0:
            tours.append(walk(v))
    return tours


def euler_partition(g: Graph) -> EulerSplit:
    """Split ``g`` into two halves along an Euler partition.

    Tour edges alternate sides.  The free choices (which side an open
    tour starts on; where an odd closed tour starts and which side gets
    its doubled pair) greedily reduce the running per-vertex imbalance;
    any choice satisfies the +-1 degree bounds, this just tightens
    typical splits.  Deterministic for a given graph.
    """
    side = bytearray(g.m)
    imbalance = [0] * g.n  # (left degree - right degree) so far

    for verts, eids in _tour_decomposition(g):
        length = len(eids)
        if length == 0:
            continue
        closed = verts[0] == verts[-1]
        if not closed:
            u, w = verts[0], verts[-1]
            # Starting side s gives the first edge to s and the last edge
            # to s when the length is odd, to the other side when even.
            best = None
            for s in (LEFT, RIGHT):
                du = 1 if s == LEFT else -1
                last_left = (s == LEFT) == (length % 2 == 1)
                dw = 1 if last_left else -1
                cost = abs(imbalance[u] + du) + abs(imbalance[w] + dw)
                if best is None or cost < best[0]:
                    best = (cost, s, du, dw)
            _, s, du, dw = best
            imbalance[u] += du
            imbalance[w] += dw
            _assign_alternating(side, eids, s)
        elif length % 2 == 0:
            # Even closed tour: perfectly balanced at every vertex no
            # matter where it starts.
            _assign_alternating(side, eids, LEFT)
        else:
            # Odd closed tour: whoever starts it gets two extra edges on
            # the starting side.  Rotate the tour to start at the visited
            # vertex with the smallest current imbalance and give the
            # doubled pair to its lighter side.
            best_p = 0
            best_imb = abs(imbalance[verts[0]])
            for p in range(1, length):
                b = abs(imbalance[verts[p]])
                if b < best_imb:
                    best_imb = b
                    best_p = p
            x = verts[best_p]
            s = LEFT if imbalance[x] <= 0 else RIGHT
            rotated = eids[best_p:] + eids[:best_p]
            _assign_alternating(side, rotated, s)
            imbalance[x] += 2 if s == LEFT else -2

    return _materialize_split(g, side)


def _assign_alternating(side: bytearray, eids: list[int], start_side: int) -> None:
    s = start_side
    for e in eids:
        side[e] = s
        s ^= 1


def _materialize_split(g: Graph, side: bytearray) -> EulerSplit:
    edge_map: list[tuple[int, int]] = [(-1, -1)] * g.m
    side_edges: tuple[list[tuple[int, int]], list[tuple[int, int]]] = ([], [])
    vertex_maps: list[list[int]] = [[], []]
    vertex_index: list[dict[int, int]] = [{}, {}]
    for e in range(g.m):
        s = side[e]
        u, v = g.endpoints[e]
        idx = vertex_index[s]
        for x in (u, v):
            if x not in idx:
                idx[x] = len(vertex_maps[s])
                vertex_maps[s].append(x)
        edge_map[e] = (s, len(side_edges[s]))
        side_edges[s].append((idx[u], idx[v]))
    left = build_graph(side_edges[LEFT], len(vertex_maps[LEFT]))
    right = build_graph(side_edges[RIGHT], len(vertex_maps[RIGHT]))
    return EulerSplit(left, right, vertex_maps[LEFT], vertex_maps[RIGHT], edge_map)


def merge_colorings(
    g: Graph, split: EulerSplit, chi_left: PartialColoring, chi_right: PartialColoring
) -> PartialColoring:
    """Combine two total child colorings over disjoint palettes.

    Right-side colors are offset by the left palette size, so the merged
    palette has ``k_left + k_right`` colors.  Raises
    :class:`ImproperInputError` if either input is partial or the merge
    creates a conflict (impossible for proper inputs).
    """
    if chi_left.uncolored or chi_right.uncolored:
        raise ImproperInputError("merge requires total colorings on both sides")
    offset = chi_left.k
    merged = PartialColoring(g, offset + chi_right.k)
    left_colors = chi_left.color
    right_colors = chi_right.color
    for e, (s, ce) in enumerate(split.edge_map):
        c = left_colors[ce] if s == LEFT else offset + right_colors[ce]
        try:
            merged.assign(e, c)
        except ColorConflictError as exc:
            raise ImproperInputError(f"child colorings merge improperly: {exc}") from exc
    return merged


def prune_min_weight_colors(
    g: Graph, chi: PartialColoring, target: int, by: str = "weight"
) -> PartialColoring:
    """Uncolor surplus color classes, keeping the ``target`` costliest.

    The input must be a total coloring on at most ``target + 3`` colors.
    The ``k - target`` classes minimizing total edge weight (ties to the
    lower color index) are uncolored; surviving classes are relabeled
    order-preservingly into ``1..target`` so the result lives on a
    palette of exactly ``target`` colors.  With ``k <= target`` this is
    the identity.  ``by="size"`` prunes by class cardinality instead, as
    a benchmark ablation.
    """
    k = chi.k
    if k <= target:
        return chi
    surplus = k - target
    if surplus > 3:
        raise ValueError(
            f"palette {k} exceeds target {target} by {surplus} > 3; "
            "merged palettes never do"
        )
    if chi.uncolored:
        raise ImproperInputError("prune requires a total coloring")
    if by not in ("weight", "size"):
        raise ValueError(f"unknown prune key {by!r}")
    cost = [0] * (k + 1)
    colors = chi.color
    if by == "weight":
        for e in range(g.m):
            cost[colors[e]] += edge_weight(g, e)
    else:
        for e in range(g.m):
            cost[colors[e]] += 1
    doomed = set(sorted(range(1, k + 1), key=lambda c: (cost[c], c))[:surplus])
    remap = [0] * (k + 1)
    nxt = 1
    for c in range(1, k + 1):
        if c not in doomed:
            remap[c] = nxt
            nxt += 1
    out = PartialColoring(g, target)
    for e in range(g.m):
        c = colors[e]
        if c not in doomed:
            out.assign(e, remap[c])
    return out


# -- recursion driver ---------------------------------------------------------


@dataclass(frozen=True)
class RecursionNode:
    """One subproblem in the recursion tree, as seen by tracing."""

    level: int
    n_active: int
    m: int
    max_degree: int
    weight: int
    degrees: dict[int, int]  # original vertex id -> degree here
    is_base: bool
    merged_palette: int | None
    pruned_weight: int | None


@dataclass
class RecursionTrace:
    """Trace of a recursive run: every node, plus root-level context."""

    root_degrees: list[int] = field(default_factory=list)
    root_weight: int = 0
    root_max_degree: int = 0
    root_m: int = 0
    prune_by: str = "weight"
    nodes: list[RecursionNode] = field(default_factory=list)


@dataclass(frozen=True)
class LevelStats:
    """Per-level aggregates of a traced run, with invariant findings.

    ``delta_ref`` and ``weight_ref`` are the ideal halving references
    ``max_degree / 2^level`` and ``weight / 2^level`` of the root.  The
    recorded violations cover: per-subgraph max degree within +-2 of
    ``delta_ref``; per-vertex degrees within +-2 of the halved original
    degree; level weight sum at most ``weight_ref + 2 * m``.
    """

    level: int
    subgraphs: list[tuple[int, int, int]]  # (max_degree, weight, m) per node
    total_weight: int
    delta_ref: float
    weight_ref: float
    violations: list[str]


def recursion_threshold(root_n: int) -> float:
    """Max degree below which a subproblem is colored directly."""
    if root_n < 2:
        return float("inf")
    return 2.0 * math.sqrt(root_n / math.log2(root_n))


def recursive_color_edges(
    g: Graph,
    rng: Random,
    trace: RecursionTrace | None = None,
    prune_by: str = "weight",
) -> PartialColoring:
    """Color all edges with at most ``max_degree + 1`` colors recursively.

    Splits via :func:`euler_partition` while the max degree exceeds
    ``2 * sqrt(n0 / log2(n0))`` where ``n0`` is the vertex count of the
    *top-level* graph; ties go to the base case.  Children consume
    independent random streams seeded from the parent stream, so a fixed
    seed reproduces the run no matter how the children are scheduled.
    """
    if trace is not None:
        trace.root_degrees = list(g.degree)
        trace.root_weight = graph_weight(g)
        trace.root_max_degree = g.max_degree
        trace.root_m = g.m
        trace.prune_by = prune_by
    return _recurse(g, rng, trace, prune_by, recursion_threshold(g.n), 0, None)


def _recurse(
    g: Graph,
    rng: Random,
    trace: RecursionTrace | None,
    prune_by: str,
    threshold: float,
    level: int,
    vmap: list[int] | None,
) -> PartialColoring:
    if g.max_degree <= threshold:
        chi = PartialColoring(g, g.max_degree + 1)
        color_edges(g, chi, rng)
        if trace is not None:
            _record(trace, g, level, vmap, True, None, None)
        return chi
    split = euler_partition(g)
    seed_left = rng.getrandbits(64)
    seed_right = rng.getrandbits(64)
    if vmap is None:
        lmap, rmap = split.left_vertices, split.right_vertices
    else:
        lmap = [vmap[p] for p in split.left_vertices]
        rmap = [vmap[p] for p in split.right_vertices]
    chi_left = _recurse(split.left, Random(seed_left), trace, prune_by, threshold, level + 1, lmap)
    chi_right = _recurse(split.right, Random(seed_right), trace, prune_by, threshold, level + 1, rmap)
    merged = merge_colorings(g, split, chi_left, chi_right)
    merged_palette = merged.k
    chi = prune_min_weight_colors(g, merged, g.max_degree + 1, by=prune_by)
    pruned_weight = sum(edge_weight(g, e) for e in chi.uncolored)
    color_edges(g, chi, rng)
    if trace is not None:
        _record(trace, g, level, vmap, False, merged_palette, pruned_weight)
    return chi


def _record(
    trace: RecursionTrace,
    g: Graph,
    level: int,
    vmap: list[int] | None,
    is_base: bool,
    merged_palette: int | None,
    pruned_weight: int | None,
) -> None:
    if vmap is None:
        degrees = {v: d for v, d in enumerate(g.degree)}
    else:
        degrees = {vmap[v]: g.degree[v] for v in range(g.n)}
    trace.nodes.append(
        RecursionNode(
            level=level,
            n_active=sum(1 for d in g.degree if d > 0),
            m=g.m,
            max_degree=g.max_degree,
            weight=graph_weight(g),
            degrees=degrees,
            is_base=is_base,
            merged_palette=merged_palette,
            pruned_weight=pruned_weight,
        )
    )


def collect_level_stats(trace: RecursionTrace) -> list[LevelStats]:
    """Aggregate a recursion trace per level and check the halving bounds.

    All comparisons are exact integer arithmetic (scaled by 2^level), so
    no floating-point slack is involved.
    """
    if not trace.nodes:
        return []
    by_level: dict[int, list[RecursionNode]] = {}
    for node in trace.nodes:
        by_level.setdefault(node.level, []).append(node)
    root_delta = trace.root_max_degree
    root_weight = trace.root_weight
    root_m = trace.root_m
    # Vertices ordered by descending original degree, for the "absent
    # vertex" check: a vertex with d > 2^(level+1) must appear in every
    # subgraph at that level.
    heavy = sorted(
        (v for v in range(len(trace.root_degrees)) if trace.root_degrees[v] > 0),
        key=lambda v: -trace.root_degrees[v],
    )
    stats: list[LevelStats] = []
    for level in sorted(by_level):
        nodes = by_level[level]
        scale = 1 << level
        violations: list[str] = []
        total_weight = sum(node.weight for node in nodes)
        if total_weight * scale > root_weight + 2 * root_m * scale:
            violations.append(
                f"level {level}: weight sum {total_weight} exceeds "
                f"{root_weight}/{scale} + 2m"
            )
        for idx, node in enumerate(nodes):
            if (node.max_degree + 2) * scale < root_delta or (
                node.max_degree - 2
            ) * scale > root_delta:
                violations.append(
                    f"level {level} subgraph {idx}: max degree {node.max_degree} "
                    f"outside {root_delta}/{scale} +- 2"
                )
            for v, dh in node.degrees.items():
                dg = trace.root_degrees[v]
                if (dh + 2) * scale < dg or (dh - 2) * scale > dg:
                    violations.append(
                        f"level {level} subgraph {idx}: vertex {v} degree {dh} "
                        f"outside {dg}/{scale} +- 2"
                    )
            for v in heavy:
                if trace.root_degrees[v] <= 2 * scale:
                    break
                if v not in node.degrees:
                    violations.append(
                        f"level {level} subgraph {idx}: vertex {v} with original "
                        f"degree {trace.root_degrees[v]} is absent"
                    )
        stats.append(
            LevelStats(
                level=level,
                subgraphs=[(n.max_degree, n.weight, n.m) for n in nodes],
                total_weight=total_weight,
                delta_ref=root_delta / scale,
                weight_ref=root_weight / scale,
                violations=violations,
            )
        )
    return stats
