"""Brute-force oracles for cross-checking the fast implementations.

Everything here recomputes from first principles: maximal alternating
paths are found by scanning two-color subgraphs rather than walking the
incremental occupied maps, and the exhaustive suite replays the whole
fan / path / extend pipeline over every small graph.  The only shared
code with the fast paths is read access to ``Graph`` and
``PartialColoring``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .coloring import UNCOLORED, PartialColoring, verify_proper
from .fanpath import AlternatingPath, extend_coloring, make_primed_fan, maximal_alternating_path
from .graph import Graph, build_graph, edge_weight


@dataclass
class OracleReport:
    """Outcome of an oracle sweep: what was checked, and what failed."""

    name: str
    instances: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def enumerate_maximal_paths(g: Graph, chi: PartialColoring) -> list[AlternatingPath]:
    """All maximal alternating paths of a coloring, by exhaustive scan.

    For every unordered color pair the edges carrying those two colors
    form disjoint paths and cycles (properness caps each color at one
    edge per vertex).  Path components of length >= 1 are the maximal
    alternating paths; cycles are excluded.  Each path is reported once,
    oriented from its lower-id endpoint.
    """
    paths: list[AlternatingPath] = []
    colors = chi.color
    for c0 in range(1, chi.k + 1):
        for c1 in range(c0 + 1, chi.k + 1):
            adj: dict[int, list[tuple[int, int]]] = {}
            for e in range(g.m):
                if colors[e] == c0 or colors[e] == c1:
                    u, v = g.endpoints[e]
                    adj.setdefault(u, []).append((v, e))
                    adj.setdefault(v, []).append((u, e))
            terminals = sorted(v for v, inc in adj.items() if len(inc) == 1)
            used: set[int] = set()
            for start in terminals:
                first = adj[start][0]
                if first[1] in used:
                    continue
                vertices = [start]
                edge_ids: list[int] = []
                cur, e = start, first[1]
                nxt = first[0]
                while True:
                    used.add(e)
                    vertices.append(nxt)
                    edge_ids.append(e)
                    options = [(w, f) for w, f in adj[nxt] if f != e]
                    if not options:
                        break
                    (nxt, e), cur = options[0], nxt
                paths.append(AlternatingPath(vertices, edge_ids, c0, c1))
    return paths


def check_edge_membership_bounds(g: Graph, chi: PartialColoring) -> OracleReport:
    """Check the two path-counting bounds on one coloring.

    Every colored edge may be internal to at most ``edge_weight`` maximal
    paths, and the total internal count over all maximal paths is at most
    the total weight of colored edges.
    """
    report = OracleReport("edge-internal-membership-bounds", instances=1)
    counts: dict[int, int] = {}
    total_internal = 0
    for path in enumerate_maximal_paths(g, chi):
        internal = path.edge_ids[1:-1]
        total_internal += len(internal)
        for e in internal:
            counts[e] = counts.get(e, 0) + 1
    for e, c in sorted(counts.items()):
        w = edge_weight(g, e)
        if c > w:
            report.violations.append(
                f"edge {e} internal to {c} maximal paths but has weight {w}"
            )
    colored_weight = sum(
        edge_weight(g, e) for e in range(g.m) if chi.color[e] != UNCOLORED
    )
    if total_internal > colored_weight:
        report.violations.append(
            f"total internal count {total_internal} exceeds colored weight {colored_weight}"
        )
    return report


def sample_partial_coloring(g: Graph, k: int, rng: Random) -> PartialColoring:
    """A random proper partial coloring, by greedy feasible assignment.

    Visits edges in random order up to a random target count and gives
    each a random mutually missing color, skipping edges with none.
    """
    chi = PartialColoring(g, k)
    order = list(range(g.m))
    rng.shuffle(order)
    target = rng.randrange(g.m + 1)
    for e in order[:target]:
        u, v = g.endpoints[e]
        occ_u, occ_v = chi.occupied[u], chi.occupied[v]
        feasible = [c for c in range(1, k + 1) if c not in occ_u and c not in occ_v]
        if feasible:
            chi.assign(e, feasible[rng.randrange(len(feasible))])
    return chi


def _all_graphs_up_to(n_max: int, m_max: int | None):
    """Yield every labeled simple graph on ``n_max`` vertices as a Graph.

    Graphs are edge subsets of the complete graph; isomorphic duplicates
    are deliberately kept, trading time for certainty.
    """
    pairs = [(u, v) for u in range(n_max) for v in range(u + 1, n_max)]
    total = len(pairs)
    for mask in range(1 << total):
        if m_max is not None and mask.bit_count() > m_max:
            continue
        edges = [pairs[i] for i in range(total) if mask >> i & 1]
        yield mask, build_graph(edges, n_max)


def exhaustive_extend_suite(
    n_max: int = 6,
    m_max: int | None = None,
    colorings_per_graph: int = 2,
    seed: int = 0,
) -> OracleReport:
    """Replay the single-edge pipeline over every graph on <= n_max vertices.

    For each edge subset of the complete graph, a few sampled proper
    partial colorings, every uncolored edge, and both endpoint choices:
    run fan / path / extend on a fresh copy and verify the result is
    proper with exactly one more colored edge and no colored edge lost.
    The report counts pipelines executed; violations identify the graph
    by its edge-subset mask so failures are reproducible.
    """
    report = OracleReport(f"exhaustive-extend-n{n_max}")
    for mask, g in _all_graphs_up_to(n_max, m_max):
        if g.m == 0:
            continue
        rng = Random((seed << 20) ^ mask)
        k = g.max_degree + 1
        for round_no in range(colorings_per_graph):
            base = sample_partial_coloring(g, k, rng)
            for e in list(base.uncolored):
                for center in g.endpoints[e]:
                    chi = base.copy()
                    before = chi.uncolored_count
                    was_colored = [i for i in range(g.m) if chi.color[i] != UNCOLORED]
                    c0 = chi.random_missing_color(center, rng)
                    fan = make_primed_fan(g, chi, e, center)
                    c1 = fan.primed_color
                    if c0 != c1:
                        path = maximal_alternating_path(g, chi, center, c0, c1)
                    else:
                        path = AlternatingPath([center], [], c0, c1)
                    extend_coloring(g, chi, fan, path)
                    report.instances += 1
                    tag = f"mask={mask} round={round_no} edge={e} center={center}"
                    if chi.uncolored_count != before - 1:
                        report.violations.append(f"{tag}: did not color exactly one edge")
                    if chi.color[e] == UNCOLORED:
                        report.violations.append(f"{tag}: target edge left uncolored")
                    if any(chi.color[i] == UNCOLORED for i in was_colored):
                        report.violations.append(f"{tag}: a colored edge was lost")
                    result = verify_proper(g, chi)
                    if not result.proper:
                        report.violations.append(f"{tag}: improper result {result.violations[:2]}")
                    if len(report.violations) > 50:
                        return report
    return report


def check_fan(g: Graph, chi: PartialColoring, fan) -> list[str]:
    """Independent validation of every fan invariant; empty means valid."""
    problems: list[str] = []
    v = fan.center
    leaves = fan.leaves
    if len(set(leaves)) != len(leaves):
        problems.append("leaves are not distinct")
    neighbor_edges = dict()
    for w, e in g.adjacency[v]:
        neighbor_edges[w] = e
    for i, x in enumerate(leaves):
        if x not in neighbor_edges:
            problems.append(f"leaf {x} is not a neighbor of the center")
        elif neighbor_edges[x] != fan.edge_ids[i]:
            problems.append(f"edge id for leaf {x} does not join it to the center")
    if chi.color[fan.edge_ids[0]] != UNCOLORED:
        problems.append("first fan edge is colored")
    for i in range(1, len(leaves)):
        c = chi.color[fan.edge_ids[i]]
        if c == UNCOLORED:
            problems.append(f"fan edge {i} is uncolored")
            continue
        if fan.leaf_colors[i - 1] != c:
            problems.append(f"recorded color of fan edge {i} is stale")
        if not chi.is_missing(leaves[i - 1], c):
            problems.append(f"color {c} of fan edge {i} is present at leaf {i - 1}")
    c1 = fan.primed_color
    if not chi.is_missing(leaves[-1], c1):
        problems.append("primed color is present at the last leaf")
    if fan.primed_case == "center":
        if not chi.is_missing(v, c1):
            problems.append("primed-at-center but color present at center")
    elif fan.primed_case == "leaf":
        j = fan.primed_index
        if j is None or not (0 <= j < len(leaves) - 1):
            problems.append("primed leaf index out of range")
        else:
            if not chi.is_missing(leaves[j], c1):
                problems.append(f"primed color is present at leaf {j}")
            if fan.leaf_colors[j] != c1:
                problems.append("primed color does not match the fan edge after its leaf")
    else:
        problems.append(f"unknown primed case {fan.primed_case!r}")
    return problems
