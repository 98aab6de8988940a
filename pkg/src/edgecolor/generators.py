"""Seeded graph families for tests and benchmarks.

All generators are deterministic in their seed and return simple graphs.
The star / forest-union / star-plus-forests / grid families come with a
known arboricity bound, which the benchmark reports carry so the
weight-versus-density claims can be checked on generated inputs.  The
forest-based families sample forests by inserting uniformly random
candidate edges and rejecting cycles with a union-find; that gives no
particular distribution over forests, but the arboricity bound is what
matters here.  Duplicate candidates are rejected up to a retry cap, so
edge counts can fall slightly below their nominal targets.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from random import Random

from .graph import Graph, build_graph


class InfeasibleSpecError(ValueError):
    """The requested parameters cannot produce a valid graph."""


FAMILIES = (
    "star",
    "forest-union",
    "star-plus-forests",
    "erdos-renyi",
    "preferential-attachment",
    "grid",
)


@dataclass(frozen=True)
class GenSpec:
    """Serializable description of one generated graph.

    Only the fields relevant to ``family`` are read: ``n``/``alpha`` for
    the forest families (plus optional ``star_leaves`` / ``forest_edges``
    overrides for star-plus-forests), ``n``/``m`` for erdos-renyi,
    ``n``/``degree`` for preferential-attachment, ``rows``/``cols`` for
    grid.
    """

    family: str
    n: int | None = None
    m: int | None = None
    alpha: int | None = None
    degree: int | None = None
    rows: int | None = None
    cols: int | None = None
    star_leaves: int | None = None
    forest_edges: int | None = None
    seed: int = 0

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @staticmethod
    def from_dict(data: dict) -> GenSpec:
        known = {f for f in GenSpec.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise InfeasibleSpecError(f"unknown spec fields: {sorted(unknown)}")
        if "family" not in data:
            raise InfeasibleSpecError("spec needs a 'family' field")
        return GenSpec(**data)

    def known_arboricity(self) -> int | None:
        """Upper bound on arboricity guaranteed by construction, if any."""
        if self.family == "star":
            return 1
        if self.family in ("forest-union", "star-plus-forests"):
            return self.alpha
        if self.family == "grid":
            if self.rows == 1 or self.cols == 1:
                return 1
            return 2
        return None


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by ``spec``.

    Raises :class:`InfeasibleSpecError` for unknown families or
    out-of-range parameters.
    """
    family = spec.family
    if family == "star":
        _need(spec.n is not None and spec.n >= 1, "star needs n >= 1")
        return gen_star(spec.n)
    if family == "forest-union":
        _need(spec.n is not None and spec.n >= 1, "forest-union needs n >= 1")
        _need(spec.alpha is not None and spec.alpha >= 1, "forest-union needs alpha >= 1")
        return gen_forest_union(spec.n, spec.alpha, spec.seed)
    if family == "star-plus-forests":
        _need(spec.n is not None and spec.n >= 2, "star-plus-forests needs n >= 2")
        _need(spec.alpha is not None and spec.alpha >= 2, "star-plus-forests needs alpha >= 2")
        return gen_star_plus_forests(
            spec.n, spec.alpha, spec.seed, spec.star_leaves, spec.forest_edges
        )
    if family == "erdos-renyi":
        _need(spec.n is not None and spec.n >= 1, "erdos-renyi needs n >= 1")
        _need(spec.m is not None and spec.m >= 0, "erdos-renyi needs m >= 0")
        return gen_erdos_renyi(spec.n, spec.m, spec.seed)
    if family == "preferential-attachment":
        _need(spec.n is not None and spec.n >= 3, "preferential-attachment needs n >= 3")
        _need(spec.degree is not None and spec.degree >= 1, "attachment degree must be >= 1")
        return gen_preferential_attachment(spec.n, spec.degree, spec.seed)
    if family == "grid":
        _need(spec.rows is not None and spec.rows >= 1, "grid needs rows >= 1")
        _need(spec.cols is not None and spec.cols >= 1, "grid needs cols >= 1")
        return gen_grid(spec.rows, spec.cols)
    raise InfeasibleSpecError(f"unknown family {family!r}")


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise InfeasibleSpecError(message)


def gen_star(n: int) -> Graph:
    """Star: vertex 0 joined to every other vertex."""
    if n < 1:
        raise InfeasibleSpecError("star needs n >= 1")
    return build_graph([(0, i) for i in range(1, n)], n)


class _UnionFind:
    __slots__ = ("parent", "rank")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def _grow_forest(
    n: int,
    rng: Random,
    taken: set[tuple[int, int]],
    out: list[tuple[int, int]],
    target: int,
) -> int:
    """Insert up to ``target`` random forest edges, avoiding ``taken``.

    Candidates closing a cycle or duplicating an existing edge are
    rejected; after the attempt cap the forest is left short.  Returns
    the number of edges added.
    """
    if n < 2 or target <= 0:
        return 0
    target = min(target, n - 1)
    uf = _UnionFind(n)
    added = 0
    attempts_left = 30 * n + 200
    while added < target and attempts_left > 0:
        attempts_left -= 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in taken:
            continue
        if not uf.union(u, v):
            continue
        taken.add(key)
        out.append(key)
        added += 1
    return added


def gen_forest_union(n: int, alpha: int, seed: int) -> Graph:
    """Union of ``alpha`` random spanning forests; arboricity <= alpha."""
    if n < 1 or alpha < 1:
        raise InfeasibleSpecError("forest-union needs n >= 1 and alpha >= 1")
    rng = Random(seed)
    taken: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for _ in range(alpha):
        _grow_forest(n, rng, taken, edges, n - 1)
    return build_graph(edges, n)


def gen_star_plus_forests(
    n: int,
    alpha: int,
    seed: int,
    star_leaves: int | None = None,
    forest_edges: int | None = None,
) -> Graph:
    """A star overlaid with ``alpha - 1`` random forests.

    The default star spans all of ``1..n-1``; ``star_leaves`` shrinks it
    and ``forest_edges`` caps each forest, which together let benchmarks
    sweep the max degree while holding the edge count roughly fixed.
    Max degree is about the star size while the arboricity stays at most
    ``alpha``, so these graphs are dense in degree but sparse in weight.
    """
    if n < 2 or alpha < 2:
        raise InfeasibleSpecError("star-plus-forests needs n >= 2 and alpha >= 2")
    leaves = n - 1 if star_leaves is None else star_leaves
    if not (1 <= leaves <= n - 1):
        raise InfeasibleSpecError(f"star_leaves must be in 1..{n - 1}")
    per_forest = n - 1 if forest_edges is None else forest_edges
    if per_forest < 0:
        raise InfeasibleSpecError("forest_edges must be non-negative")
    rng = Random(seed)
    edges = [(0, i) for i in range(1, leaves + 1)]
    taken = set(edges)
    for _ in range(alpha - 1):
        _grow_forest(n, rng, taken, edges, per_forest)
    return build_graph(edges, n)


def gen_erdos_renyi(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with exactly ``m`` edges."""
    if n < 1 or m < 0:
        raise InfeasibleSpecError("erdos-renyi needs n >= 1 and m >= 0")
    limit = n * (n - 1) // 2
    if m > limit:
        raise InfeasibleSpecError(f"m={m} exceeds the {limit} possible edges on n={n}")
    rng = Random(seed)
    edges: list[tuple[int, int]] = []
    if m > limit // 2:
        # Dense request: shuffle the full pair list instead of rejection
        # sampling, which would stall near saturation.
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        edges = pairs[:m]
    else:
        chosen: set[tuple[int, int]] = set()
        while len(edges) < m:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in chosen:
                continue
            chosen.add(key)
            edges.append(key)
    return build_graph(edges, n)


def gen_preferential_attachment(n: int, degree: int, seed: int) -> Graph:
    """Degree-proportional attachment, simple, seeded by a triangle.

    Each vertex from 3 on attaches to ``min(degree, existing)`` distinct
    earlier vertices, chosen by sampling the endpoint multiset (degree
    bias) with duplicate-target rejection.
    """
    if n < 3:
        raise InfeasibleSpecError("preferential-attachment needs n >= 3")
    if degree < 1:
        raise InfeasibleSpecError("attachment degree must be >= 1")
    rng = Random(seed)
    edges: list[tuple[int, int]] = [(0, 1), (0, 2), (1, 2)]
    endpoint_pool = [0, 1, 0, 2, 1, 2]
    for v in range(3, n):
        want = min(degree, v)
        targets: set[int] = set()
        attempts_left = 50 * want + 50
        while len(targets) < want and attempts_left > 0:
            attempts_left -= 1
            targets.add(endpoint_pool[rng.randrange(len(endpoint_pool))])
        while len(targets) < want:
            # Degenerate fallback: fill from the lowest ids not yet used.
            for u in range(v):
                if u not in targets:
                    targets.add(u)
                    break
        for u in sorted(targets):
            edges.append((u, v))
            endpoint_pool.append(u)
            endpoint_pool.append(v)
    return build_graph(edges, n)


def gen_grid(rows: int, cols: int) -> Graph:
    """Axis-aligned grid; vertex (r, c) is ``r * cols + c``."""
    if rows < 1 or cols < 1:
        raise InfeasibleSpecError("grid needs rows >= 1 and cols >= 1")
    edges: list[tuple[int, int]] = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(edges, rows * cols)
