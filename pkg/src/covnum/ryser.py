"""General r-partite hypergraphs and the component-cover correspondence.

Exact vertex-cover and matching solvers (test-scale, guarded), the
intersecting test, and the two constructions translating between
intersecting r-partite hypergraphs and r-colored complete graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cover import CoverInstance
from .errors import GuardExceeded

DEFAULT_MAX_EDGES = 20
DEFAULT_MAX_VERTICES = 24


@dataclass(frozen=True, eq=False)
class GeneralHypergraph:
    """r-uniform hypergraph on vertices 0..num_vertices-1.

    partition, when present, lists r disjoint vertex classes covering all
    vertices; every edge must then be a transversal (one vertex per class).
    """

    num_vertices: int
    r: int
    edges: tuple[frozenset[int], ...]
    partition: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("negative vertex count")
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) != self.r:
                raise ValueError(f"edge {sorted(e)} has {len(e)} vertices, expected r={self.r}")
            if any(not (0 <= v < self.num_vertices) for v in e):
                raise ValueError(f"edge {sorted(e)} has out-of-range vertices")
        if self.partition is not None:
            part = tuple(tuple(int(v) for v in cls) for cls in self.partition)
            object.__setattr__(self, "partition", part)
            if len(part) != self.r:
                raise ValueError(f"partition has {len(part)} classes, expected r={self.r}")
            seen: set[int] = set()
            for cls in part:
                if seen & set(cls):
                    raise ValueError("partition classes overlap")
                seen |= set(cls)
            if seen != set(range(self.num_vertices)):
                raise ValueError("partition does not cover the vertex set")
            for e in edges:
                for cls in part:
                    if len(e & set(cls)) != 1:
                        raise ValueError(f"edge {sorted(e)} is not a transversal")

    @cached_property
    def part_of(self) -> tuple[int, ...] | None:
        """1-based class of every vertex, or None when unpartitioned."""
        if self.partition is None:
            return None
        out = [0] * self.num_vertices
        for p, cls in enumerate(self.partition, start=1):
            for v in cls:
                out[v] = p
        return tuple(out)

    def edge_part_vertex(self, e: int, part: int) -> int:
        """The unique vertex of edge e in the given 1-based class."""
        if self.part_of is None:
            raise ValueError("hypergraph is not partitioned")
        for v in self.edges[e]:
            if self.part_of[v] == part:
                return v
        raise ValueError(f"edge {e} misses class {part}")


def _check_guards(h: GeneralHypergraph, max_edges: int, max_vertices: int) -> None:
    if len(h.edges) > max_edges or h.num_vertices > max_vertices:
        raise GuardExceeded(
            f"instance with {len(h.edges)} edges / {h.num_vertices} vertices "
            f"exceeds the exact-search guard ({max_edges} edges / {max_vertices} vertices)"
        )


def max_matching(
    h: GeneralHypergraph,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[int, tuple[int, ...]]:
    """Maximum number of pairwise disjoint edges, with a witness matching.

    Exact branch and bound over edge indices; guarded by instance size.
    """
    _check_guards(h, max_edges, max_vertices)
    masks = [_vertex_mask(e) for e in h.edges]
    n_edges = len(masks)
    best_size = 0
    best: tuple[int, ...] = ()
    chosen: list[int] = []

    def dfs(i: int, used: int) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
        if i == n_edges or len(chosen) + (n_edges - i) <= best_size:
            return
        if not masks[i] & used:
            chosen.append(i)
            dfs(i + 1, used | masks[i])
            chosen.pop()
        dfs(i + 1, used)

    dfs(0, 0)
    return best_size, best


def min_vertex_cover(
    h: GeneralHypergraph,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[int, tuple[int, ...]]:
    """Minimum vertex set meeting every edge, with a witness cover.

    Exact: branches on the vertices of the first uncovered edge; prunes
    with a greedy-disjoint-edges lower bound.  Guarded by instance size.
    """
    _check_guards(h, max_edges, max_vertices)
    edge_masks = [_vertex_mask(e) for e in h.edges]
    edge_lists = [tuple(sorted(e)) for e in h.edges]
    best_size = h.num_vertices + 1
    best: tuple[int, ...] = ()
    chosen: list[int] = []

    def matching_bound(cover_mask: int) -> int:
        used = 0
        count = 0
        for m in edge_masks:
            if not m & cover_mask and not m & used:
                used |= m
                count += 1
        return count

    def dfs(cover_mask: int) -> None:
        nonlocal best_size, best
        open_edge = -1
        for i, m in enumerate(edge_masks):
            if not m & cover_mask:
                open_edge = i
                break
        if open_edge < 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best = tuple(sorted(chosen))
            return
        if len(chosen) + matching_bound(cover_mask) >= best_size:
            return
        for v in edge_lists[open_edge]:
            chosen.append(v)
            dfs(cover_mask | (1 << v))
            chosen.pop()

    dfs(0)
    return best_size, best


def is_intersecting(h: GeneralHypergraph) -> tuple[bool, tuple[int, int] | None]:
    """Does every pair of edges share a vertex?

    Returns (True, None) or (False, (i, j)) for the first disjoint pair of
    edge indices.
    """
    masks = [_vertex_mask(e) for e in h.edges]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not masks[i] & masks[j]:
                return False, (i, j)
    return True, None


def _vertex_mask(edge: frozenset[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class ColoredCompleteGraph:
    """Complete graph on n vertices with every pair colored in 1..r.

    colors holds the n*(n-1)/2 pair colors in lexicographic (i, j) order,
    i < j, 0-based vertices.
    """

    n: int
    r: int
    colors: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.r < 1:
            raise ValueError("need at least one color")
        arr = np.ascontiguousarray(self.colors, dtype=np.int32)
        want = self.n * (self.n - 1) // 2
        if arr.ndim != 1 or arr.shape[0] != want:
            raise ValueError(f"expected {want} pair colors, got shape {arr.shape}")
        if arr.size and (arr.min() < 1 or arr.max() > self.r):
            raise ValueError(f"colors must lie in 1..{self.r}")
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)

    def pair_index(self, i: int, j: int) -> int:
        if i == j or not (0 <= i < self.n) or not (0 <= j < self.n):
            raise ValueError(f"bad pair ({i}, {j})")
        if i > j:
            i, j = j, i
        return i * self.n - i * (i + 1) // 2 + (j - i - 1)

    def color(self, i: int, j: int) -> int:
        return int(self.colors[self.pair_index(i, j)])


@dataclass(frozen=True, eq=False)
class GraphComponents:
    """Per color, the partition of graph vertices into components.

    Same conventions as ComponentTable: rows[c-1][v] is a 1-based id,
    contiguous per color, numbered by minimum member vertex.
    """

    n: int
    r: int
    rows: np.ndarray
    counts: tuple[int, ...]

    def component_of(self, color: int, v: int) -> int:
        return int(self.rows[color - 1][v])


def graph_components(g: ColoredCompleteGraph) -> GraphComponents:
    """Connected components of every color class of the complete graph."""
    n, r = g.n, g.r
    parents = [list(range(n)) for _ in range(r)]
    idx = 0
    cols = g.colors.tolist()
    for i in range(n):
        for j in range(i + 1, n):
            parent = parents[cols[idx] - 1]
            idx += 1
            ri = _find(parent, i)
            rj = _find(parent, j)
            if ri != rj:
                parent[rj] = ri
    rows = np.zeros((r, n), dtype=np.int32)
    counts = []
    for c in range(r):
        parent = parents[c]
        ids: dict[int, int] = {}
        for v in range(n):
            root = _find(parent, v)
            cid = ids.get(root)
            if cid is None:
                cid = len(ids) + 1
                ids[root] = cid
            rows[c][v] = cid
        counts.append(len(ids))
    rows.setflags(write=False)
    return GraphComponents(n, r, rows, tuple(counts))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def graph_cover_instance(comps: GraphComponents) -> CoverInstance:
    """Set-cover instance whose candidates are the graph's monochromatic components."""
    return CoverInstance.from_rows(comps.rows, comps.counts)


def to_colored_graph(h: GeneralHypergraph) -> ColoredCompleteGraph:
    """Edge-intersection coloring of an intersecting partitioned hypergraph.

    Vertices are the edges of h; the pair (u, v) takes the smallest class
    index in which edges u and v share a vertex.  Totality requires h to
    be intersecting.
    """
    if h.partition is None:
        raise ValueError("hypergraph must be partitioned")
    ok, pair = is_intersecting(h)
    if not ok:
        raise ValueError(f"hypergraph is not intersecting: edges {pair[0]} and {pair[1]} are disjoint")
    n = len(h.edges)
    per_part = [
        [h.edge_part_vertex(e, p) for p in range(1, h.r + 1)] for e in range(n)
    ]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            color = 0
            for p in range(h.r):
                if per_part[i][p] == per_part[j][p]:
                    color = p + 1
                    break
            if color == 0:
                raise AssertionError("intersecting edges share no class")
            out.append(color)
    return ColoredCompleteGraph(n, h.r, np.asarray(out, dtype=np.int32))


def to_partite_hypergraph(g: ColoredCompleteGraph) -> GeneralHypergraph:
    """Component hypergraph of an r-colored complete graph.

    Hypergraph vertices are the monochromatic components of g (class p =
    the components of color p, in canonical order); each graph vertex v
    contributes the r-tuple of components containing it.  Duplicate
    tuples collapse to one edge.  The result is always intersecting.
    """
    comps = graph_components(g)
    offsets = [0]
    for c in comps.counts[:-1]:
        offsets.append(offsets[-1] + c)
    total = sum(comps.counts)
    partition = tuple(
        tuple(range(offsets[p], offsets[p] + comps.counts[p])) for p in range(g.r)
    )
    edges: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for v in range(g.n):
        e = frozenset(
            offsets[p] + comps.component_of(p + 1, v) - 1 for p in range(g.r)
        )
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return GeneralHypergraph(total, g.r, tuple(edges), partition)


def cover_to_vertex_cover(
    h: GeneralHypergraph, comps: GraphComponents, members
) -> tuple[int, ...]:
    """Translate a component cover of to_colored_graph(h) into vertices of h.

    Each (color i, component j) contributes the class-i vertex shared by
    all member edges of that component.
    """
    out: set[int] = set()
    for color, comp in members:
        graph_vertices = np.flatnonzero(comps.rows[color - 1] == comp)
        if graph_vertices.size == 0:
            raise ValueError(f"no such component: color {color}, id {comp}")
        host = h.edge_part_vertex(int(graph_vertices[0]), color)
        out.add(host)
    return tuple(sorted(out))


def is_vertex_cover(h: GeneralHypergraph, vertices) -> bool:
    vs = set(vertices)
    return all(vs & e for e in h.edges)


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------
# Hypergraph: line 1 = "vertex_count edge_count r [partitioned]"; when the
# flag is present, line 2 lists the r class sizes (classes are the vertex
# ranges 0..s1-1, s1..s1+s2-1, ...); then one edge per line, r vertex ids.
# Colored graph: line 1 = "n r"; line 2 = n(n-1)/2 colors in lexicographic
# pair order.


def format_hypergraph_text(h: GeneralHypergraph) -> str:
    lines = []
    if h.partition is not None:
        sizes = [len(cls) for cls in h.partition]
        expect = 0
        for cls, size in zip(h.partition, sizes):
            if tuple(cls) != tuple(range(expect, expect + size)):
                raise ValueError(
                    "only contiguous-block partitions are serializable; relabel first"
                )
            expect += size
        lines.append(f"{h.num_vertices} {len(h.edges)} {h.r} partitioned")
        lines.append(" ".join(str(s) for s in sizes))
    else:
        lines.append(f"{h.num_vertices} {len(h.edges)} {h.r}")
    for e in h.edges:
        lines.append(" ".join(str(v) for v in sorted(e)))
    return "\n".join(lines) + "\n"


def parse_hypergraph_text(text: str) -> GeneralHypergraph:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty hypergraph file")
    head = lines[0].split()
    if len(head) not in (3, 4):
        raise ValueError("header must read: vertex_count edge_count r [partitioned]")
    n, m, r = int(head[0]), int(head[1]), int(head[2])
    partitioned = len(head) == 4
    if partitioned and head[3] != "partitioned":
        raise ValueError(f"unexpected header flag {head[3]!r}")
    at = 1
    partition = None
    if partitioned:
        sizes = [int(x) for x in lines[at].split()]
        at += 1
        if len(sizes) != r or sum(sizes) != n:
            raise ValueError("partition sizes do not match header")
        offs = 0
        partition = []
        for s in sizes:
            partition.append(tuple(range(offs, offs + s)))
            offs += s
        partition = tuple(partition)
    edge_lines = lines[at:]
    if len(edge_lines) != m:
        raise ValueError(f"expected {m} edge lines, found {len(edge_lines)}")
    edges = tuple(frozenset(int(x) for x in ln.split()) for ln in edge_lines)
    return GeneralHypergraph(n, r, edges, partition)


def format_graph_text(g: ColoredCompleteGraph) -> str:
    head = f"{g.n} {g.r}"
    body = " ".join(str(int(c)) for c in g.colors)
    return f"{head}\n{body}\n"


def parse_graph_text(text: str) -> ColoredCompleteGraph:
    lines = text.strip().splitlines()
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must read: n r")
    n, r = int(head[0]), int(head[1])
    toks = " ".join(lines[1:]).split()
    want = n * (n - 1) // 2
    if len(toks) != want:
        raise ValueError(f"expected {want} pair colors, found {len(toks)}")
    return ColoredCompleteGraph(n, r, np.asarray([int(t) for t in toks], dtype=np.int32))
