"""Complete r-partite r-uniform hypergraphs with total edge colorings.

Core data model: shapes, vertex addressing, dense edge colorings,
monochromatic component decomposition, component vectors, Hamming
distance, and the spanning-coloring test.  Parts and colors are 1-based;
global vertex indices and edge indices are 0-based array positions.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Edge counts must stay representable as unsigned 64-bit, matching the
# dense on-disk color array.
MAX_EDGE_COUNT = 2**64 - 1


@dataclass(frozen=True)
class VertexId:
    """Vertex address: part in 1..r, index in 1..n_part."""

    part: int
    index: int


@dataclass(frozen=True)
class Shape:
    """Frame of a complete r-partite r-uniform hypergraph with k colors.

    Edges are all transversal r-tuples, enumerated lexicographically by
    within-part index with the last part's index varying fastest.  The
    edge index doubles as the position in the dense color array and in
    the on-disk format.
    """

    r: int
    k: int
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(int(n) for n in self.part_sizes))
        if self.r < 2:
            raise ValueError(f"need r >= 2, got r={self.r}")
        if self.k < 1:
            raise ValueError(f"need k >= 1, got k={self.k}")
        if len(self.part_sizes) != self.r:
            raise ValueError(
                f"expected {self.r} part sizes, got {len(self.part_sizes)}"
            )
        if any(n < 1 for n in self.part_sizes):
            raise ValueError(f"part sizes must be positive, got {self.part_sizes}")
        if math.prod(self.part_sizes) > MAX_EDGE_COUNT:
            raise OverflowError("edge count does not fit in 64 bits")

    @cached_property
    def edge_count(self) -> int:
        return math.prod(self.part_sizes)

    @cached_property
    def total_vertices(self) -> int:
        return sum(self.part_sizes)

    @cached_property
    def part_offsets(self) -> tuple[int, ...]:
        """0-based global index of the first vertex of each part."""
        offs = [0]
        for n in self.part_sizes[:-1]:
            offs.append(offs[-1] + n)
        return tuple(offs)

    def global_index(self, v: VertexId) -> int:
        """Map (part, index) to the 0-based global vertex index."""
        if not (1 <= v.part <= self.r):
            raise ValueError(f"part {v.part} out of range 1..{self.r}")
        if not (1 <= v.index <= self.part_sizes[v.part - 1]):
            raise ValueError(
                f"index {v.index} out of range 1..{self.part_sizes[v.part - 1]} "
                f"in part {v.part}"
            )
        return self.part_offsets[v.part - 1] + v.index - 1

    def vertex_id(self, g: int) -> VertexId:
        """Map a 0-based global vertex index back to (part, index)."""
        if not (0 <= g < self.total_vertices):
            raise ValueError(f"global index {g} out of range 0..{self.total_vertices - 1}")
        for p in range(self.r - 1, -1, -1):
            if g >= self.part_offsets[p]:
                return VertexId(p + 1, g - self.part_offsets[p] + 1)
        raise AssertionError("unreachable")

    def part_of_global(self, g: int) -> int:
        """1-based part containing global vertex g."""
        return self.vertex_id(g).part

    def edge_index(self, tup: tuple[int, ...]) -> int:
        """Edge index of a transversal tuple of 0-based within-part indices."""
        if len(tup) != self.r:
            raise ValueError(f"expected {self.r} indices, got {len(tup)}")
        e = 0
        for i, n in zip(tup, self.part_sizes):
            if not (0 <= i < n):
                raise ValueError(f"within-part index {i} out of range 0..{n - 1}")
            e = e * n + i
        return e

    def edge_tuple(self, e: int) -> tuple[int, ...]:
        """Transversal tuple (0-based within-part indices) of edge e."""
        if not (0 <= e < self.edge_count):
            raise ValueError(f"edge index {e} out of range")
        out = []
        for n in reversed(self.part_sizes):
            out.append(e % n)
            e //= n
        return tuple(reversed(out))

    @cached_property
    def edge_vertices(self) -> tuple[tuple[int, ...], ...]:
        """Per edge, the r global vertex indices, in edge-index order."""
        offs = self.part_offsets
        out = []
        for e in range(self.edge_count):
            tup = self.edge_tuple(e)
            out.append(tuple(offs[p] + i for p, i in enumerate(tup)))
        return tuple(out)

    @cached_property
    def incident_edges(self) -> tuple[np.ndarray, ...]:
        """Per global vertex, the indices of edges containing it."""
        lists: list[list[int]] = [[] for _ in range(self.total_vertices)]
        for e, vs in enumerate(self.edge_vertices):
            for g in vs:
                lists[g].append(e)
        return tuple(np.asarray(a, dtype=np.int64) for a in lists)

    def degree(self, part: int) -> int:
        """Number of edges containing any one vertex of the given 1-based part."""
        return self.edge_count // self.part_sizes[part - 1]


def make_shape(r: int, k: int, part_sizes) -> Shape:
    """Validated Shape constructor; see Shape for the conventions."""
    return Shape(int(r), int(k), tuple(part_sizes))


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Total assignment of a color in 1..k to every transversal edge."""

    shape: Shape
    colors: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.colors, dtype=np.int32)
        if arr.ndim != 1 or arr.shape[0] != self.shape.edge_count:
            raise ValueError(
                f"expected {self.shape.edge_count} colors, got shape {arr.shape}"
            )
        if arr.size and (arr.min() < 1 or arr.max() > self.shape.k):
            raise ValueError(f"colors must lie in 1..{self.shape.k}")
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)

    def color_of(self, tup: tuple[int, ...]) -> int:
        """Color of the edge given by 0-based within-part indices."""
        return int(self.colors[self.shape.edge_index(tup)])


@dataclass(frozen=True, eq=False)
class ComponentTable:
    """Per color, the partition of vertices into monochromatic components.

    rows[c-1][g] is the 1-based component id of global vertex g in color c;
    ids are contiguous 1..counts[c-1], numbered in increasing order of the
    component's minimum global vertex index.
    """

    shape: Shape
    rows: np.ndarray          # (k, total_vertices) int32, entries 1-based
    counts: tuple[int, ...]   # components per color

    def members(self, color: int, component: int) -> list[int]:
        """Global vertex indices of one component, ascending."""
        if not (1 <= color <= self.shape.k):
            raise ValueError(f"color {color} out of range 1..{self.shape.k}")
        if not (1 <= component <= self.counts[color - 1]):
            raise ValueError(
                f"component {component} out of range 1..{self.counts[color - 1]} "
                f"for color {color}"
            )
        return [int(g) for g in np.flatnonzero(self.rows[color - 1] == component)]


# Component vectors are plain tuples: entry i-1 is the component id in color i.
ComponentVector = tuple[int, ...]


def _uf_find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def decompose(coloring: EdgeColoring) -> ComponentTable:
    """Monochromatic component decomposition of a coloring.

    Union-find over global vertex ids, one pass over the edge list; a
    color with zero edges yields singleton components for every vertex.
    """
    shape = coloring.shape
    n = shape.total_vertices
    k = shape.k
    parents = [list(range(n)) for _ in range(k)]
    cols = coloring.colors.tolist()
    ev = shape.edge_vertices
    for e in range(shape.edge_count):
        parent = parents[cols[e] - 1]
        root = _uf_find(parent, ev[e][0])
        for g in ev[e][1:]:
            r2 = _uf_find(parent, g)
            if r2 != root:
                parent[r2] = root
    rows = np.zeros((k, n), dtype=np.int32)
    counts = []
    for c in range(k):
        parent = parents[c]
        ids: dict[int, int] = {}
        row = rows[c]
        for g in range(n):
            root = _uf_find(parent, g)
            cid = ids.get(root)
            if cid is None:
                cid = len(ids) + 1
                ids[root] = cid
            row[g] = cid
        counts.append(len(ids))
    rows.setflags(write=False)
    return ComponentTable(shape, rows, tuple(counts))


def vector_of(table: ComponentTable, v: VertexId) -> ComponentVector:
    """Component vector of a vertex: its component id in every color."""
    g = table.shape.global_index(v)
    return tuple(int(x) for x in table.rows[:, g])


def hamming(u_vec: ComponentVector, v_vec: ComponentVector) -> int:
    """Number of coordinates where two component vectors differ."""
    if len(u_vec) != len(v_vec):
        raise ValueError(f"length mismatch: {len(u_vec)} vs {len(v_vec)}")
    return sum(a != b for a, b in zip(u_vec, v_vec))


def is_spanning(coloring: EdgeColoring) -> tuple[bool, tuple[VertexId, int] | None]:
    """Does every vertex see every color?

    Returns (True, None), or (False, (vertex, missing_color)) with the
    first failure in global-vertex then color order.
    """
    shape = coloring.shape
    k = shape.k
    colors = coloring.colors
    for g in range(shape.total_vertices):
        seen = np.zeros(k + 1, dtype=bool)
        seen[colors[shape.incident_edges[g]]] = True
        missing = np.flatnonzero(~seen[1:])
        if missing.size:
            return False, (shape.vertex_id(g), int(missing[0]) + 1)
    return True, None


# ---------------------------------------------------------------------------
# Coloring file formats
# ---------------------------------------------------------------------------
# Text: line 1 = "r k n_1 ... n_r"; then edge_count colors in 1..k,
# whitespace-separated, in edge-index order (the writer puts them on one
# line).  JSON: {"r":..., "k":..., "parts":[...], "colors":[...]}.


def format_coloring_text(coloring: EdgeColoring) -> str:
    s = coloring.shape
    head = " ".join(str(x) for x in (s.r, s.k, *s.part_sizes))
    body = " ".join(str(int(c)) for c in coloring.colors)
    return f"{head}\n{body}\n"


def parse_coloring_text(text: str) -> EdgeColoring:
    lines = text.strip().splitlines()
    if not lines:
        raise ValueError("empty coloring file")
    head = lines[0].split()
    if len(head) < 3:
        raise ValueError("header must read: r k n_1 ... n_r")
    try:
        r, k = int(head[0]), int(head[1])
        sizes = [int(x) for x in head[2:]]
    except ValueError as exc:
        raise ValueError(f"bad header {head!r}") from exc
    if len(sizes) != r:
        raise ValueError(f"header lists {len(sizes)} part sizes, expected r={r}")
    shape = make_shape(r, k, sizes)
    toks = " ".join(lines[1:]).split()
    if len(toks) != shape.edge_count:
        raise ValueError(
            f"expected {shape.edge_count} colors, found {len(toks)}"
        )
    return EdgeColoring(shape, np.asarray([int(t) for t in toks], dtype=np.int32))


def format_coloring_json(coloring: EdgeColoring) -> str:
    s = coloring.shape
    return json.dumps(
        {
            "r": s.r,
            "k": s.k,
            "parts": list(s.part_sizes),
            "colors": [int(c) for c in coloring.colors],
        },
        sort_keys=True,
    )


def parse_coloring_json(text: str) -> EdgeColoring:
    obj = json.loads(text)
    for key in ("r", "k", "parts", "colors"):
        if key not in obj:
            raise ValueError(f"missing key {key!r} in coloring JSON")
    shape = make_shape(obj["r"], obj["k"], obj["parts"])
    colors = obj["colors"]
    if len(colors) != shape.edge_count:
        raise ValueError(f"expected {shape.edge_count} colors, found {len(colors)}")
    return EdgeColoring(shape, np.asarray(colors, dtype=np.int32))


def parse_coloring(text: str) -> EdgeColoring:
    """Parse either coloring format, sniffing JSON by a leading brace."""
    if text.lstrip().startswith("{"):
        return parse_coloring_json(text)
    return parse_coloring_text(text)
