"""Biclique-specific structure checks and the constructive 3-cover.

For 2-partite colorings: the per-color test that every monochromatic
component spans a complete bipartite graph in its color, and a
constructive cover of size at most 3 for spanning 3-colorings that
follows the structural case analysis (delegating to the exact solver
when every color class is a disjoint union of bicliques).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cover import CoverInstance, CoverMember, min_cover_exact, validate_cover
from .hypercore import (
    ComponentTable,
    EdgeColoring,
    Shape,
    VertexId,
    decompose,
    is_spanning,
)


@dataclass(frozen=True)
class BicliqueClassCheck:
    """Whether one color class is a disjoint union of bicliques.

    On failure, witness is (component_id, u, v): a cross pair inside one
    component of this color whose edge has a different color.
    """

    color: int
    holds: bool
    witness: tuple[int, VertexId, VertexId] | None = None


def _require_biclique(shape: Shape) -> None:
    if shape.r != 2:
        raise ValueError(f"needs a 2-partite coloring, got r={shape.r}")


def _pair_color(coloring: EdgeColoring, gx: int, gy: int) -> int:
    """Color of the edge between global vertices gx (part 1), gy (part 2)."""
    n1, n2 = coloring.shape.part_sizes
    return int(coloring.colors[gx * n2 + (gy - n1)])


def is_union_of_bicliques(
    coloring: EdgeColoring, table: ComponentTable | None = None
) -> tuple[BicliqueClassCheck, ...]:
    """Per color: does every component span a complete bipartite graph
    of that color between its two sides?"""
    _require_biclique(coloring.shape)
    if table is None:
        table = decompose(coloring)
    shape = coloring.shape
    n1 = shape.part_sizes[0]
    out = []
    for c in range(1, shape.k + 1):
        row = table.rows[c - 1]
        verdict = BicliqueClassCheck(c, True)
        for comp in range(1, table.counts[c - 1] + 1):
            members = [int(g) for g in np.flatnonzero(row == comp)]
            xs = [g for g in members if g < n1]
            ys = [g for g in members if g >= n1]
            found = None
            for gx in xs:
                for gy in ys:
                    if _pair_color(coloring, gx, gy) != c:
                        found = (comp, shape.vertex_id(gx), shape.vertex_id(gy))
                        break
                if found:
                    break
            if found:
                verdict = BicliqueClassCheck(c, False, found)
                break
        out.append(verdict)
    return tuple(out)


class _Ctx:
    """Shared lookups for the constructive cover of one coloring."""

    def __init__(self, coloring: EdgeColoring, table: ComponentTable):
        self.coloring = coloring
        self.table = table
        self.shape = coloring.shape
        self.n1 = self.shape.part_sizes[0]
        self.instance = CoverInstance.from_component_table(table)

    def col(self, g1: int, g2: int) -> int:
        """Pair color for globals in either argument order."""
        if g1 < self.n1:
            return _pair_color(self.coloring, g1, g2)
        return _pair_color(self.coloring, g2, g1)

    def comp(self, color: int, g: int) -> int:
        return int(self.table.rows[color - 1][g])

    def finish(self, members: set[CoverMember]) -> tuple[CoverMember, ...]:
        ok, missing = validate_cover(self.instance, members)
        if not ok:
            raise RuntimeError(
                f"constructed cover {sorted(members)} misses vertex {missing}; "
                "this is a bug in the case analysis"
            )
        if len(members) > 3:
            raise RuntimeError(f"constructed cover {sorted(members)} exceeds 3")
        return tuple(sorted(members))


def cover_biclique_k3(
    coloring: EdgeColoring, table: ComponentTable | None = None
) -> tuple[CoverMember, ...]:
    """Cover a spanning 3-colored biclique with at most 3 monochromatic
    components, constructively.

    When every color class is a disjoint union of bicliques, the exact
    solver supplies the cover.  Otherwise some component of a color a
    contains a cross pair (u, v) whose edge has another color b; the
    third color's neighborhoods of u and v span a 2-colored sub-biclique
    whose (at most 2) covering components drive a case analysis, each
    branch of which emits a verified cover.
    """
    _require_biclique(coloring.shape)
    if coloring.shape.k != 3:
        raise ValueError(f"needs k=3 colors, got k={coloring.shape.k}")
    ok, witness = is_spanning(coloring)
    if not ok:
        raise ValueError(f"coloring is not spanning: {witness[0]} misses color {witness[1]}")
    if table is None:
        table = decompose(coloring)
    ctx = _Ctx(coloring, table)

    checks = is_union_of_bicliques(coloring, table)
    failing = [chk for chk in checks if not chk.holds]
    if not failing:
        res = min_cover_exact(ctx.instance)
        if res.size > 3:
            raise RuntimeError("biclique-union coloring needed more than 3 components")
        return res.members

    a = failing[0].color
    _, u_vid, v_vid = failing[0].witness
    u = ctx.shape.global_index(u_vid)
    v = ctx.shape.global_index(v_vid)
    b = ctx.col(u, v)
    c3 = 6 - a - b
    anchors = {(a, ctx.comp(a, u)), (b, ctx.comp(b, u))}

    n1, n2 = ctx.shape.part_sizes
    sx = [g for g in range(n1) if ctx.col(g, v) == c3]
    sy = [g for g in range(n1, n1 + n2) if ctx.col(u, g) == c3]
    if not sx or not sy:
        raise AssertionError("spanning coloring left an empty third-color neighborhood")

    if any(ctx.col(gx, gy) == c3 for gx in sx for gy in sy):
        # the third-color components of u and v coincide
        return ctx.finish(anchors | {(c3, ctx.comp(c3, u))})

    # 2-colored sub-biclique on sx * sy (colors a, b only)
    sub_shape = Shape(2, 2, (len(sx), len(sy)))
    sub_colors = np.empty(sub_shape.edge_count, dtype=np.int32)
    cmap = {a: 1, b: 2}
    for i, gx in enumerate(sx):
        for j, gy in enumerate(sy):
            sub_colors[i * len(sy) + j] = cmap[ctx.col(gx, gy)]
    sub_table = decompose(EdgeColoring(sub_shape, sub_colors))
    sub_res = min_cover_exact(CoverInstance.from_rows(sub_table.rows, sub_table.counts))
    if sub_res.size > 2:
        raise RuntimeError("2-colored sub-biclique needed more than 2 components")

    def lift(member: CoverMember) -> tuple[int, frozenset[int]]:
        sub_color, sub_id = member
        color = a if sub_color == 1 else b
        verts = frozenset(
            sx[g] if g < len(sx) else sy[g - len(sx)]
            for g in np.flatnonzero(sub_table.rows[sub_color - 1] == sub_id)
        )
        return color, verts

    comps = [lift(m) for m in sub_res.members]
    if len(comps) == 1:
        color, verts = comps[0]
        return ctx.finish(anchors | {(color, ctx.comp(color, min(verts)))})

    (col_c, set_c), (col_d, set_d) = comps
    if col_c == col_d:
        c_sides = _sides(set_c, n1)
        d_sides = _sides(set_d, n1)
        if all(c_sides) and all(d_sides):
            return _case_same_color(ctx, anchors, col_c, set_c, set_d, c3, u, v)
        # a component missing a side is a single vertex; swap it for the
        # other color's sub-component through that vertex
        if not all(c_sides):
            col_c, set_c = _swap_singleton(ctx, sub_table, sx, sy, a, b, col_c, set_c)
        else:
            col_d, set_d = _swap_singleton(ctx, sub_table, sx, sy, a, b, col_d, set_d)
    return _case_two_colors(ctx, anchors, col_c, set_c, col_d, set_d, c3, u, v)


def _sides(verts: frozenset[int], n1: int) -> tuple[frozenset[int], frozenset[int]]:
    return frozenset(g for g in verts if g < n1), frozenset(g for g in verts if g >= n1)


def _swap_singleton(ctx, sub_table, sx, sy, a, b, color, verts):
    if len(verts) != 1:
        raise AssertionError("component with an empty side must be a single vertex")
    g = next(iter(verts))
    sub_g = sx.index(g) if g in sx else len(sx) + sy.index(g)
    other = 2 if color == a else 1
    sub_id = int(sub_table.rows[other - 1][sub_g])
    new_verts = frozenset(
        sx[h] if h < len(sx) else sy[h - len(sx)]
        for h in np.flatnonzero(sub_table.rows[other - 1] == sub_id)
    )
    return (b if other == 2 else a), new_verts


def _case_same_color(ctx, anchors, p, set_c, set_d, c3, u, v):
    """Both sub-components have color p; all four sides are nonempty."""
    o = ({m[0] for m in anchors} - {p}).pop()
    cx, cy = _sides(set_c, ctx.n1)
    dx, dy = _sides(set_d, ctx.n1)
    cp = _whole_component(ctx, p, set_c)
    dp = _whole_component(ctx, p, set_d)
    up, uo = ctx.comp(p, u), ctx.comp(o, u)
    if cp == up:
        return ctx.finish(anchors | {(p, dp)})
    if dp == up:
        return ctx.finish(anchors | {(p, cp)})
    if cp == dp:
        return ctx.finish(anchors | {(p, cp)})
    # cross sides between distinct same-color components form bicliques
    # in the other color, so each union sits in one component of color o
    e1 = _whole_component(ctx, o, cx | dy)
    e2 = _whole_component(ctx, o, cy | dx)
    if e1 == e2:
        return ctx.finish(anchors | {(o, e1)})
    if e1 == uo:
        return ctx.finish(anchors | {(o, e2)})
    if e2 == uo:
        return ctx.finish(anchors | {(o, e1)})
    return ctx.finish({(c3, ctx.comp(c3, u)), (c3, ctx.comp(c3, v))})


def _case_two_colors(ctx, anchors, p, set_p, o, set_q, c3, u, v):
    """Sub-components of different colors p (set_p) and o (set_q)."""
    pp = _whole_component(ctx, p, set_p)
    qq = _whole_component(ctx, o, set_q)
    if set_p <= set_q:
        return ctx.finish(anchors | {(o, qq)})
    if set_q <= set_p:
        return ctx.finish(anchors | {(p, pp)})

    px_orig, py_orig = _sides(set_p, ctx.n1)
    qx_orig, qy_orig = _sides(set_q, ctx.n1)
    if px_orig - qx_orig:
        px, py, qx, qy = px_orig, py_orig, qx_orig, qy_orig
        y_side = range(ctx.n1, ctx.shape.total_vertices)
    elif py_orig - qy_orig:
        px, py, qx, qy = py_orig, px_orig, qy_orig, qx_orig
        y_side = range(ctx.n1)
    else:
        raise AssertionError("non-nested components must differ on some side")
    if qy - py or not (qx - px) or py != qy:
        raise AssertionError("two-color component structure violated")

    up, uo = ctx.comp(p, u), ctx.comp(o, u)
    if pp == up:
        return ctx.finish(anchors | {(o, qq)})
    if qq == uo:
        return ctx.finish(anchors | {(p, pp)})

    for w in y_side:
        if ctx.comp(p, w) != up:
            continue
        p_cols = {ctx.col(x, w) for x in px}
        if c3 in p_cols:
            continue
        if p in p_cols:
            raise AssertionError("edge would merge the p-side component with the anchor")
        q_cols = {ctx.col(x, w) for x in qx}
        if o in q_cols:
            return ctx.finish(anchors | {(o, qq)})
        if q_cols == {p}:
            return ctx.finish(anchors | {(p, pp)})

    for w in y_side:
        if ctx.comp(o, w) != uo:
            continue
        if any(ctx.col(x, w) == c3 for x in px | qx):
            continue
        q_cols = {ctx.col(x, w) for x in qx}
        if o in q_cols:
            raise AssertionError("edge would merge the o-side component with the anchor")
        p_cols = {ctx.col(x, w) for x in px}
        if p in p_cols:
            return ctx.finish(anchors | {(p, pp)})
        return ctx.finish(anchors | {(o, qq)})

    return ctx.finish({(c3, ctx.comp(c3, u)), (c3, ctx.comp(c3, v))})


def _whole_component(ctx, color: int, verts) -> int:
    """Component id of all the given vertices in one color; they must agree."""
    ids = {ctx.comp(color, g) for g in verts}
    if len(ids) != 1:
        raise AssertionError(
            f"vertices {sorted(verts)} fall in several color-{color} components {sorted(ids)}"
        )
    return ids.pop()
