"""Executable checkers for the component-vector claims.

Each checker evaluates one combinatorial predicate over a coloring's
component table and reports holds/fails with a concrete, re-checkable
witness.  The conditional claims are exposed as unconditional predicates;
callers (the sweep forensics) supply the hypothesis budgets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cover import CoverInstance, min_cover_exact
from .errors import GuardExceeded
from .hypercore import ComponentTable, EdgeColoring, decompose

DEFAULT_MAX_TUPLES = 10**7


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    holds: bool
    witness: object = None
    detail: str = ""


@dataclass(frozen=True)
class ClaimReport:
    """Bundle of per-claim verdicts for one coloring."""

    verdicts: tuple[ClaimVerdict, ...] = field(default_factory=tuple)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def __iter__(self):
        return iter(self.verdicts)


def _table(coloring: EdgeColoring, table: ComponentTable | None) -> ComponentTable:
    return decompose(coloring) if table is None else table


def check_claim_rsame(
    coloring: EdgeColoring,
    table: ComponentTable | None = None,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> ClaimVerdict:
    """Every transversal r-tuple agrees in some coordinate.

    Unconditional: each tuple is an edge of some color, whose component
    contains all r vertices.  Exhaustive over all tuples (= all edges).
    """
    shape = coloring.shape
    if shape.edge_count > max_tuples:
        raise GuardExceeded(
            f"{shape.edge_count} transversal tuples exceed the guard {max_tuples}"
        )
    table = _table(coloring, table)
    rows = table.rows
    for vs in shape.edge_vertices:
        vecs = rows[:, vs]
        if not (vecs == vecs[:, :1]).all(axis=1).any():
            witness = tuple(shape.vertex_id(g) for g in vs)
            return ClaimVerdict(
                "rsame", False, witness, "tuple with no agreeing coordinate"
            )
    return ClaimVerdict("rsame", True)


def check_claim_t1diff(
    coloring: EdgeColoring,
    cover_budget: int,
    table: ComponentTable | None = None,
) -> ClaimVerdict:
    """No choice of cover_budget many components covers every vertex.

    Definitionally equivalent to min cover > cover_budget; evaluated via
    the budgeted exact solver.  A failure witness is a cover of size
    <= cover_budget.
    """
    table = _table(coloring, table)
    instance = CoverInstance.from_component_table(table)
    res = min_cover_exact(instance, budget=cover_budget)
    if res.exceeded_budget:
        return ClaimVerdict("t1diff", True, detail=f"min cover > {cover_budget}")
    return ClaimVerdict(
        "t1diff", False, res.members, f"cover of size {res.size} <= {cover_budget}"
    )


def check_claim_samepart(
    coloring: EdgeColoring,
    cover_budget: int,
    table: ComponentTable | None = None,
) -> ClaimVerdict:
    """Every part meets at least cover_budget + 2 components of every color.

    Presumes a spanning coloring.  A failure witness is (color, part).
    """
    table = _table(coloring, table)
    shape = coloring.shape
    need = cover_budget + 2
    offs = shape.part_offsets
    for c in range(1, shape.k + 1):
        row = table.rows[c - 1]
        for p in range(1, shape.r + 1):
            lo = offs[p - 1]
            hi = lo + shape.part_sizes[p - 1]
            met = len(set(int(x) for x in row[lo:hi]))
            if met < need:
                return ClaimVerdict(
                    "samepartdiffcolor",
                    False,
                    (c, p),
                    f"part {p} meets {met} < {need} components of color {c}",
                )
    return ClaimVerdict("samepartdiffcolor", True)


def _cross_part_pairs(shape):
    offs = shape.part_offsets
    n = shape.total_vertices
    part_of = np.empty(n, dtype=np.int64)
    for p in range(shape.r):
        lo = offs[p]
        part_of[lo : lo + shape.part_sizes[p]] = p
    for gu in range(n):
        for gv in range(gu + 1, n):
            if part_of[gu] != part_of[gv]:
                yield gu, gv


def check_claim_smalldist(
    coloring: EdgeColoring,
    t: int,
    table: ComponentTable | None = None,
) -> ClaimVerdict:
    """All pairs from different parts have Hamming distance <= t + 1.

    A failure witness is (u, v, distance).
    """
    table = _table(coloring, table)
    shape = coloring.shape
    rows = table.rows
    for gu, gv in _cross_part_pairs(shape):
        dist = int(np.count_nonzero(rows[:, gu] != rows[:, gv]))
        if dist > t + 1:
            return ClaimVerdict(
                "smalldist",
                False,
                (shape.vertex_id(gu), shape.vertex_id(gv), dist),
                f"cross-part pair at distance {dist} > {t + 1}",
            )
    return ClaimVerdict("smalldist", True)


def check_claim_distr(
    coloring: EdgeColoring,
    r: int | None = None,
    table: ComponentTable | None = None,
) -> ClaimVerdict:
    """Some pair from different parts has Hamming distance >= r.

    r defaults to the shape's uniformity.  A success witness is
    (u, v, distance).
    """
    table = _table(coloring, table)
    shape = coloring.shape
    threshold = shape.r if r is None else r
    rows = table.rows
    best: tuple | None = None
    best_dist = -1
    for gu, gv in _cross_part_pairs(shape):
        dist = int(np.count_nonzero(rows[:, gu] != rows[:, gv]))
        if dist >= threshold:
            return ClaimVerdict(
                "distr",
                True,
                (shape.vertex_id(gu), shape.vertex_id(gv), dist),
            )
        if dist > best_dist:
            best_dist = dist
            best = (shape.vertex_id(gu), shape.vertex_id(gv), dist)
    return ClaimVerdict(
        "distr", False, best, f"max cross-part distance {best_dist} < {threshold}"
    )


def check_claim_distinguishing(
    coloring: EdgeColoring,
    table: ComponentTable | None = None,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> ClaimVerdict:
    """Every transversal triple has at most one distinguishing color.

    Only defined for r = 3.  A color distinguishes a triple when the
    three component ids in that color are pairwise distinct.  A failure
    witness is (a, b, c, (color1, color2)).
    """
    shape = coloring.shape
    if shape.r != 3:
        raise ValueError(f"distinguishing-color check needs r=3, got r={shape.r}")
    if shape.edge_count > max_tuples:
        raise GuardExceeded(
            f"{shape.edge_count} transversal triples exceed the guard {max_tuples}"
        )
    table = _table(coloring, table)
    rows = table.rows
    for vs in shape.edge_vertices:
        a, b, c = (rows[:, g] for g in vs)
        distinct = np.flatnonzero((a != b) & (b != c) & (a != c))
        if distinct.size >= 2:
            witness = tuple(shape.vertex_id(g) for g in vs) + (
                (int(distinct[0]) + 1, int(distinct[1]) + 1),
            )
            return ClaimVerdict(
                "distinguishing",
                False,
                witness,
                f"{distinct.size} distinguishing colors",
            )
    return ClaimVerdict("distinguishing", True)


def claim_suite(
    coloring: EdgeColoring,
    budget: int,
    table: ComponentTable | None = None,
) -> ClaimReport:
    """Run every applicable claim checker on one coloring.

    budget is the cover bound of interest; the part-count claim gets
    budget - 1 so its threshold lands at budget + 1.  Purely reporting:
    conditional claims may legitimately fail when the coloring admits a
    small cover.
    """
    table = _table(coloring, table)
    shape = coloring.shape
    verdicts = [
        check_claim_rsame(coloring, table),
        check_claim_t1diff(coloring, budget, table),
        check_claim_samepart(coloring, budget - 1, table),
        check_claim_smalldist(coloring, shape.k - shape.r, table),
        check_claim_distr(coloring, shape.r, table),
    ]
    if shape.r == 3:
        verdicts.append(check_claim_distinguishing(coloring, table))
    return ClaimReport(tuple(verdicts))


def forensic_report(
    coloring: EdgeColoring,
    budget: int,
    table: ComponentTable | None = None,
) -> ClaimReport:
    """All claim conclusions that must hold on a budget-violating coloring.

    budget is the cover bound hypothesized impossible (so the part-count
    claim gets budget - 1, making its threshold budget + 1).  For r = 2
    only the unconditional claim and the cover-equivalence claim apply.
    """
    table = _table(coloring, table)
    shape = coloring.shape
    verdicts = [
        check_claim_rsame(coloring, table),
        check_claim_t1diff(coloring, budget, table),
    ]
    if shape.r >= 3:
        verdicts.append(check_claim_samepart(coloring, budget - 1, table))
        verdicts.append(check_claim_smalldist(coloring, shape.k - shape.r, table))
        verdicts.append(check_claim_distr(coloring, shape.r, table))
        if shape.r == 3:
            verdicts.append(check_claim_distinguishing(coloring, table))
    return ClaimReport(tuple(verdicts))
