"""Minimum monochromatic component covers.

Exact branch-and-bound set cover over (color, component) candidates,
greedy approximation, and cover validation.  Candidate membership is kept
as Python-int bitmasks over global vertex indices, so a whole candidate
set is one word at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import ceil

import numpy as np

from .hypercore import ComponentTable

# A cover is a set of (color, component_id) pairs; solvers return them as
# tuples sorted ascending for reproducible output.
CoverMember = tuple[int, int]


@dataclass(frozen=True, eq=False)
class CoverInstance:
    """Set-cover instance whose candidate sets are monochromatic components.

    labels[i] is the (color, component_id) pair of candidate i, ascending;
    masks[i] is its vertex-membership bitmask.  vertex_names, when given,
    supplies display labels for witnesses (e.g. VertexId objects).
    """

    num_vertices: int
    labels: tuple[CoverMember, ...]
    masks: tuple[int, ...]
    vertex_names: tuple | None = None

    def __post_init__(self):
        if self.num_vertices <= 0:
            raise ValueError("empty vertex set")
        if len(self.labels) != len(self.masks):
            raise ValueError("labels/masks length mismatch")
        if sorted(self.labels) != list(self.labels):
            raise ValueError("candidates must be sorted by (color, component)")
        if union_mask(self.masks) != self.full_mask:
            raise ValueError("candidates do not cover the vertex set")

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    @cached_property
    def index_of(self) -> dict[CoverMember, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def candidates_of_vertex(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, indices of the candidates containing it."""
        out: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for i, m in enumerate(self.masks):
            while m:
                low = m & -m
                out[low.bit_length() - 1].append(i)
                m ^= low
        return tuple(tuple(c) for c in out)

    @classmethod
    def from_rows(cls, rows, counts, vertex_names=None) -> "CoverInstance":
        """Build from per-color partition rows (1-based component ids)."""
        rows = np.asarray(rows)
        k, n = rows.shape
        labels: list[CoverMember] = []
        masks: list[int] = []
        for c in range(k):
            row = rows[c]
            comp_masks = [0] * counts[c]
            for g in range(n):
                comp_masks[int(row[g]) - 1] |= 1 << g
            for j, m in enumerate(comp_masks, start=1):
                labels.append((c + 1, j))
                masks.append(m)
        return cls(n, tuple(labels), tuple(masks), vertex_names)

    @classmethod
    def from_component_table(cls, table: ComponentTable) -> "CoverInstance":
        names = tuple(
            table.shape.vertex_id(g) for g in range(table.shape.total_vertices)
        )
        return cls.from_rows(table.rows, table.counts, names)

    def vertex_name(self, g: int):
        return self.vertex_names[g] if self.vertex_names is not None else g


def union_mask(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


@dataclass(frozen=True)
class CoverResult:
    """Outcome of a cover computation.

    members is None exactly when a budgeted exact solve proved the true
    minimum exceeds the budget.
    """

    members: tuple[CoverMember, ...] | None
    size: int | None
    exceeded_budget: bool = False


def min_cover_exact(instance: CoverInstance, budget: int | None = None) -> CoverResult:
    """Minimum-cardinality cover by branch and bound.

    Branches on the uncovered vertex contained in the fewest candidate
    sets (ties to the lowest vertex index), trying its candidates in
    ascending (color, component) order; prunes with the bound
    ceil(uncovered / max candidate coverage).  Deterministic: among
    minimum covers, returns the first one found by this order.

    With a budget b, returns either a minimum cover of size <= b or a
    CoverResult flagged exceeded_budget (only when the true minimum > b).
    """
    if budget is not None and budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    masks = instance.masks
    cand_of = instance.candidates_of_vertex
    full = instance.full_mask
    n_cand = len(masks)
    best_size = (budget + 1) if budget is not None else (n_cand + 1)
    best: list[int] | None = None
    chosen: list[int] = []

    def branch_vertex(covered: int) -> int:
        rem = full & ~covered
        pick, pick_deg = -1, -1
        while rem:
            low = rem & -rem
            g = low.bit_length() - 1
            deg = len(cand_of[g])
            if pick < 0 or deg < pick_deg:
                pick, pick_deg = g, deg
            rem ^= low
        return pick

    def lower_bound(covered: int) -> int:
        uncovered = (full & ~covered).bit_count()
        if uncovered == 0:
            return 0
        biggest = max((masks[i] & ~covered).bit_count() for i in range(n_cand))
        return ceil(uncovered / biggest)

    def dfs(covered: int) -> None:
        nonlocal best_size, best
        if covered == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best = chosen.copy()
            return
        if len(chosen) + lower_bound(covered) >= best_size:
            return
        g = branch_vertex(covered)
        for i in cand_of[g]:
            chosen.append(i)
            dfs(covered | masks[i])
            chosen.pop()

    dfs(0)
    if best is None:
        return CoverResult(None, None, exceeded_budget=True)
    members = tuple(sorted(instance.labels[i] for i in best))
    return CoverResult(members, best_size)


def min_cover_greedy(instance: CoverInstance) -> CoverResult:
    """Cover built by repeated maximum-coverage choice.

    Ties break to the ascending (color, component) candidate; the result
    is valid but may exceed the exact minimum.
    """
    masks = instance.masks
    full = instance.full_mask
    covered = 0
    picked: list[int] = []
    while covered != full:
        gain_best, i_best = 0, -1
        for i, m in enumerate(masks):
            gain = (m & ~covered).bit_count()
            if gain > gain_best:
                gain_best, i_best = gain, i
        if i_best < 0:
            raise AssertionError("candidates cannot cover the vertex set")
        picked.append(i_best)
        covered |= masks[i_best]
    members = tuple(sorted(instance.labels[i] for i in picked))
    return CoverResult(members, len(members))


def validate_cover(instance: CoverInstance, members) -> tuple[bool, object | None]:
    """Is the union of the given components the full vertex set?

    Returns (True, None) or (False, witness) where witness names the
    lowest uncovered vertex.  Raises on references to components that do
    not exist in the instance.
    """
    covered = 0
    for member in members:
        member = (int(member[0]), int(member[1]))
        i = instance.index_of.get(member)
        if i is None:
            raise ValueError(f"no such component: color {member[0]}, id {member[1]}")
        covered |= instance.masks[i]
    missing = instance.full_mask & ~covered
    if missing == 0:
        return True, None
    g = (missing & -missing).bit_length() - 1
    return False, instance.vertex_name(g)
