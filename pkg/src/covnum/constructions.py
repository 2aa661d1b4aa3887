"""Named instances and the seeded spanning-coloring sampler.

The cyclic perfect-matching coloring of a biclique, the truncated
projective plane, and uniform random sampling of spanning colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import RetryLimitExceeded
from .hypercore import EdgeColoring, Shape, make_shape
from .ryser import GeneralHypergraph


def cyclic_biclique(kk: int) -> EdgeColoring:
    """Coloring of the kk-by-kk biclique where every color class is a
    perfect matching: edge (x_i, y_j) takes color ((j - i) mod kk) + 1.

    Spanning; kk monochromatic components are needed to cover it.
    """
    if kk < 2:
        raise ValueError(f"need kk >= 2, got {kk}")
    shape = make_shape(2, kk, [kk, kk])
    colors = np.empty(shape.edge_count, dtype=np.int32)
    for i in range(kk):
        for j in range(kk):
            colors[i * kk + j] = (j - i) % kk + 1
    return EdgeColoring(shape, colors)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _pg2_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized homogeneous triples over the integers mod q, sorted.

    One representative per projective point: first nonzero coordinate 1.
    """
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    return sorted(pts)


def truncated_projective_plane(q: int) -> GeneralHypergraph:
    """Projective plane of prime order q with one point removed.

    Vertices are the q^2 + q surviving points, partitioned into the q + 1
    lines through the removed point (each minus that point); edges are
    the q^2 lines avoiding it.  The result is (q+1)-partite,
    (q+1)-uniform, and intersecting.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    pts = _pg2_points(q)
    removed = pts[0]

    def incident(p, l) -> bool:
        return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0

    # lines and points share the same normalized representatives
    spine = [l for l in pts if incident(removed, l)]
    classes = []
    for l in sorted(spine):
        classes.append(sorted(p for p in pts if p != removed and incident(p, l)))
    number: dict[tuple[int, int, int], int] = {}
    partition = []
    for cls in classes:
        block = []
        for p in cls:
            number[p] = len(number)
            block.append(number[p])
        partition.append(tuple(block))
    edges = []
    for l in pts:
        if incident(removed, l):
            continue
        edges.append(frozenset(number[p] for p in pts if p != removed and incident(p, l)))
    return GeneralHypergraph(len(number), q + 1, tuple(edges), tuple(partition))


@dataclass(frozen=True)
class SpanningSample:
    """A sampled spanning coloring plus the number of discarded proposals."""

    coloring: EdgeColoring
    rejected: int


def random_spanning_coloring(
    shape: Shape, seed: int, max_retries: int = 1_000_000
) -> SpanningSample:
    """Uniform sample from the spanning colorings of a shape.

    Rejection sampling, factored for throughput: the edge set splits into
    disjoint blocks, one per vertex of the largest part, so those blocks
    are first drawn conditioned on seeing every color (per-block
    rejection), and whole proposals are then rejected until the remaining
    vertices also see every color.  The output law equals naive rejection
    of i.i.d. uniform colorings; deterministic for a fixed seed.

    rejected counts the discarded full proposals.  Raises
    RetryLimitExceeded when that count passes max_retries, and ValueError
    when some vertex degree is below k (spanning is impossible).
    """
    k = shape.k
    if k > 62:
        raise ValueError("sampler supports at most 62 colors")
    for p in range(1, shape.r + 1):
        if shape.degree(p) < k:
            raise ValueError(
                f"vertices of part {p} have degree {shape.degree(p)} < k={k}; "
                "no spanning coloring exists"
            )
    plan = _sampler_plan(shape)
    rng = np.random.default_rng(seed)
    rejected = 0
    batch = 64
    while True:
        blocks = _draw_spanning_blocks(rng, batch * plan.n_blocks, plan.block_size, k)
        proposals = np.empty((batch, shape.edge_count), dtype=np.int32)
        proposals[:, plan.block_edges] = blocks.reshape(batch, -1)
        seen = np.zeros((batch, shape.total_vertices, k + 1), dtype=bool)
        seen[
            np.arange(batch)[:, None],
            plan.edge_vertex_flat[None, :],
            proposals[:, plan.edge_repeat],
        ] = True
        ok = seen[:, :, 1:].all(axis=(1, 2))
        hits = np.flatnonzero(ok)
        if hits.size:
            rejected += int(hits[0])
            return SpanningSample(EdgeColoring(shape, proposals[hits[0]]), rejected)
        rejected += batch
        if rejected > max_retries:
            raise RetryLimitExceeded(
                f"no spanning coloring found within {max_retries} proposals"
            )
        batch = min(batch * 4, 8192)


@dataclass(frozen=True)
class _SamplerPlan:
    n_blocks: int
    block_size: int
    block_edges: np.ndarray       # flattened edge indices, block-major
    edge_vertex_flat: np.ndarray  # (m*r,) vertex of each (edge, slot)
    edge_repeat: np.ndarray       # (m*r,) edge of each (edge, slot)


@lru_cache(maxsize=64)
def _sampler_plan(shape: Shape) -> _SamplerPlan:
    # pivot part: largest (its vertices are the most constrained)
    pivot = max(range(1, shape.r + 1), key=lambda p: shape.part_sizes[p - 1])
    n = shape.part_sizes[pivot - 1]
    blocks: list[list[int]] = [[] for _ in range(n)]
    for e in range(shape.edge_count):
        blocks[shape.edge_tuple(e)[pivot - 1]].append(e)
    block_edges = np.asarray(blocks, dtype=np.int64)
    ev = np.asarray(shape.edge_vertices, dtype=np.int64)
    return _SamplerPlan(
        n_blocks=n,
        block_size=block_edges.shape[1],
        block_edges=block_edges.ravel(),
        edge_vertex_flat=ev.ravel(),
        edge_repeat=np.repeat(np.arange(shape.edge_count), shape.r),
    )


def _surjective_probability(d: int, k: int) -> float:
    """Probability that d i.i.d. uniform colors cover all k colors."""
    return sum(
        (-1) ** j * comb(k, j) * ((k - j) / k) ** d for j in range(k + 1)
    )


def _draw_spanning_blocks(
    rng: np.random.Generator, rows: int, d: int, k: int
) -> np.ndarray:
    """(rows, d) colors, each row seeing all k colors, by row rejection.

    Rows are drawn in oversized chunks sized from the exact surjectivity
    probability; passing rows are taken in stream order, so each output
    row is an independent uniform surjective draw.
    """
    p = _surjective_probability(d, k)
    full = (1 << (k + 1)) - 2  # bits 1..k
    out = np.empty((rows, d), dtype=np.int32)
    filled = 0
    budget = 10**9
    while filled < rows:
        want = rows - filled
        chunk = min(int((want * 1.15 + 50) / p) + 1, max(1, 4_000_000 // d))
        draws = rng.integers(1, k + 1, size=(chunk, d), dtype=np.int64)
        seen = np.zeros(chunk, dtype=np.int64)
        for j in range(d):
            seen |= np.left_shift(1, draws[:, j])
        good = draws[seen == full]
        take = min(want, good.shape[0])
        out[filled : filled + take] = good[:take]
        filled += take
        budget -= chunk
        if budget <= 0:
            raise RetryLimitExceeded("block rejection failed to converge")
    return out
