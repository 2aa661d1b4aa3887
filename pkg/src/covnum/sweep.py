"""Verification sweeps over spanning colorings of a shape.

Exhaustive enumeration (optionally only color-relabeling canonical
representatives) or seeded random sampling; every spanning coloring
visited gets an exact minimum-cover solve.  Colorings whose minimum
cover exceeds the budget are recorded as violations and run through the
claim checkers as forensics.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np

from .claims import ClaimReport, forensic_report
from .constructions import random_spanning_coloring
from .cover import CoverInstance, min_cover_exact
from .errors import GuardExceeded
from .hypercore import EdgeColoring, Shape, decompose, is_spanning

DEFAULT_MAX_ENUM = 10**8

MODES = ("exhaustive", "random")
SYMMETRIES = ("none", "color-canonical")


@dataclass(frozen=True)
class SweepConfig:
    shape: Shape
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = 0
    symmetry: str = "none"
    budget: int | None = None          # defaults to max(1, k - r + 1)
    max_enum: int = DEFAULT_MAX_ENUM
    max_retries: int = 1_000_000
    threads: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.symmetry not in SYMMETRIES:
            raise ValueError(f"symmetry must be one of {SYMMETRIES}, got {self.symmetry!r}")
        if self.mode == "random" and self.samples < 1:
            raise ValueError("random mode needs samples >= 1")
        if self.budget is not None and self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    @property
    def effective_budget(self) -> int:
        if self.budget is not None:
            return self.budget
        return max(1, self.shape.k - self.shape.r + 1)


@dataclass(frozen=True)
class Violation:
    """A visited spanning coloring whose exact minimum cover exceeds budget."""

    colors: tuple[int, ...]
    min_cover: int
    forensics: ClaimReport
    consistent: bool


@dataclass(frozen=True)
class SweepResult:
    shape: Shape
    mode: str
    symmetry: str
    budget: int
    enumerated: int                 # candidates generated / samples drawn
    spanning: int                   # spanning colorings solved
    max_min_cover: int | None
    max_example: tuple[int, ...] | None
    violations: tuple[Violation, ...]
    forensic_alerts: int            # violations whose claim forensics failed
    rejected_proposals: int = 0     # random mode: discarded sampler proposals


def canonical_colorings(m: int, k: int, prefix: tuple[int, ...] = ()):
    """Color sequences of length m that are lexicographically minimal
    under the k! color relabelings.

    These are exactly the restricted-growth sequences: the first entry is
    1 and each entry exceeds the running maximum by at most one.  prefix
    fixes the first entries (it must itself satisfy the condition).
    """
    seq = list(prefix) + [0] * (m - len(prefix))
    hi = 0
    for i, c in enumerate(prefix):
        if c > hi + 1 or c < 1 or c > k:
            raise ValueError(f"prefix {prefix} is not canonical at position {i}")
        hi = max(hi, c)

    def rec(i: int, hi: int):
        if i == m:
            yield tuple(seq)
            return
        top = min(k, hi + 1)
        for c in range(1, top + 1):
            seq[i] = c
            yield from rec(i + 1, max(hi, c))

    yield from rec(len(prefix), hi)


def count_canonical(m: int, k: int) -> int:
    """Number of canonical sequences: partitions of m positions into at
    most k nonempty classes (a Stirling-number sum)."""
    # S[j] = Stirling second kind S(i, j) while iterating i = 1..m
    s = [0] * (k + 1)
    s[1] = 1 if m >= 1 else 0
    for _ in range(2, m + 1):
        nxt = [0] * (k + 1)
        for j in range(1, k + 1):
            nxt[j] = j * s[j] + (s[j - 1] if j >= 2 else 0)
        s = nxt
    return sum(s[1:])


def _predicted_enumeration(shape: Shape, symmetry: str) -> int:
    if symmetry == "color-canonical":
        return count_canonical(shape.edge_count, shape.k)
    return shape.k**shape.edge_count


@dataclass
class _Partial:
    enumerated: int = 0
    spanning: int = 0
    max_min_cover: int | None = None
    max_example: tuple[int, ...] | None = None
    violations: list[Violation] | None = None
    rejected: int = 0

    def __post_init__(self):
        if self.violations is None:
            self.violations = []

    def absorb(self, coloring: EdgeColoring, budget: int) -> None:
        self.spanning += 1
        table = decompose(coloring)
        res = min_cover_exact(CoverInstance.from_component_table(table))
        size = res.size
        if self.max_min_cover is None or size > self.max_min_cover:
            self.max_min_cover = size
            self.max_example = tuple(int(c) for c in coloring.colors)
        if size > budget:
            report = forensic_report(coloring, budget, table)
            self.violations.append(
                Violation(
                    tuple(int(c) for c in coloring.colors),
                    size,
                    report,
                    report.all_hold,
                )
            )


def _merge(parts: list[_Partial], config: SweepConfig) -> SweepResult:
    merged = _Partial()
    for p in parts:
        merged.enumerated += p.enumerated
        merged.spanning += p.spanning
        merged.rejected += p.rejected
        if p.max_min_cover is not None and (
            merged.max_min_cover is None or p.max_min_cover > merged.max_min_cover
        ):
            merged.max_min_cover = p.max_min_cover
            merged.max_example = p.max_example
        merged.violations.extend(p.violations)
    return SweepResult(
        shape=config.shape,
        mode=config.mode,
        symmetry=config.symmetry,
        budget=config.effective_budget,
        enumerated=merged.enumerated,
        spanning=merged.spanning,
        max_min_cover=merged.max_min_cover,
        max_example=merged.max_example,
        violations=tuple(merged.violations),
        forensic_alerts=sum(1 for v in merged.violations if not v.consistent),
        rejected_proposals=merged.rejected,
    )


def _run_exhaustive_chunk(config: SweepConfig, prefix: tuple[int, ...]) -> _Partial:
    shape = config.shape
    m, k = shape.edge_count, shape.k
    budget = config.effective_budget
    if config.symmetry == "color-canonical":
        gen = canonical_colorings(m, k, prefix)
    else:
        gen = (
            prefix + rest
            for rest in product(range(1, k + 1), repeat=m - len(prefix))
        )
    part = _Partial()
    for colors in gen:
        part.enumerated += 1
        coloring = EdgeColoring(shape, np.asarray(colors, dtype=np.int32))
        ok, _ = is_spanning(coloring)
        if ok:
            part.absorb(coloring, budget)
    return part


def _run_random_chunk(config: SweepConfig, lo: int, hi: int) -> _Partial:
    shape = config.shape
    budget = config.effective_budget
    part = _Partial()
    for i in range(lo, hi):
        sample = random_spanning_coloring(shape, config.seed + i, config.max_retries)
        part.enumerated += 1
        part.rejected += sample.rejected
        part.absorb(sample.coloring, budget)
    return part


def _exhaustive_prefixes(config: SweepConfig) -> list[tuple[int, ...]]:
    m, k = config.shape.edge_count, config.shape.k
    if config.threads == 1 or m < 4:
        return [()]
    depth = min(4, m)
    if config.symmetry == "color-canonical":
        return [p for p in canonical_colorings(depth, k)]
    return [p for p in product(range(1, k + 1), repeat=depth)]


def sweep(config: SweepConfig) -> SweepResult:
    """Run the configured sweep and summarize it.

    Exhaustive mode is guarded: the predicted number of candidate
    sequences (after symmetry reduction) must not exceed max_enum.
    """
    if config.mode == "exhaustive":
        predicted = _predicted_enumeration(config.shape, config.symmetry)
        if predicted > config.max_enum:
            raise GuardExceeded(
                f"enumeration of {predicted} colorings exceeds the guard "
                f"{config.max_enum}"
            )
        tasks = [(_run_exhaustive_chunk, (config, p)) for p in _exhaustive_prefixes(config)]
    else:
        n = config.samples
        chunk = max(1, -(-n // config.threads))
        bounds = [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]
        tasks = [(_run_random_chunk, (config, lo, hi)) for lo, hi in bounds]

    if config.threads == 1 or len(tasks) == 1:
        parts = [fn(*args) for fn, args in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            parts = [f.result() for f in futures]
    return _merge(parts, config)
