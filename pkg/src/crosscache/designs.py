"""Resolvable block designs: validation, cross intersection numbers, resolution search.

A design here is a point set {1..v} together with equal-size blocks arranged
into parallel classes (each class a partition of the point set). Cross
intersection numbers measure how blocks drawn from distinct classes overlap;
designs where some of them exist are the raw material for the caching scheme.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

Block = frozenset[int]


class DesignError(ValueError):
    """A design or design argument violates a structural requirement."""


@dataclass(frozen=True)
class ResolvableDesign:
    """Points 1..v plus an ordered list of parallel classes of ordered blocks.

    Class and block order are significant: every downstream enumeration
    (users, groups, transmissions) is defined against them, so equal inputs
    reproduce byte-identical outputs. Construction only checks shape;
    `validate` reports the full invariants.
    """

    v: int
    classes: tuple[tuple[Block, ...], ...]

    def __post_init__(self):
        if self.v < 1:
            raise DesignError("v must be positive")
        if not self.classes or any(not cls for cls in self.classes):
            raise DesignError("design needs at least one class and no empty classes")
        if any(not blk for cls in self.classes for blk in cls):
            raise DesignError("blocks must be nonempty")

    @classmethod
    def from_classes(cls, v: int, classes: Iterable[Iterable[Iterable[int]]]) -> "ResolvableDesign":
        return cls(v, tuple(tuple(frozenset(int(p) for p in blk) for blk in c) for c in classes))

    @property
    def r(self) -> int:
        """Number of parallel classes."""
        return len(self.classes)

    @property
    def b(self) -> int:
        """Total number of blocks (= caches)."""
        return sum(len(c) for c in self.classes)

    @property
    def k(self) -> int:
        """Block size."""
        return len(self.classes[0][0])

    @property
    def b_r(self) -> int:
        """Blocks per parallel class (v/k for a valid design)."""
        return self.v // self.k

    def points(self) -> frozenset[int]:
        return frozenset(range(1, self.v + 1))

    def block(self, class_id: int, block_id: int) -> Block:
        """Block `block_id` of class `class_id`, both 1-based."""
        return self.classes[class_id - 1][block_id - 1]

    def cache_id(self, class_id: int, block_id: int) -> int:
        """Global 1-based cache index: classes concatenated in order."""
        return (class_id - 1) * len(self.classes[0]) + block_id

    def cache_block(self, cache_id: int) -> Block:
        b_r = len(self.classes[0])
        return self.classes[(cache_id - 1) // b_r][(cache_id - 1) % b_r]

    def all_blocks(self) -> tuple[Block, ...]:
        """All blocks in canonical (global cache id) order."""
        return tuple(blk for cls in self.classes for blk in cls)


def validate(design: ResolvableDesign) -> list[str]:
    """Check the resolvable-design invariants; return violations (empty = ok)."""
    violations: list[str] = []
    point_set = design.points()
    k = design.k

    for ci, cls in enumerate(design.classes, start=1):
        for bi, blk in enumerate(cls, start=1):
            if not blk <= point_set:
                bad = sorted(blk - point_set)
                violations.append(f"class {ci} block {bi} has points outside 1..{design.v}: {bad}")
            if len(blk) != k:
                violations.append(f"class {ci} block {bi} has size {len(blk)}, expected {k}")

    for ci, cls in enumerate(design.classes, start=1):
        union: set[int] = set()
        total = 0
        for blk in cls:
            union |= blk
            total += len(blk)
        if total != len(union):
            violations.append(f"class {ci} not disjoint")
        if union != point_set:
            violations.append(f"class {ci} does not cover X")

    if design.v % k == 0:
        b_r = design.v // k
        for ci, cls in enumerate(design.classes, start=1):
            if len(cls) != b_r:
                violations.append(f"class {ci} has {len(cls)} blocks, expected v/k = {b_r}")
    else:
        violations.append(f"block size {k} does not divide v = {design.v}")

    return violations


def cross_intersection(design: ResolvableDesign, i: int) -> int | None:
    """Common size of intersections of i blocks from i distinct classes, or None.

    Defined only when every choice of i blocks taken from i distinct parallel
    classes meets in the same nonzero number of points; enumeration is
    exhaustive but aborts on the first unequal or empty intersection.
    """
    if not 2 <= i <= design.r:
        raise DesignError(f"cross intersection index must be in 2..{design.r}, got {i}")

    common: int | None = None
    for class_combo in itertools.combinations(design.classes, i):
        for blocks in itertools.product(*class_combo):
            inter = frozenset.intersection(*blocks)
            size = len(inter)
            if size == 0:
                return None
            if common is None:
                common = size
            elif size != common:
                return None
    return common


@dataclass(frozen=True)
class CrdProfile:
    """Which cross intersection numbers a design has, and the derived flags."""

    mu: dict[int, int]
    crn: int | None
    is_crd: bool
    is_mcrd: bool

    def __str__(self) -> str:
        if not self.mu:
            return "no cross intersection numbers (not a CRD)"
        mus = " ".join(f"mu_{i}={m}" for i, m in sorted(self.mu.items()))
        kind = "MCRD" if self.is_mcrd else "CRD"
        return f"{mus} crn={self.crn} ({kind})"


def crd_profile(design: ResolvableDesign) -> CrdProfile:
    """Compute mu_i for every i in 2..r and classify the design."""
    mu = {}
    for i in range(2, design.r + 1):
        value = cross_intersection(design, i)
        if value is not None:
            mu[i] = value
    crn = max(mu) if mu else None
    return CrdProfile(mu=mu, crn=crn, is_crd=bool(mu), is_mcrd=crn == design.r)


def find_resolution(v: int, blocks: Sequence[Iterable[int]], *,
                    max_blocks: int = 64) -> ResolvableDesign | None:
    """Partition a flat block list into parallel classes, if possible.

    Backtracking exact-cover search with deterministic ordering: each new
    class is seeded with the lowest-index unused block and extended by
    always covering the lowest uncovered point with the lowest-index
    candidate. Returns None when no resolution exists. Inputs larger than
    `max_blocks` blocks are refused (the search is exponential in general).
    """
    blks = [frozenset(int(p) for p in blk) for blk in blocks]
    if len(blks) > max_blocks:
        raise DesignError(f"refusing resolution search on {len(blks)} blocks (limit {max_blocks})")
    if not blks:
        return None
    k = len(blks[0])
    if k == 0 or any(len(blk) != k for blk in blks):
        return None
    if v % k != 0:
        return None
    point_set = frozenset(range(1, v + 1))
    if any(not blk <= point_set for blk in blks):
        return None
    b_r = v // k
    if len(blks) % b_r != 0:
        return None

    by_point: dict[int, list[int]] = {p: [] for p in point_set}
    for idx, blk in enumerate(blks):
        for p in blk:
            by_point[p].append(idx)

    used = [False] * len(blks)
    classes: list[tuple[int, ...]] = []

    def extend_class(partial: list[int], covered: set[int]) -> bool:
        if len(covered) == v:
            classes.append(tuple(sorted(partial)))
            if next_class():
                return True
            classes.pop()
            return False
        lowest = min(point_set - covered)
        for idx in by_point[lowest]:
            if used[idx] or blks[idx] & covered:
                continue
            used[idx] = True
            partial.append(idx)
            if extend_class(partial, covered | blks[idx]):
                return True
            partial.pop()
            used[idx] = False
        return False

    def next_class() -> bool:
        try:
            seed = used.index(False)
        except ValueError:
            return True
        used[seed] = True
        if extend_class([seed], set(blks[seed])):
            return True
        used[seed] = False
        return False

    if not next_class():
        return None
    return ResolvableDesign(v, tuple(tuple(blks[i] for i in cls) for cls in classes))
