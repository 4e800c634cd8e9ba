"""Canonical combinatorial structures and exhaustive enumerators.

Four families: set partitions, permutations in standard cycle form, Lah
distributions (ordered blocks), and extended Lah distributions (Lah
distributions with circled special elements).  Blocks and cycles are always
stored ordered by increasing minimum; each cycle starts with its minimum.

Enumerators are insertion-based: element t is added to every legal position
of each structure on [t-1], so each structure is produced exactly once, in a
deterministic order.  The r-restricted variants force elements 1..r into
distinct blocks/cycles by making each of them open a new block or cycle.
"""

from __future__ import annotations

import os
from typing import Iterator, NamedTuple

from . import classical

DEFAULT_CELL_CAP = 10_000_000
CELL_CAP_ENV = "QCOMB_MAX_ENUM"


class StructureError(ValueError):
    """A structure violates its representation invariants."""


class CellCapError(RuntimeError):
    """An enumeration cell would exceed the configured structure cap."""

    def __init__(self, cell: tuple, estimate: int, cap: int):
        self.cell = cell
        self.estimate = estimate
        self.cap = cap
        super().__init__(
            f"enumeration cell {cell} holds {estimate} structures, above the cap {cap}")


_cap_override: int | None = None


def set_default_cap(cap: int | None) -> None:
    """Install a process-wide cap, taking precedence over the environment."""
    global _cap_override
    _cap_override = cap


def effective_cap(cap: int | None = None) -> int:
    """Resolve the enumeration cap: explicit value, then the installed
    override, then the environment, then the built-in default."""
    if cap is not None:
        return cap
    if _cap_override is not None:
        return _cap_override
    env = os.environ.get(CELL_CAP_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_CELL_CAP


def _check_cap(cell: tuple, estimate: int, cap: int | None) -> None:
    limit = effective_cap(cap)
    if estimate > limit:
        raise CellCapError(cell, estimate, limit)


# ---------------------------------------------------------------------------
# structure types
# ---------------------------------------------------------------------------

class SetPartition(NamedTuple):
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def validate(self) -> "SetPartition":
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise StructureError("empty block")
            if list(b) != sorted(b):
                raise StructureError(f"block {b} not increasing")
            seen.update(b)
        if seen != set(range(1, self.n + 1)) or sum(map(len, self.blocks)) != self.n:
            raise StructureError("blocks do not partition the ground set")
        mins = [b[0] for b in self.blocks]
        if mins != sorted(mins):
            raise StructureError("blocks not ordered by increasing minimum")
        return self

    def text(self) -> str:
        return "/".join(",".join(str(e) for e in b) for b in self.blocks)


class CyclePerm(NamedTuple):
    n: int
    cycles: tuple[tuple[int, ...], ...]

    def validate(self) -> "CyclePerm":
        seen: set[int] = set()
        for c in self.cycles:
            if not c:
                raise StructureError("empty cycle")
            if c[0] != min(c):
                raise StructureError(f"cycle {c} does not start with its minimum")
            seen.update(c)
        if seen != set(range(1, self.n + 1)) or sum(map(len, self.cycles)) != self.n:
            raise StructureError("cycles do not cover the ground set")
        mins = [c[0] for c in self.cycles]
        if mins != sorted(mins):
            raise StructureError("cycles not ordered by increasing minimum")
        return self

    def text(self) -> str:
        return "/".join(",".join(str(e) for e in c) for c in self.cycles)


class LahDist(NamedTuple):
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def validate(self) -> "LahDist":
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise StructureError("empty block")
            seen.update(b)
        if seen != set(range(1, self.n + 1)) or sum(map(len, self.blocks)) != self.n:
            raise StructureError("blocks do not partition the ground set")
        mins = [min(b) for b in self.blocks]
        if mins != sorted(mins):
            raise StructureError("blocks not ordered by increasing minimum")
        return self

    def text(self) -> str:
        return "/".join(",".join(str(e) for e in b) for b in self.blocks)


class ExtLahDist(NamedTuple):
    base: LahDist
    circled: frozenset[int]

    @property
    def n(self) -> int:
        return self.base.n

    def true_block_count(self) -> int:
        return len(self.base.blocks) - (1 if 1 in self.circled else 0)

    def validate(self) -> "ExtLahDist":
        self.base.validate()
        special = special_elements(self.base)
        for e in self.circled:
            if e not in special:
                raise StructureError(f"circled element {e} is not special")
        if 1 in self.circled:
            for b in self.base.blocks:
                if 1 in b and b[0] != 1:
                    raise StructureError("circled 1 does not start its block")
        for e in self.circled:
            if e >= 2:
                for b in self.base.blocks:
                    if b and b[0] == e:
                        raise StructureError(f"circled element {e} starts a block")
        return self

    def text(self) -> str:
        def fmt(e: int) -> str:
            return f"({e})" if e in self.circled else str(e)
        return "/".join(",".join(fmt(e) for e in b) for b in self.base.blocks)


def special_elements(delta: LahDist) -> frozenset[int]:
    """Elements eligible for circling: 1, plus every element that is not a
    block minimum and is preceded by all smaller elements in the
    left-to-right scan of the blocks."""
    if delta.n == 0:
        return frozenset()
    pos: dict[int, int] = {}
    blockmin: dict[int, int] = {}
    i = 0
    for b in delta.blocks:
        mn = min(b)
        for e in b:
            pos[e] = i
            blockmin[e] = mn
            i += 1
    out = {1}
    # running max of pos[1..e-1]; all of [e-1] lie left of e iff it is < pos[e]
    seen_max = pos[1]
    for e in range(2, delta.n + 1):
        if e != blockmin[e] and seen_max < pos[e]:
            out.add(e)
        seen_max = max(seen_max, pos[e])
    return frozenset(out)


# ---------------------------------------------------------------------------
# enumerators
# ---------------------------------------------------------------------------

def enum_partitions(n: int, k: int | None, r: int = 0,
                    cap: int | None = None) -> Iterator[SetPartition]:
    """Partitions of [n+r] into k+r blocks with 1..r in distinct blocks.

    k=None streams all block counts.  The stream is empty for impossible
    (n, k, r) combinations.
    """
    if n < 0 or r < 0:
        raise ValueError(f"enum_partitions requires n, r >= 0, got ({n}, {r})")
    if k is not None and not 0 <= k <= n:
        return
    ks = range(n + 1) if k is None else (k,)
    estimate = sum(classical.stirling2_r(n, kk, r) for kk in ks)
    _check_cap(("partitions", n, k, r), estimate, cap)
    size = n + r

    def feasible(groups: int, placed: int) -> bool:
        # groups can only grow, by at most one per remaining element
        return k is None or groups <= k + r <= groups + (size - placed)

    def rec(t: int, blocks: list[list[int]]) -> Iterator[SetPartition]:
        if t > size:
            if k is None or len(blocks) == k + r:
                yield SetPartition(size, tuple(tuple(b) for b in blocks))
            return
        if t > r and feasible(len(blocks), t):
            for b in blocks:
                b.append(t)
                yield from rec(t + 1, blocks)
                b.pop()
        if feasible(len(blocks) + 1, t):
            blocks.append([t])
            yield from rec(t + 1, blocks)
            blocks.pop()

    yield from rec(1, [])


def enum_cycle_perms(n: int, k: int | None, r: int = 0,
                     cap: int | None = None) -> Iterator[CyclePerm]:
    """Permutations of [n+r] with k+r cycles, 1..r in distinct cycles."""
    if n < 0 or r < 0:
        raise ValueError(f"enum_cycle_perms requires n, r >= 0, got ({n}, {r})")
    if k is not None and not 0 <= k <= n:
        return
    ks = range(n + 1) if k is None else (k,)
    estimate = sum(classical.stirling1_r(n, kk, r) for kk in ks)
    _check_cap(("perms", n, k, r), estimate, cap)
    size = n + r

    def feasible(groups: int, placed: int) -> bool:
        return k is None or groups <= k + r <= groups + (size - placed)

    def rec(t: int, cycles: list[list[int]]) -> Iterator[CyclePerm]:
        if t > size:
            if k is None or len(cycles) == k + r:
                yield CyclePerm(size, tuple(tuple(c) for c in cycles))
            return
        if t > r and feasible(len(cycles), t):
            for c in cycles:
                for pos in range(1, len(c) + 1):
                    c.insert(pos, t)
                    yield from rec(t + 1, cycles)
                    c.pop(pos)
        if feasible(len(cycles) + 1, t):
            cycles.append([t])
            yield from rec(t + 1, cycles)
            cycles.pop()

    yield from rec(1, [])


def enum_lah(n: int, k: int | None, r: int = 0,
             cap: int | None = None) -> Iterator[LahDist]:
    """Lah distributions of [n+r] into k+r ordered blocks, 1..r distinct."""
    if n < 0 or r < 0:
        raise ValueError(f"enum_lah requires n, r >= 0, got ({n}, {r})")
    if k is not None and not 0 <= k <= n:
        return
    ks = range(n + 1) if k is None else (k,)
    estimate = sum(classical.lah_r(n, kk, r) for kk in ks)
    _check_cap(("lah", n, k, r), estimate, cap)
    size = n + r

    def feasible(groups: int, placed: int) -> bool:
        return k is None or groups <= k + r <= groups + (size - placed)

    def rec(t: int, blocks: list[list[int]]) -> Iterator[LahDist]:
        if t > size:
            if k is None or len(blocks) == k + r:
                yield LahDist(size, tuple(tuple(b) for b in blocks))
            return
        if t > r and feasible(len(blocks), t):
            for b in blocks:
                for pos in range(len(b) + 1):
                    b.insert(pos, t)
                    yield from rec(t + 1, blocks)
                    b.pop(pos)
        if feasible(len(blocks) + 1, t):
            blocks.append([t])
            yield from rec(t + 1, blocks)
            blocks.pop()

    yield from rec(1, [])


def enum_extended_lah_tracked(
        n: int, k: int | None,
        cap: int | None = None) -> Iterator[tuple[ExtLahDist, tuple[int, int, int]]]:
    """Extended Lah distributions with incrementally tracked statistics.

    Yields (structure, (nrec, rec_star, circ)).  Element t is inserted as a
    new true block, directly after an existing element, at the front of a
    true block, or circled at the end of the right-most block (circled 1
    instead opens its own non-true block).  Every yielded structure is
    re-validated against the circling rules.
    """
    if n < 0:
        raise ValueError(f"enum_extended_lah requires n >= 0, got {n}")
    if k is not None and not 0 <= k <= n:
        return
    ks = range(n + 1) if k is None else (k,)
    estimate = sum(classical.ext_lah_count(n, kk) for kk in ks)
    _check_cap(("ext_lah", n, k, None), estimate, cap)

    def emit(blocks: list[list[int]], circled: set[int],
             stats: tuple[int, int, int]) -> Iterator[tuple[ExtLahDist, tuple[int, int, int]]]:
        lam = ExtLahDist(LahDist(n, tuple(tuple(b) for b in blocks)),
                         frozenset(circled))
        lam.validate()
        yield lam, stats

    def feasible(true_blocks: int, placed: int) -> bool:
        return k is None or true_blocks <= k <= true_blocks + (n - placed)

    def rec(t: int, blocks: list[list[int]], circled: set[int],
            true_count: int, nrec: int, rec_star: int,
            circ: int) -> Iterator[tuple[ExtLahDist, tuple[int, int, int]]]:
        if t > n:
            if k is None or true_count == k:
                yield from emit(blocks, circled, (nrec, rec_star, circ))
            return
        one_circled = 1 in circled
        # new true block at the end (t is the running maximum)
        if feasible(true_count + 1, t):
            blocks.append([t])
            yield from rec(t + 1, blocks, circled, true_count + 1,
                           nrec, rec_star, circ)
            blocks.pop()
        if feasible(true_count, t):
            # directly after any existing element
            for b in blocks:
                for pos in range(1, len(b) + 1):
                    b.insert(pos, t)
                    yield from rec(t + 1, blocks, circled, true_count,
                                   nrec + 1, rec_star, circ)
                    b.pop(pos)
            # at the front of any true block
            for b in blocks:
                if one_circled and b[0] == 1:
                    continue
                b.insert(0, t)
                yield from rec(t + 1, blocks, circled, true_count,
                               nrec, rec_star + 1, circ)
                b.pop(0)
            # circled: last element of the right-most block (t >= 2),
            # or a new non-true block when t = 1
            if t == 1:
                blocks.append([1])
                circled.add(1)
                yield from rec(2, blocks, circled, true_count,
                               nrec, rec_star, circ + 1)
                circled.discard(1)
                blocks.pop()
            elif blocks:
                blocks[-1].append(t)
                circled.add(t)
                yield from rec(t + 1, blocks, circled, true_count,
                               nrec, rec_star, circ + 1)
                circled.discard(t)
                blocks[-1].pop()

    yield from rec(1, [], set(), 0, 0, 0, 0)


def enum_extended_lah(n: int, k: int | None,
                      cap: int | None = None) -> Iterator[ExtLahDist]:
    """Extended Lah distributions of [n] with exactly k true blocks."""
    for lam, _stats in enum_extended_lah_tracked(n, k, cap=cap):
        yield lam


def check_r_distinct(structure: SetPartition | CyclePerm | LahDist, r: int) -> bool:
    """True iff elements 1..r occupy pairwise distinct blocks/cycles."""
    groups = structure.blocks if not isinstance(structure, CyclePerm) else structure.cycles
    for g in groups:
        if sum(1 for e in g if e <= r) > 1:
            return False
    return True
