"""Brute-force statistic-sum oracles.

Each oracle walks the full enumeration stream of one structure family and
sums q to the power of the statistic (or the weight monomial, for extended
Lah distributions).  Nothing here touches the closed forms or recurrences in
families.py, so an oracle/engine match is a genuine two-route check.
"""

from __future__ import annotations

from collections import Counter

from .polyring import MPoly, QPoly
from .stats import ext_stats, stat_inv_c, stat_inv_rho, stat_w
from .structures import (enum_cycle_perms, enum_extended_lah, enum_lah,
                         enum_partitions)

ORACLE_FAMILIES = ("partitions", "perms", "lah", "ext_lah")

# oracle family -> engine family it certifies
ENGINE_FOR_ORACLE = {
    "partitions": "stirling2_q",
    "perms": "stirling1_q",
    "lah": "lah_q",
    "ext_lah": "hsu_shiue",
}


def _counts_to_qpoly(counts: list[int]) -> QPoly:
    return QPoly(counts)


def oracle(family: str, n: int, k: int, r: int = 0,
           cap: int | None = None) -> QPoly | MPoly:
    """Exact statistic sum over one enumeration cell."""
    table = oracle_table(family, n, r, cap=cap, only_k=k)
    zero = MPoly() if family == "ext_lah" else QPoly()
    return table.get(k, zero)


def oracle_table(family: str, n: int, r: int = 0, cap: int | None = None,
                 only_k: int | None = None) -> dict[int, QPoly | MPoly]:
    """Statistic sums for every k of one (family, n, r) cell in a single
    enumeration pass; restrict to one k with only_k."""
    if family not in ORACLE_FAMILIES:
        raise ValueError(f"unknown oracle family {family!r}")
    if family == "ext_lah":
        if r != 0:
            raise ValueError("ext_lah oracle requires r = 0")
        buckets: dict[int, Counter] = {}
        for lam in enum_extended_lah(n, only_k, cap=cap):
            st = ext_stats(lam)
            kk = lam.true_block_count()
            buckets.setdefault(kk, Counter())[(st.nrec, st.rec_star, st.circ, 0)] += 1
        return {kk: MPoly(dict(c)) for kk, c in buckets.items()}

    if family == "partitions":
        stream = enum_partitions(n, only_k, r, cap=cap)
        # the restricted elements 1..r always occupy blocks 1..r and so add a
        # fixed r-choose-2 to the block-position statistic; the restricted
        # family's polynomials count the free elements only, so the constant
        # is dropped here (it vanishes for r <= 1)
        offset = r * (r - 1) // 2
        stat = lambda s: stat_w(s) - offset
        group_count = lambda s: len(s.blocks)
    elif family == "perms":
        stream = enum_cycle_perms(n, only_k, r, cap=cap)
        stat = stat_inv_c
        group_count = lambda s: len(s.cycles)
    else:
        stream = enum_lah(n, only_k, r, cap=cap)
        stat = stat_inv_rho
        group_count = lambda s: len(s.blocks)

    counts: dict[int, list[int]] = {}
    for s in stream:
        v = stat(s)
        kk = group_count(s) - r
        bucket = counts.setdefault(kk, [])
        if len(bucket) <= v:
            bucket.extend([0] * (v + 1 - len(bucket)))
        bucket[v] += 1
    return {kk: _counts_to_qpoly(c) for kk, c in counts.items()}
