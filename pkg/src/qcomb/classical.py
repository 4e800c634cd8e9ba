"""Classical integer triangles via Pascal-style recurrences.

These are deliberately coded without reference to the q-engines: they serve
as the independent side when cross-checking q = 1 specializations, as the
integer inputs of the classical Spivey / Mezo identities, and as cheap cell
size estimates for the enumeration cap.

Indexing convention for the restricted variants: ``stirling2_r(n, k, r)``
counts partitions of [n+r] into k+r blocks with 1..r in distinct blocks, and
similarly for cycles and ordered blocks.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signless Stirling numbers of the first kind (cycle counts)."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def lah(n: int, k: int) -> int:
    """Lah numbers: ordered-block partitions of [n] into k blocks."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return lah(n - 1, k - 1) + (n + k - 1) * lah(n - 1, k)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def stirling2_r(n: int, k: int, r: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    # element n+r joins one of the k+r blocks or opens a new one
    return stirling2_r(n - 1, k - 1, r) + (k + r) * stirling2_r(n - 1, k, r)


@lru_cache(maxsize=None)
def stirling1_r(n: int, k: int, r: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    # element n+r opens a cycle or follows one of the n+r-1 others
    return stirling1_r(n - 1, k - 1, r) + (n + r - 1) * stirling1_r(n - 1, k, r)


@lru_cache(maxsize=None)
def lah_r(n: int, k: int, r: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    # n+r-1 follow slots plus k+r block fronts, or a new block
    return lah_r(n - 1, k - 1, r) + (n + k + 2 * r - 1) * lah_r(n - 1, k, r)


def bell_r(n: int, r: int) -> int:
    return sum(stirling2_r(n, k, r) for k in range(n + 1))


@lru_cache(maxsize=None)
def ext_lah_count(n: int, k: int) -> int:
    """Number of extended Lah distributions of [n] with k true blocks."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    # new true block, or one of n-1 follow slots + k block fronts + circling
    return ext_lah_count(n - 1, k - 1) + (n + k) * ext_lah_count(n - 1, k)
