"""Engines for the q-number families and the generalized Stirling numbers.

Every engine returns an exact QPoly or MPoly and is memoized on its
parameters.  The restricted (r > 0) values are computed from the r = 0
recurrences through the corresponding shift formulas, so those formulas are
exercised on every restricted computation; the enumeration oracles validate
the composition independently.

Values are zero outside the support 0 <= k <= n; negative n or r is an
argument error.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .polyring import (ALPHA, BETA, M_ZERO, MPoly, Q_ONE, Q_ZERO, QPoly, R, X,
                       binom, binom_gen, q_binomial, q_integer, q_rising)


def _check_nr(name: str, n: int, r: int) -> None:
    if n < 0 or r < 0:
        raise ValueError(f"{name} requires n, r >= 0, got n={n}, r={r}")


# ---------------------------------------------------------------------------
# q-Stirling numbers of the second kind and q-Bell numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _stirling2_q_base(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return Q_ZERO
    if n == 0 or k == 0:
        return Q_ONE if n == k else Q_ZERO
    return (_stirling2_q_base(n - 1, k - 1).shift(k - 1)
            + q_integer(k) * _stirling2_q_base(n - 1, k))


@lru_cache(maxsize=None)
def stirling2_q(n: int, k: int, r: int = 0) -> QPoly:
    """Block-weight generating polynomial over restricted partitions.

    r = 0 follows the recurrence with factors q^(k-1) and the q-integer k;
    r > 0 shifts the unrestricted values by the count of elements avoiding
    the blocks of 1..r.
    """
    _check_nr("stirling2_q", n, r)
    if k < 0 or k > n:
        return Q_ZERO
    if r == 0:
        return _stirling2_q_base(n, k)
    rq = q_integer(r)
    total = Q_ZERO
    for i in range(k, n + 1):
        term = _stirling2_q_base(i, k) * binom(n, i) * rq ** (n - i)
        total = total + term.shift(i * r)
    return total


@lru_cache(maxsize=None)
def bell_q(n: int, r: int = 0) -> QPoly:
    """Sum of stirling2_q(n, k, r) over all k."""
    _check_nr("bell_q", n, r)
    total = Q_ZERO
    for k in range(n + 1):
        total = total + stirling2_q(n, k, r)
    return total


# ---------------------------------------------------------------------------
# q-Lah numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _lah_q_recurrence(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return Q_ZERO
    if n == 0 or k == 0:
        return Q_ONE if n == k else Q_ZERO
    return (_lah_q_recurrence(n - 1, k - 1).shift(n + k - 2)
            + q_integer(n + k - 1) * _lah_q_recurrence(n - 1, k))


def _lah_q_closed_form(n: int, k: int) -> QPoly:
    # q^(k(k-1)) * (n_q!/k_q!) * qbinom(n-1, k-1), valid for 1 <= k <= n
    ratio = Q_ONE
    for i in range(k + 1, n + 1):
        ratio = ratio * q_integer(i)
    return (ratio * q_binomial(n - 1, k - 1)).shift(k * (k - 1))


@lru_cache(maxsize=None)
def lah_q(n: int, k: int, r: int = 0) -> QPoly:
    """Inversion generating polynomial over restricted Lah distributions.

    For r = 0 the closed form and the recurrence are both computed and must
    agree exactly; a mismatch is an internal error.
    """
    _check_nr("lah_q", n, r)
    if k < 0 or k > n:
        return Q_ZERO
    if r == 0:
        rec = _lah_q_recurrence(n, k)
        if 1 <= k <= n:
            cf = _lah_q_closed_form(n, k)
            if cf != rec:
                raise AssertionError(
                    f"lah_q closed form and recurrence disagree at ({n}, {k})")
        return rec
    total = Q_ZERO
    for i in range(k, n + 1):
        term = q_rising(2 * r, n - i) * q_binomial(n, i) * lah_q(i, k, 0)
        total = total + term.shift(r * (2 * i + r - 1))
    return total


# ---------------------------------------------------------------------------
# q-Stirling numbers of the first kind
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _stirling1_q_base(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return Q_ZERO
    if n == 0 or k == 0:
        return Q_ONE if n == k else Q_ZERO
    return (_stirling1_q_base(n - 1, k - 1)
            + q_integer(n - 1) * _stirling1_q_base(n - 1, k))


@lru_cache(maxsize=None)
def stirling1_q(n: int, k: int, r: int = 0) -> QPoly:
    """Cycle-inversion generating polynomial over restricted permutations."""
    _check_nr("stirling1_q", n, r)
    if k < 0 or k > n:
        return Q_ZERO
    if r == 0:
        return _stirling1_q_base(n, k)
    total = Q_ZERO
    for i in range(k, n + 1):
        total = total + q_rising(r, n - i) * q_binomial(n, i) * stirling1_q(i, k, 0)
    return total


# ---------------------------------------------------------------------------
# closed forms at q = -1
# ---------------------------------------------------------------------------

def stirling_neg1(variant: str, n: int, k: int) -> int:
    """Closed forms for stirling2_q at q = -1; zero outside 0 <= k <= n.

    variant "plain" covers r = 0 (and every even r); variant "r1" covers
    r = 1 (and every odd r).
    """
    if variant not in ("plain", "r1"):
        raise ValueError(f"unknown variant {variant!r}")
    if not 0 <= k <= n:
        return 0
    if variant == "plain":
        return (-1) ** (k * (k - 1) // 2) * binom_gen(n - k // 2 - 1, n - k)
    return (-1) ** (k * (k + 1) // 2) * binom_gen(n - (k + 1) // 2, k // 2)


# ---------------------------------------------------------------------------
# generalized Stirling numbers and generalized Bell polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def hsu_shiue(n: int, k: int) -> MPoly:
    """Connection constants between the two shifted factorial bases, as
    polynomials in (alpha, beta, r)."""
    if n < 0:
        raise ValueError(f"hsu_shiue requires n >= 0, got {n}")
    if k < 0 or k > n:
        return M_ZERO
    if n == 0:
        return MPoly.from_int(1)
    return (hsu_shiue(n - 1, k - 1)
            + (ALPHA * (n - 1) + BETA * k + R) * hsu_shiue(n - 1, k))


@lru_cache(maxsize=None)
def gen_bell(n: int) -> MPoly:
    """Generalized Bell polynomial: sum of hsu_shiue(n, k) * x^k."""
    if n < 0:
        raise ValueError(f"gen_bell requires n >= 0, got {n}")
    total = M_ZERO
    for k in range(n + 1):
        total = total + hsu_shiue(n, k) * X ** k
    return total


# ---------------------------------------------------------------------------
# uniform table surface for the CLI
# ---------------------------------------------------------------------------

class TableRow(NamedTuple):
    family: str
    n: int
    k: int | None
    r: int | None
    value: QPoly | MPoly
    provenance: str


QPOLY_FAMILIES = ("stirling2_q", "stirling1_q", "lah_q", "bell_q")
MPOLY_FAMILIES = ("hsu_shiue", "gen_bell")
FAMILIES = QPOLY_FAMILIES + MPOLY_FAMILIES


def table_rows(family: str, n_range: range, k_range: range | None = None,
               r_range: range | None = None) -> Iterator[TableRow]:
    """Rows of one family table over inclusive parameter ranges."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    rs = r_range if r_range is not None else range(0, 1)
    for n in n_range:
        ks = k_range if k_range is not None else range(0, n + 1)
        if family == "bell_q":
            for r in rs:
                yield TableRow(family, n, None, r, bell_q(n, r), "recurrence")
        elif family == "gen_bell":
            yield TableRow(family, n, None, None, gen_bell(n), "recurrence")
        elif family == "hsu_shiue":
            for k in ks:
                yield TableRow(family, n, k, None, hsu_shiue(n, k), "recurrence")
        else:
            fn = {"stirling2_q": stirling2_q, "stirling1_q": stirling1_q,
                  "lah_q": lah_q}[family]
            for k in ks:
                for r in rs:
                    prov = ("closed-form" if family == "lah_q" and r == 0
                            and 1 <= k <= n else "recurrence")
                    yield TableRow(family, n, k, r, fn(n, k, r), prov)
