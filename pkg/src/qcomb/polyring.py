"""Exact polynomial arithmetic underlying all q-analogues.

Two carrier types:

  QPoly  -- dense univariate polynomial in q with arbitrary-precision integer
            coefficients.  Every q-number (q-integers, q-factorials,
            q-binomials, q-Stirling/Bell/Lah values) is a QPoly.
  MPoly  -- sparse polynomial in the four weight variables (alpha, beta, r, x)
            with integer coefficients, used for generalized Stirling numbers
            and generalized Bell polynomials.

All arithmetic is exact: Python ints carry the coefficients, so there is no
overflow and no rounding.  Values are immutable after construction and safe
to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


# ---------------------------------------------------------------------------
# univariate polynomials in q
# ---------------------------------------------------------------------------

class QPoly:
    """Polynomial in q, stored as an ascending coefficient tuple.

    The zero polynomial is the empty tuple; otherwise the trailing
    coefficient is nonzero, so equality of values is equality of tuples.

    >>> QPoly([1, 1, 1]) * QPoly([1, 1])
    QPoly([1, 2, 2, 1])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "QPoly | int") -> "QPoly":
        other = _as_qpoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        return self + (-_as_qpoly(other))

    def __rsub__(self, other: int) -> "QPoly":
        return _as_qpoly(other) + (-self)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            if other == 0:
                return Q_ZERO
            return QPoly([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Q_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Q_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return Q_ZERO
        return QPoly((0,) * k + self.coeffs)

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact polynomial division; a nonzero remainder is a hard error."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Q_ZERO
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree
        if dd < dv:
            raise ExactDivisionError("degree of divisor exceeds dividend")
        lead = other.coeffs[-1]
        quot = [0] * (dd - dv + 1)
        for i in range(dd - dv, -1, -1):
            c = rem[i + dv]
            if c == 0:
                continue
            if c % lead != 0:
                raise ExactDivisionError("leading coefficient does not divide")
            f = c // lead
            quot[i] = f
            for j, oc in enumerate(other.coeffs):
                rem[i + j] -= f * oc
        if any(rem):
            raise ExactDivisionError("nonzero remainder in exact division")
        return QPoly(quot)

    # -- evaluation and serialization ----------------------------------------

    def eval_int(self, t: int) -> int:
        """Exact evaluation at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def to_json(self) -> list[str]:
        """Ascending coefficient array of decimal strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QPoly":
        return cls(int(s) for s in data)

    # -- dunder plumbing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _as_qpoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "q" if i == 1 else f"q^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_qpoly(value: "QPoly | int") -> QPoly:
    if isinstance(value, QPoly):
        return value
    return QPoly((value,))


Q_ZERO = QPoly()
Q_ONE = QPoly((1,))
Q = QPoly((0, 1))


# ---------------------------------------------------------------------------
# q-combinatorial primitives
# ---------------------------------------------------------------------------

def q_integer(n: int) -> QPoly:
    """The q-integer 1 + q + ... + q**(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError(f"q_integer requires n >= 0, got {n}")
    return QPoly((1,) * n)


def q_factorial(n: int) -> QPoly:
    """Product of the q-integers 1..n; one for n = 0."""
    if n < 0:
        raise ValueError(f"q_factorial requires n >= 0, got {n}")
    p = Q_ONE
    for i in range(1, n + 1):
        p = p * q_integer(i)
    return p


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient.

    Total on integer pairs: 1 whenever k = 0 (any n), the exact q-factorial
    ratio for 0 <= k <= n, and 0 otherwise.
    """
    if k == 0:
        return Q_ONE
    if k < 0 or n < 0 or k > n:
        return Q_ZERO
    num = q_factorial(n)
    den = q_factorial(k) * q_factorial(n - k)
    return num.exact_div(den)


def q_rising(n: int, m: int) -> QPoly:
    """q-rising factorial: product of the q-integers n, n+1, ..., n+m-1."""
    if n < 0 or m < 0:
        raise ValueError(f"q_rising requires n, m >= 0, got ({n}, {m})")
    p = Q_ONE
    for i in range(n, n + m):
        p = p * q_integer(i)
    return p


def poly_eval_int(p: QPoly, t: int) -> int:
    """Exact evaluation of p at q = t."""
    return p.eval_int(t)


def elementary_symmetric(j: int, items: Sequence[QPoly]) -> QPoly:
    """The j-th elementary symmetric polynomial of the given values."""
    if j < 0 or j > len(items):
        return Q_ZERO
    # e[t] holds the t-th elementary symmetric value of the prefix seen so far
    e = [Q_ONE] + [Q_ZERO] * j
    for it in items:
        for t in range(j, 0, -1):
            e[t] = e[t] + e[t - 1] * it
    return e[j]


# ---------------------------------------------------------------------------
# integer helpers shared by the number engines and identity checks
# ---------------------------------------------------------------------------

def rising_int(a: int, b: int) -> int:
    """Rising factorial a(a+1)...(a+b-1); one for b = 0."""
    if b < 0:
        raise ValueError(f"rising_int requires b >= 0, got {b}")
    out = 1
    for i in range(b):
        out *= a + i
    return out


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_gen(a: int, b: int) -> int:
    """Generalized binomial: falling product over b!, any integer a.

    Zero for b < 0; binom_gen(a, 0) == 1 for every a, including negatives.
    Matches the convention under which closed forms for q = -1
    specializations stay valid at their support boundaries.
    """
    if b < 0:
        return 0
    num = 1
    for t in range(b):
        num *= a - t
    return num // math.factorial(b)


# ---------------------------------------------------------------------------
# sparse polynomials in (alpha, beta, r, x)
# ---------------------------------------------------------------------------

VAR_NAMES = ("alpha", "beta", "r", "x")
_EXP0 = (0, 0, 0, 0)


class MPoly:
    """Sparse polynomial in (alpha, beta, r, x) over the integers.

    Terms map exponent 4-tuples to nonzero coefficients; two values are
    equal iff their term maps are identical.  Canonical term order for
    serialization is graded lexicographic on the fixed variable tuple.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int, int, int], int] | None = None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def from_int(cls, value: int) -> "MPoly":
        return cls({_EXP0: value})

    @classmethod
    def from_monomial(cls, e_alpha: int = 0, e_beta: int = 0, e_r: int = 0,
                      e_x: int = 0, coeff: int = 1) -> "MPoly":
        exps = (e_alpha, e_beta, e_r, e_x)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in monomial {exps}")
        return cls({exps: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "MPoly | int") -> "MPoly":
        other = _as_mpoly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly | int") -> "MPoly":
        return self + (-_as_mpoly(other))

    def __rsub__(self, other: int) -> "MPoly":
        return _as_mpoly(other) + (-self)

    def __mul__(self, other: "MPoly | int") -> "MPoly":
        if isinstance(other, int):
            return MPoly({e: other * c for e, c in self.terms.items()})
        out: dict[tuple[int, int, int, int], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                out[e] = out.get(e, 0) + ca * cb
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = M_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitution ---------------------------------------------------------

    def substitute(self, **values: "int | Fraction") -> "MPoly":
        """Substitute exact values for a subset of the variables.

        Unassigned variables stay symbolic; the result is again an MPoly,
        so its coefficients must come out integral (always true for
        integer values; checked when a Fraction is supplied).
        """
        for name in values:
            if name not in VAR_NAMES:
                raise ValueError(f"unknown variable {name!r}")
        out: dict[tuple[int, int, int, int], Fraction | int] = {}
        for exps, c in self.terms.items():
            new = list(exps)
            term: Fraction | int = c
            for pos, name in enumerate(VAR_NAMES):
                if name in values:
                    term *= Fraction(values[name]) ** exps[pos]
                    new[pos] = 0
            e = tuple(new)
            out[e] = out.get(e, 0) + term
        ints: dict[tuple[int, int, int, int], int] = {}
        for e, term in out.items():
            frac = Fraction(term)
            if frac.denominator != 1:
                raise ValueError(
                    "substitution leaves a non-integer coefficient; use "
                    "evaluate() for a full rational evaluation")
            ints[e] = int(frac)
        return MPoly(ints)

    def evaluate(self, alpha: "Fraction | int", beta: "Fraction | int",
                 r: "Fraction | int", x: "Fraction | int") -> Fraction:
        """Exact rational evaluation with every variable assigned."""
        vals = (Fraction(alpha), Fraction(beta), Fraction(r), Fraction(x))
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def constant(self) -> int:
        """The value of a constant polynomial."""
        extra = [e for e in self.terms if e != _EXP0]
        if extra:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get(_EXP0, 0)

    # -- canonical order and serialization ------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, int, int, int], int]]:
        """Terms in graded-lexicographic order on (alpha, beta, r, x):
        degree first, then alpha before beta before r before x."""
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "MPoly":
        return cls({tuple(rec["exps"]): int(rec["coeff"]) for rec in data})

    # -- dunder plumbing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _as_mpoly(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"MPoly({self.terms!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(VAR_NAMES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def _as_mpoly(value: "MPoly | int") -> MPoly:
    if isinstance(value, MPoly):
        return value
    return MPoly({_EXP0: value})


M_ZERO = MPoly()
M_ONE = MPoly({_EXP0: 1})
ALPHA = MPoly.from_monomial(e_alpha=1)
BETA = MPoly.from_monomial(e_beta=1)
R = MPoly.from_monomial(e_r=1)
X = MPoly.from_monomial(e_x=1)


def shifted_factorial(k: int, base: MPoly, step: MPoly) -> MPoly:
    """Generalized falling factorial: product of (base - i*step), i < k.

    With base x and step -alpha this is x(x+alpha)...(x+(k-1)alpha); with
    base x-r and step beta it is (x-r)(x-r-beta)...; one for k = 0.
    """
    if k < 0:
        raise ValueError(f"shifted_factorial requires k >= 0, got {k}")
    p = M_ONE
    for i in range(k):
        p = p * (base - step * i)
    return p
