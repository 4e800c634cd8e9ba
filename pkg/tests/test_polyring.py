import json
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from qcomb.polyring import (ALPHA, BETA, ExactDivisionError, MPoly, Q, Q_ONE,
                            Q_ZERO, QPoly, R, X, binom, binom_gen,
                            elementary_symmetric, poly_eval_int, q_binomial,
                            q_factorial, q_integer, q_rising, rising_int,
                            shifted_factorial)

qpolys = st.lists(st.integers(-3, 3), max_size=4).map(QPoly)
exps = st.tuples(*(st.integers(0, 2) for _ in range(4)))
mpolys = st.dictionaries(exps, st.integers(-3, 3), max_size=4).map(MPoly)


class TestQPolyBasics:
    def test_trailing_zeros_stripped(self):
        assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert QPoly([0, 0]).coeffs == ()
        assert QPoly().is_zero()

    def test_degree(self):
        assert QPoly().degree == -1
        assert QPoly([5]).degree == 0
        assert QPoly([0, 0, 3]).degree == 2

    def test_arithmetic(self):
        p = QPoly([1, 1, 1])
        assert p * QPoly([1, 1]) == QPoly([1, 2, 2, 1])
        assert p - p == Q_ZERO
        assert p + 1 == QPoly([2, 1, 1])
        assert 2 * p == QPoly([2, 2, 2])
        assert Q ** 3 == QPoly([0, 0, 0, 1])
        assert Q_ZERO ** 0 == Q_ONE

    def test_shift(self):
        assert QPoly([1, 1]).shift(2) == QPoly([0, 0, 1, 1])
        assert Q_ZERO.shift(3) == Q_ZERO

    def test_exact_div(self):
        num = QPoly([1, 1]) * QPoly([1, 0, 1])
        assert num.exact_div(QPoly([1, 1])) == QPoly([1, 0, 1])
        with pytest.raises(ExactDivisionError):
            QPoly([1, 1, 1]).exact_div(QPoly([1, 1]))
        with pytest.raises(ZeroDivisionError):
            Q_ONE.exact_div(Q_ZERO)

    def test_json_round_trip(self):
        p = QPoly([0, -2, 10 ** 30])
        assert QPoly.from_json(json.loads(json.dumps(p.to_json()))) == p
        assert p.to_json() == ["0", "-2", str(10 ** 30)]

    def test_str(self):
        assert str(Q_ZERO) == "0"
        assert str(QPoly([1, 0, 2])) == "1 + 2*q^2"


class TestQPrimitives:
    def test_q_integer(self):
        assert q_integer(0) == Q_ZERO
        assert q_integer(1) == Q_ONE
        assert q_integer(3) == QPoly([1, 1, 1])
        with pytest.raises(ValueError):
            q_integer(-1)

    def test_q_factorial(self):
        assert q_factorial(0) == Q_ONE
        assert q_factorial(2) == QPoly([1, 1])
        assert q_factorial(3) == QPoly([1, 2, 2, 1])
        with pytest.raises(ValueError):
            q_factorial(-2)

    def test_q_binomial(self):
        for n in (-3, 0, 4, 7):
            assert q_binomial(n, 0) == Q_ONE
        assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
        assert q_binomial(2, 3) == Q_ZERO
        assert q_binomial(3, -1) == Q_ZERO
        assert q_binomial(-2, 1) == Q_ZERO

    def test_q_binomial_nonneg_and_value_at_one(self):
        for n in range(13):
            for k in range(n + 1):
                p = q_binomial(n, k)
                assert all(c >= 0 for c in p.coeffs)
                assert poly_eval_int(p, 1) == binom(n, k)

    def test_q_binomial_counts_word_inversions(self):
        # distribution of inversions over binary words with k zeros
        from qcomb.stats import inversions
        for n in range(9):
            for k in range(n + 1):
                counts = {}
                for ones in combinations(range(n), n - k):
                    word = [1 if i in ones else 0 for i in range(n)]
                    v = inversions(word)
                    counts[v] = counts.get(v, 0) + 1
                gf = QPoly([counts.get(i, 0) for i in range(max(counts) + 1)])
                assert gf == q_binomial(n, k), (n, k)

    def test_q_rising(self):
        assert q_rising(5, 0) == Q_ONE
        assert q_rising(0, 1) == Q_ZERO
        assert q_rising(2, 2) == QPoly([1, 2, 2, 1])
        with pytest.raises(ValueError):
            q_rising(1, -1)

    def test_q_rising_factorial_ratio(self):
        for n in range(1, 8):
            for m in range(5):
                ratio = q_factorial(n + m - 1).exact_div(q_factorial(n - 1))
                assert q_rising(n, m) == ratio

    def test_poly_eval_int(self):
        assert poly_eval_int(QPoly([1, 1, 1]), -1) == 1
        assert poly_eval_int(QPoly([3, -2, 7]), 1) == 8
        assert poly_eval_int(q_integer(4), -1) == 0
        assert poly_eval_int(q_integer(5), -1) == 1

    def test_rising_int(self):
        assert rising_int(7, 0) == 1
        assert rising_int(1, 5) == 120
        assert rising_int(2, 3) == 24
        assert rising_int(-2, 2) == 2
        with pytest.raises(ValueError):
            rising_int(1, -1)

    def test_binom_conventions(self):
        assert binom(5, 2) == 10
        assert binom(3, 5) == 0
        assert binom(-1, 0) == 0
        assert binom_gen(-1, 0) == 1
        assert binom_gen(-1, 2) == 1
        assert binom_gen(4, 2) == 6
        assert binom_gen(3, 5) == 0
        assert binom_gen(3, -1) == 0

    def test_desk_scale_exactness(self):
        # inversion distribution over all permutations of 40 symbols:
        # degree 780, coefficient sum exactly 40!
        import math
        p = q_factorial(40)
        assert p.degree == 40 * 39 // 2
        assert poly_eval_int(p, 1) == math.factorial(40)
        assert rising_int(1, 100) == math.factorial(100)

    def test_elementary_symmetric(self):
        items = [q_integer(i) for i in (1, 2, 3)]
        assert elementary_symmetric(0, items) == Q_ONE
        e1 = items[0] + items[1] + items[2]
        assert elementary_symmetric(1, items) == e1
        assert elementary_symmetric(3, items) == items[0] * items[1] * items[2]
        assert elementary_symmetric(4, items) == Q_ZERO


class TestMPoly:
    def test_from_monomial(self):
        assert MPoly.from_monomial() == MPoly.from_int(1)
        assert ALPHA * BETA + ALPHA * BETA == 2 * ALPHA * BETA
        with pytest.raises(ValueError):
            MPoly.from_monomial(e_alpha=-1)

    def test_zero_terms_dropped(self):
        assert (ALPHA - ALPHA).is_zero()
        assert MPoly({(1, 0, 0, 0): 0}) == MPoly()

    def test_substitute_partial(self):
        p = ALPHA + BETA + 2 * R
        assert p.substitute(alpha=0, beta=1, r=0) == MPoly.from_int(1)
        assert p.substitute(r=3) == ALPHA + BETA + 6
        with pytest.raises(ValueError):
            p.substitute(gamma=1)

    def test_substitute_rational_values(self):
        p = 2 * ALPHA + BETA
        assert p.substitute(alpha=Fraction(1, 2)) == BETA + 1
        with pytest.raises(ValueError):
            p.substitute(beta=Fraction(1, 3))

    def test_evaluate_rational(self):
        p = shifted_factorial(2, X - R, BETA)
        a, b, r, x = Fraction(2, 3), Fraction(-1, 2), Fraction(5), Fraction(7, 4)
        direct = (x - r) * (x - r - b)
        assert p.evaluate(a, b, r, x) == direct

    def test_constant(self):
        assert (ALPHA * 0 + 5).constant() == 5
        with pytest.raises(ValueError):
            ALPHA.constant()

    def test_canonical_order_and_json(self):
        p = 2 * R + ALPHA + BETA + ALPHA * BETA
        exps_order = [e for e, _ in p.sorted_terms()]
        assert exps_order == [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
                              (1, 1, 0, 0)]
        assert MPoly.from_json(json.loads(json.dumps(p.to_json()))) == p

    def test_str(self):
        assert str(MPoly()) == "0"
        assert str(ALPHA + BETA + 2 * R) == "alpha + beta + 2*r"


class TestShiftedFactorial:
    def test_empty_product(self):
        assert shifted_factorial(0, X, BETA) == MPoly.from_int(1)

    def test_single_factor(self):
        assert shifted_factorial(1, X, -ALPHA) == X

    def test_expansion_matches_pointwise_product(self):
        p = shifted_factorial(3, X - R, BETA)
        pts = [(Fraction(1, 2), Fraction(2, 3), Fraction(-3), Fraction(5, 7)),
               (Fraction(0), Fraction(1), Fraction(1, 5), Fraction(4))]
        for a, b, r, x in pts:
            direct = (x - r) * (x - r - b) * (x - r - 2 * b)
            assert p.evaluate(a, b, r, x) == direct


class TestRingAxioms:
    sample_qpolys = [QPoly(c) for c in
                     [(), (1,), (-3,), (0, 1), (2, -1), (1, 1, 1), (-2, 0, 3),
                      (1, -1, 2, -2), (3, 0, 0, 1)]]
    sample_mpolys = [MPoly(), MPoly.from_int(2), ALPHA, BETA - R, X * X,
                     ALPHA * BETA - 3, 2 * R + X, ALPHA + BETA + R + X]

    def test_qpoly_axioms_exhaustive_sample(self):
        s = self.sample_qpolys
        for a in s:
            for b in s:
                assert a + b == b + a
                assert a * b == b * a
                for c in s:
                    assert (a + b) + c == a + (b + c)
                    assert (a * b) * c == a * (b * c)
                    assert a * (b + c) == a * b + a * c

    def test_mpoly_axioms_exhaustive_sample(self):
        s = self.sample_mpolys
        for a in s:
            for b in s:
                assert a + b == b + a
                assert a * b == b * a
                for c in s:
                    assert (a + b) + c == a + (b + c)
                    assert (a * b) * c == a * (b * c)
                    assert a * (b + c) == a * b + a * c

    @given(qpolys, qpolys, qpolys)
    def test_qpoly_axioms_random(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(mpolys, mpolys, mpolys)
    def test_mpoly_axioms_random(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(qpolys, st.integers(-5, 5))
    def test_eval_is_ring_hom(self, p, t):
        q = QPoly([2, -1, 3])
        assert poly_eval_int(p * q, t) == poly_eval_int(p, t) * poly_eval_int(q, t)
        assert poly_eval_int(p + q, t) == poly_eval_int(p, t) + poly_eval_int(q, t)
