from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from planetrace.polycore import (
    NEG_INFINITY,
    ONE,
    ZERO,
    ASeries,
    InexactDivisionError,
    IntPoly,
    NonUnitError,
    OrderMismatchError,
    XSeries,
    aseries_mul,
    eval_at_one,
    format_poly,
    parse_poly,
    poly_add,
    poly_exact_div,
    poly_mul,
    series_inverse,
    series_mul,
)
from planetrace.qseries import bracket, gauss_binom, gauss_binom_pascal


def P(*c):
    return IntPoly(tuple(c))


small_polys = st.lists(st.integers(-5, 5), max_size=9).map(lambda c: IntPoly(tuple(c)))


def count_bounded_partitions(n, max_part):
    """Partitions of n with parts <= max_part, by enumerating multiplicities."""
    total = 0
    for mults in product(*(range(n // p + 1) for p in range(1, max_part + 1))):
        if sum(m * p for m, p in zip(mults, range(1, max_part + 1))) == n:
            total += 1
    return total


class TestIntPoly:
    def test_canonical_form_strips_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).coeffs == ()

    def test_zero_degree_is_sentinel(self):
        assert ZERO.degree is NEG_INFINITY
        assert not isinstance(ZERO.degree, (int, float))
        assert ZERO.degree < 0
        assert ZERO.degree < -(10**9)
        assert P(3).degree == 0

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            IntPoly((1.5,))

    def test_add_cancels(self):
        assert poly_add(P(1, -1), P(0, 1)) == ONE

    def test_add_identity(self):
        p = P(3, 0, -2)
        assert poly_add(ZERO, p) == p

    def test_add_disjoint(self):
        assert poly_add(bracket(2), bracket(3)) == P(2, 0, -1, -1)

    def test_pow(self):
        assert P(1, 1) ** 3 == P(1, 3, 3, 1)
        assert P(1, 1) ** 0 == ONE

    def test_eval_at_one(self):
        assert eval_at_one(ZERO) == 0
        assert eval_at_one(gauss_binom(4, 2).poly) == 6
        assert eval_at_one(P(1, 0, 1, 2, 1, 0, 1)) == 6


class TestExactDivision:
    def test_simple(self):
        assert poly_exact_div(P(1, 0, -1), P(1, -1)) == P(1, 1)

    def test_bracket_factorial_quotient_is_gauss_binom(self):
        num = bracket(1) * bracket(2) * bracket(3) * bracket(4)
        den = bracket(1) * bracket(2) * bracket(1) * bracket(2)
        assert poly_exact_div(num, den) == gauss_binom_pascal(4, 2)

    def test_non_divisible(self):
        with pytest.raises(InexactDivisionError):
            poly_exact_div(bracket(3), bracket(2))

    def test_non_divisible_by_leading_coefficient(self):
        with pytest.raises(InexactDivisionError):
            poly_exact_div(P(1, 1), P(1, 2))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(ONE, ZERO)

    @given(small_polys, small_polys.filter(lambda d: not d.is_zero()))
    def test_mul_then_divide(self, q, d):
        assert poly_exact_div(poly_mul(q, d), d) == q


class TestRingAxioms:
    @given(small_polys, small_polys, small_polys)
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)
        assert (p + q) + r == p + (q + r)

    @given(small_polys, small_polys)
    def test_commutative(self, p, q):
        assert p * q == q * p
        assert p + q == q + p

    @given(small_polys, small_polys, small_polys)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(small_polys, st.integers(-3, 3))
    def test_evaluation_is_a_homomorphism(self, p, v):
        q = P(2, -1, 1)
        assert (p * q)(v) == p(v) * q(v)


class TestSeries:
    def test_mul(self):
        assert series_mul(XSeries(P(1, 1), 2), XSeries(P(1, 1), 2)).poly == P(1, 2, 1)

    def test_mul_truncates(self):
        assert series_mul(XSeries(P(1, 1, 1), 2), XSeries(P(1, -1), 2)).poly == ONE

    def test_mul_brackets(self):
        s = series_mul(XSeries(bracket(1), 4), XSeries(bracket(2), 4))
        assert s.poly == P(1, -1, -1, 1)

    def test_construction_truncates(self):
        assert XSeries(P(1, 2, 3, 4), 1).poly == P(1, 2)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            series_mul(XSeries(ONE, 2), XSeries(ONE, 3))
        with pytest.raises(OrderMismatchError):
            XSeries(ONE, 2) + XSeries(ONE, 3)

    def test_index_beyond_order(self):
        with pytest.raises(IndexError):
            XSeries(ONE, 2)[3]

    def test_inverse_geometric(self):
        assert series_inverse(XSeries(bracket(1), 4)).poly == P(1, 1, 1, 1, 1)

    def test_inverse_of_one(self):
        assert series_inverse(XSeries(ONE, 3)).poly == ONE

    def test_inverse_bracket_factorial_counts_bounded_partitions(self):
        inv = series_inverse(XSeries(bracket(1) * bracket(2) * bracket(3), 5))
        expected = [count_bounded_partitions(n, 3) for n in range(6)]
        assert expected == [1, 1, 2, 3, 4, 5]
        assert inv.coefficients() == expected

    def test_inverse_negative_unit(self):
        s = XSeries(P(-1, 2, 5), 6)
        assert series_mul(s, series_inverse(s)).poly == ONE

    def test_inverse_non_unit(self):
        with pytest.raises(NonUnitError):
            series_inverse(XSeries(P(2, 1), 3))
        with pytest.raises(NonUnitError):
            series_inverse(XSeries(P(0, 1), 3))

    @settings(max_examples=60)
    @given(
        st.sampled_from([1, -1]),
        st.lists(st.integers(-4, 4), max_size=12),
        st.integers(0, 64),
    )
    def test_inverse_property(self, c0, tail, order):
        s = XSeries(IntPoly((c0, *tail)), order)
        assert series_mul(s, series_inverse(s)) == XSeries.one(order)

    @given(small_polys, small_polys, st.integers(0, 10))
    def test_truncation_coherence(self, p, q, order):
        full = poly_mul(p, q)
        assert series_mul(XSeries(p, order), XSeries(q, order)).poly == full.truncate(order)


def partitions_into_parts(n, k, max_part):
    """Partitions of n into exactly k parts, each <= max_part."""
    if k == 0:
        return 1 if n == 0 else 0
    return sum(partitions_into_parts(n - p, k - 1, p) for p in range(1, min(n, max_part) + 1))


class TestASeries:
    def test_mul(self):
        one_plus_a = ASeries.from_polys([ONE, ONE], 2, 3)
        sq = aseries_mul(one_plus_a, one_plus_a)
        assert [s.poly for s in sq.coeffs] == [ONE, P(2), ONE]

    def test_mul_truncates_in_a(self):
        one_plus_a = ASeries.from_polys([ONE, ONE], 1, 3)
        sq = aseries_mul(one_plus_a, one_plus_a)
        assert [s.poly for s in sq.coeffs] == [ONE, P(2)]

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            aseries_mul(ASeries.one(2, 3), ASeries.one(1, 3))
        with pytest.raises(OrderMismatchError):
            aseries_mul(ASeries.one(2, 3), ASeries.one(2, 4))
        with pytest.raises(OrderMismatchError):
            ASeries((XSeries(ONE, 2),), 3, 1)

    def test_euler_lhs_product(self):
        # prod_{m<=4} 1/(1 - a x^m), each factor sum_j a^j x^{mj}
        A, N = 2, 4
        acc = ASeries.one(A, N)
        for m in range(1, N + 1):
            factor = ASeries.from_polys([IntPoly.monomial(m * j) for j in range(A + 1)], A, N)
            acc = aseries_mul(acc, factor)
        for j in range(A + 1):
            for i in range(N + 1):
                assert acc.coefficient(i, j) == partitions_into_parts(i, j, N)
        # a^2: x^2/((1-x)(1-x^2)) = x^2 + x^3 + 2x^4 + ...
        assert acc[2].poly == P(0, 0, 1, 1, 2)

    @given(
        st.lists(small_polys, min_size=1, max_size=4),
        st.lists(small_polys, min_size=1, max_size=4),
        st.integers(0, 3),
    )
    def test_a_truncation_coherence(self, ps, qs, A):
        N = 6
        lo = aseries_mul(ASeries.from_polys(ps, A, N), ASeries.from_polys(qs, A, N))
        hi = aseries_mul(ASeries.from_polys(ps, A + 1, N), ASeries.from_polys(qs, A + 1, N))
        assert lo.coeffs == hi.coeffs[: A + 1]

    def test_first_difference(self):
        p = ASeries.from_polys([ONE, P(0, 1, 2)], 1, 3)
        q = ASeries.from_polys([ONE, P(0, 1, 3)], 1, 3)
        assert p.first_difference(p) is None
        assert p.first_difference(q) == (1, 2)


class TestTextForm:
    @pytest.mark.parametrize(
        "coeffs, text",
        [
            ((), "0"),
            ((1,), "1"),
            ((-3,), "-3"),
            ((1, 0, 1, 2, 1, 0, 1), "1 + x^2 + 2*x^3 + x^4 + x^6"),
            ((1, -1, -1, 1), "1 - x - x^2 + x^3"),
            ((0, -2), "-2*x"),
            ((0, 0, 1, 4, 1), "x^2 + 4*x^3 + x^4"),
        ],
    )
    def test_format(self, coeffs, text):
        assert format_poly(IntPoly(coeffs)) == text
        assert parse_poly(text) == IntPoly(coeffs)

    @given(st.lists(st.integers(-10**30, 10**30), max_size=12))
    def test_round_trip(self, c):
        p = IntPoly(tuple(c))
        assert parse_poly(format_poly(p)) == p

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_poly("1 + y")
        with pytest.raises(ValueError):
            parse_poly("1 +")
