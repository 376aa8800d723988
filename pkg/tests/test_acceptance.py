"""Acceptance gate: one test per exit criterion, all exact except no. 9.

Run ``pytest tests/test_acceptance.py`` to see the per-criterion summary.
"""

import math
import time
import warnings
from math import comb

import pytest

from planetrace.asymptotics import log_ratio
from planetrace.identities import (
    euler_partition_series,
    g_from_product,
    g_polynomials,
    h_from_product,
    h_polynomials,
    macmahon_series,
    trace_table,
    verify_euler_inverse,
    verify_euler_plus,
    verify_new,
    verify_stanley,
)
from planetrace.oracle import count_partitions, count_plane_partitions, trace_histogram
from planetrace.polycore import eval_at_one, parse_poly
from planetrace.qseries import gauss_binom, gauss_binom_pascal


@pytest.mark.criterion(1, "printed MacMahon coefficients 1,1,3,6,13,24 and pp(4) = 13")
def test_paper_coefficients():
    s = macmahon_series(5)
    assert s.coefficients() == [1, 1, 3, 6, 13, 24]
    assert s[4] == 13


@pytest.mark.criterion(2, "trace anchors c[4][2] = 6, c[5][2] = 10")
def test_trace_anchor():
    t = trace_table(5, 2)
    assert t[4][2] == 6
    assert t[5][2] == 10


@pytest.mark.criterion(3, "printed g_1..g_3 and h_1..h_5")
def test_printed_polynomials():
    g = g_polynomials(3)
    assert g[1] == parse_poly("1")
    assert g[2] == parse_poly("1 + x^2")
    assert g[3] == parse_poly("1 + x^2 + 2*x^3 + x^4 + x^6")
    h = h_polynomials(5)
    assert h[1] == parse_poly("1")
    assert h[2] == parse_poly("2*x")
    assert h[3] == parse_poly("1 + 4*x + x^2").shift(2)
    assert h[4] == parse_poly("3 + 4*x + 10*x^2 + 4*x^3 + 3*x^4").shift(4)
    assert h[5] == parse_poly("3 + 8*x + 15*x^2 + 20*x^3 + 28*x^4 + 20*x^5 + 15*x^6 + 8*x^7 + 3*x^8").shift(6)


@pytest.mark.criterion(4, "identity verification at A=8 (N=40, 60; Euler N=32) under one minute")
def test_identity_verification():
    start = time.perf_counter()
    for N in (40, 60):
        assert verify_stanley(8, N).passed
        assert verify_new(8, N).passed
    assert verify_euler_inverse(8, 32).passed
    assert verify_euler_plus(8, 32).passed
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(5, "oracle equivalence: traces n<=10, pp n<=12, p n<=20, under two minutes")
def test_oracle_equivalence():
    start = time.perf_counter()
    table = trace_table(10, 10)
    for n in range(11):
        hist = trace_histogram(n)
        assert set(hist) <= set(range(11))
        for j in range(11):
            assert hist.get(j, 0) == table[n][j]
    pp = macmahon_series(12)
    for n in range(13):
        assert count_plane_partitions(n) == pp[n]
    p = euler_partition_series(20)
    for n in range(21):
        assert count_partitions(n) == p[n]
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(6, "g_n (n<=15) and h_n (n<=12) equal their product extractions")
def test_dual_path_recursions():
    assert g_from_product(15).entries == g_polynomials(15).entries
    assert h_from_product(12).entries == h_polynomials(12).entries


@pytest.mark.criterion(7, "Gaussian binomials exhaustive for n<=20")
def test_gaussian_binomial_suite():
    for n in range(21):
        for k in range(n + 1):
            g = gauss_binom(n, k)
            assert g.poly == gauss_binom_pascal(n, k)
            assert g.poly == gauss_binom(n, n - k).poly
            assert g.is_palindromic()
            assert g.degree == k * (n - k)
            assert eval_at_one(g.poly) == comb(n, k)
            assert all(c >= 0 for c in g.poly.coeffs)


@pytest.mark.criterion(8, "g_n nonnegative for n<=15 (h_n observation reported, not fatal)")
def test_positivity():
    for n, p in enumerate(g_polynomials(15).entries):
        assert all(isinstance(c, int) and c >= 0 for c in p.coeffs), f"g_{n}"
    negative = [n for n, p in enumerate(h_polynomials(12).entries) if any(c < 0 for c in p.coeffs)]
    if negative:
        warnings.warn(f"h_n with negative coefficients: {negative}")
    print(f"h_n nonnegative for n<=12: {not negative}")


@pytest.mark.criterion(9, "|pp(n)/wright(n) - 1| strictly decreases over n = 100, 200, 400")
def test_asymptotic_ratio():
    pp = macmahon_series(400)
    errs = [abs(math.expm1(log_ratio(n, pp[n]))) for n in (100, 200, 400)]
    assert errs[0] > errs[1] > errs[2]
