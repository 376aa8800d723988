"""Generating-function identities for partitions and plane partitions.

Each identity is expanded on both sides as a truncated bivariate series
in ``(x, a)`` and compared coefficient by coefficient:

* Euler:            prod 1/(1 - a x^m)    = sum x^n a^n / <1>..<n>
* Euler (plus):     prod (1 + a x^m)      = sum x^(n(n+1)/2) a^n / <1>..<n>
* Stanley (trace):  prod (1 - a x^m)^-m   = sum g_n x^n a^n / (<1>..<n>)^2
* new:              prod (1 + a x^m)^m    = sum h_n x^n a^n / (<1>..<n>)^2

where ``<m> = 1 - x^m``.  ``g_n`` and ``h_n`` come from the recursions in
:func:`g_polynomials` and :func:`h_polynomials`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Optional

from .oracle import TraceTable
from .polycore import (
    ONE,
    ASeries,
    IntPoly,
    XSeries,
    aseries_mul,
    poly_exact_div,
    poly_mul,
    series_inverse,
    series_mul,
)
from .qseries import bracket_factorial, bracket_range, gauss_binom, reciprocal_bracket_product


class IdentityViolation(AssertionError):
    """Both sides of an identity disagree at ``x^x_deg a^a_deg``."""

    def __init__(self, name: str, a_deg: int, x_deg: int, lhs: int, rhs: int):
        super().__init__(f"{name}: mismatch at x^{x_deg} a^{a_deg}: lhs={lhs}, rhs={rhs}")
        self.name = name
        self.a_deg = a_deg
        self.x_deg = x_deg
        self.lhs = lhs
        self.rhs = rhs


class TruncationError(ValueError):
    """The x-order is too small for a meaningful comparison."""


# -- one-variable products ---------------------------------------------------


def euler_partition_series(N: int) -> XSeries:
    """``prod 1/(1 - x^m)`` mod ``x^(N+1)``; coefficient n is p(n)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return reciprocal_bracket_product(lambda m: 1, N)


@lru_cache(maxsize=8)
def macmahon_series(N: int) -> XSeries:
    """``prod 1/(1 - x^m)^m`` mod ``x^(N+1)``; coefficient n is pp(n)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return reciprocal_bracket_product(lambda m: m, N)


# -- bivariate products ------------------------------------------------------


def _product(A: int, N: int, factor: Callable[[int, int], int], max_j: Callable[[int], int]) -> ASeries:
    """``prod_{m=1..N} sum_j factor(m, j) a^j x^(m j)`` truncated to (A, N)."""
    acc = ASeries.one(A, N)
    for m in range(1, N + 1):
        top = min(A, N // m, max_j(m))
        polys = [IntPoly.monomial(m * j, factor(m, j)) for j in range(top + 1)]
        acc = aseries_mul(acc, ASeries.from_polys(polys, A, N))
    return acc


def euler_inverse_lhs(A: int, N: int) -> ASeries:
    """``prod 1/(1 - a x^m)``, each factor expanded as a geometric series."""
    return _product(A, N, lambda m, j: 1, lambda m: A)


def euler_plus_lhs(A: int, N: int) -> ASeries:
    return _product(A, N, lambda m, j: 1, lambda m: 1)


def stanley_lhs(A: int, N: int) -> ASeries:
    """``prod (1 - a x^m)^-m``; the factor's a^j coefficient is C(m+j-1, j) x^(mj)."""
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    return _product(A, N, lambda m, j: comb(m + j - 1, j), lambda m: A)


def new_lhs(A: int, N: int) -> ASeries:
    """``prod (1 + a x^m)^m``; the factor's a^j coefficient is C(m, j) x^(mj)."""
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    return _product(A, N, lambda m, j: comb(m, j), lambda m: m)


def _quotient_series(numerators, powers, denominators, A: int, N: int) -> ASeries:
    """``sum_n numerators[n] x^powers[n] / denominators[n] a^n`` truncated to (A, N)."""
    out = []
    for n in range(A + 1):
        num = XSeries(numerators[n].shift(powers[n]), N)
        if num.poly.is_zero():
            out.append(num)
            continue
        out.append(series_mul(num, series_inverse(XSeries(denominators[n], N))))
    return ASeries(tuple(out), N, A)


def euler_inverse_rhs(A: int, N: int) -> ASeries:
    return _quotient_series([ONE] * (A + 1), list(range(A + 1)), [bracket_factorial(n) for n in range(A + 1)], A, N)


def euler_plus_rhs(A: int, N: int) -> ASeries:
    return _quotient_series(
        [ONE] * (A + 1), [n * (n + 1) // 2 for n in range(A + 1)], [bracket_factorial(n) for n in range(A + 1)], A, N
    )


def stanley_rhs(A: int, N: int) -> ASeries:
    g = g_polynomials(A)
    return _quotient_series(g.entries, list(range(A + 1)), [bracket_factorial(n) ** 2 for n in range(A + 1)], A, N)


def new_rhs(A: int, N: int) -> ASeries:
    h = h_polynomials(A)
    return _quotient_series(h.entries, list(range(A + 1)), [bracket_factorial(n) ** 2 for n in range(A + 1)], A, N)


def _checked(name: str, lhs: ASeries, rhs: ASeries) -> ASeries:
    diff = lhs.first_difference(rhs)
    if diff is not None:
        j, d = diff
        raise IdentityViolation(name, j, d, lhs.coefficient(d, j), rhs.coefficient(d, j))
    return lhs


def euler_inverse_product(A: int, N: int) -> ASeries:
    """Expand both sides of Euler's ``prod 1/(1 - a x^m)`` identity; raise on mismatch."""
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    return _checked("euler2", euler_inverse_lhs(A, N), euler_inverse_rhs(A, N))


def euler_plus_product(A: int, N: int) -> ASeries:
    """Expand both sides of Euler's ``prod (1 + a x^m)`` identity; raise on mismatch."""
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    return _checked("eulerplus", euler_plus_lhs(A, N), euler_plus_rhs(A, N))


# -- the two recursions ------------------------------------------------------


@dataclass(frozen=True)
class GnTable:
    entries: tuple[IntPoly, ...]

    def __getitem__(self, n: int) -> IntPoly:
        return self.entries[n]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class HnTable:
    entries: tuple[IntPoly, ...]

    def __getitem__(self, n: int) -> IntPoly:
        return self.entries[n]

    def __len__(self):
        return len(self.entries)


def _recursion_table(n_max: int, x_power: Callable[[int, int], int]) -> tuple[IntPoly, ...]:
    # t_n = sum_{k=1..n} [n,k] <n-k+1>..<n-1> t_{n-k} x^{x_power(n,k)}
    table = [ONE]
    for n in range(1, n_max + 1):
        acc = IntPoly()
        for k in range(1, n + 1):
            term = poly_mul(gauss_binom(n, k).poly, bracket_range(n - k + 1, n - 1))
            acc = acc + poly_mul(term, table[n - k]).shift(x_power(n, k))
        table.append(acc)
    return tuple(table)


@lru_cache(maxsize=None)
def g_polynomials(n_max: int) -> GnTable:
    """``g_0..g_n_max`` with ``g_n = sum_k [n,k] <n-k+1>..<n-1> g_{n-k} x^(n-k)``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return GnTable(_recursion_table(n_max, lambda n, k: n - k))


@lru_cache(maxsize=None)
def h_polynomials(n_max: int) -> HnTable:
    """``h_0..h_n_max`` with ``h_n = sum_k [n,k] <n-k+1>..<n-1> h_{n-k} x^(n-k + k(k-1)/2)``.

    The ``x^(n-k)`` factor is required: without it ``h_2`` comes out as
    ``1 + 2x - x^2`` instead of ``2x``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return HnTable(_recursion_table(n_max, lambda n, k: n - k + k * (k - 1) // 2))


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    a_order: int
    x_order: int
    passed: bool
    a_deg: Optional[int] = None
    x_deg: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "a_order": self.a_order,
            "x_order": self.x_order,
            "passed": self.passed,
            "mismatch": None
            if self.passed
            else {"a_deg": self.a_deg, "x_deg": self.x_deg, "lhs": str(self.lhs), "rhs": str(self.rhs)},
        }

    def __str__(self):
        head = f"{self.identity} A={self.a_order} N={self.x_order}: "
        if self.passed:
            return head + "pass"
        return head + f"FAIL at x^{self.x_deg} a^{self.a_deg} (lhs={self.lhs}, rhs={self.rhs})"


def _require_room(name: str, numerators, A: int, N: int):
    # every a^n term of the right side must keep at least its lowest x-power
    for n in range(1, A + 1):
        need = n + numerators[n].valuation
        if N < need:
            raise TruncationError(
                f"{name}: x-order N={N} truncates the whole a^{n} term (its lowest power is x^{need})"
            )


def _compare(name: str, lhs: ASeries, rhs: ASeries) -> VerificationReport:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return VerificationReport(name, lhs.a_order, lhs.x_order, True)
    j, d = diff
    return VerificationReport(name, lhs.a_order, lhs.x_order, False, j, d, lhs.coefficient(d, j), rhs.coefficient(d, j))


def verify_stanley(A: int, N: int) -> VerificationReport:
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    _require_room("stanley", g_polynomials(A).entries, A, N)
    return _compare("stanley", stanley_lhs(A, N), stanley_rhs(A, N))


def verify_new(A: int, N: int) -> VerificationReport:
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    _require_room("new", h_polynomials(A).entries, A, N)
    return _compare("new", new_lhs(A, N), new_rhs(A, N))


def verify_euler_inverse(A: int, N: int) -> VerificationReport:
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    return _compare("euler2", euler_inverse_lhs(A, N), euler_inverse_rhs(A, N))


def verify_euler_plus(A: int, N: int) -> VerificationReport:
    if A < 0 or N < 0:
        raise ValueError("A and N must be nonnegative")
    return _compare("eulerplus", euler_plus_lhs(A, N), euler_plus_rhs(A, N))


VERIFIERS = {
    "stanley": verify_stanley,
    "new": verify_new,
    "euler2": verify_euler_inverse,
    "eulerplus": verify_euler_plus,
}


# -- trace table and the second route to g_n, h_n ---------------------------


def trace_table(i_max: int, j_max: int) -> TraceTable:
    """``c[i][j]``: coefficient of ``x^i a^j`` in ``prod (1 - a x^m)^-m``."""
    if i_max < 0 or j_max < 0:
        raise ValueError("i_max and j_max must be nonnegative")
    lhs = stanley_lhs(j_max, i_max)
    return TraceTable(tuple(tuple(lhs.coefficient(i, j) for j in range(j_max + 1)) for i in range(i_max + 1)))


def _clear_denominators(series: XSeries, n: int) -> IntPoly:
    """``series * (<1>..<n>)^2 / x^n``, keeping degrees below ``order - n``."""
    cleared = series_mul(series, XSeries(bracket_factorial(n) ** 2, series.order)).poly
    return poly_exact_div(cleared, IntPoly.monomial(n))


def _extract(lhs_builder: Callable[[int, int], ASeries], n_max: int) -> tuple[IntPoly, ...]:
    # Grow N until each cleared a^n coefficient has at least n zero
    # coefficients below the truncation edge; only then is it a polynomial.
    N = max(4 * n_max, 8)
    while True:
        lhs = lhs_builder(n_max, N)
        out = []
        ok = True
        for n in range(n_max + 1):
            p = _clear_denominators(lhs[n], n)
            if not p.is_zero() and p.degree + 2 * n > N - n:
                ok = False
                break
            out.append(p)
        if ok:
            return tuple(out)
        N *= 2


def g_from_product(n_max: int) -> GnTable:
    """``g_0..g_n_max`` read off the product expansion by clearing denominators."""
    return GnTable(_extract(stanley_lhs, n_max))


def h_from_product(n_max: int) -> HnTable:
    return HnTable(_extract(new_lhs, n_max))
