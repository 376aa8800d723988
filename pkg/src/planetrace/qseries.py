"""Cayley brackets, bracket factorials and Gaussian binomial polynomials.

``bracket(m)`` is ``1 - x**m``; ``bracket_factorial(m)`` is the product of
the first ``m`` brackets.  Gaussian binomials are built two ways -- by exact
division of bracket factorials and by the division-free q-Pascal rule -- so
each can check the other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .polycore import ONE, IntPoly, XSeries, poly_exact_div, poly_mul


def bracket(m: int) -> IntPoly:
    if m < 1:
        raise ValueError(f"bracket index must be >= 1, got {m}")
    return IntPoly((1,) + (0,) * (m - 1) + (-1,))


@lru_cache(maxsize=None)
def _bracket_factorial(m: int) -> IntPoly:
    if m == 0:
        return ONE
    return poly_mul(_bracket_factorial(m - 1), bracket(m))


def bracket_factorial(m: int) -> IntPoly:
    """``(1 - x)(1 - x**2)...(1 - x**m)``; the empty product is 1."""
    if m < 0:
        raise ValueError(f"bracket factorial of negative {m}")
    return _bracket_factorial(m)


def bracket_range(lo: int, hi: int) -> IntPoly:
    """Product of brackets ``lo..hi`` inclusive, 1 when ``lo > hi``."""
    acc = ONE
    for m in range(max(lo, 1), hi + 1):
        acc = poly_mul(acc, bracket(m))
    return acc


@dataclass(frozen=True)
class GaussianBinomial:
    n: int
    k: int
    poly: IntPoly

    @property
    def degree(self):
        return self.poly.degree

    def is_palindromic(self) -> bool:
        c = self.poly.coeffs
        return c == c[::-1]


def _check_nk(n: int, k: int):
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be nonnegative, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")


def gauss_binom(n: int, k: int) -> GaussianBinomial:
    """Gaussian binomial ``[n, k]`` via exact division of bracket factorials."""
    _check_nk(n, k)
    den = poly_mul(bracket_factorial(k), bracket_factorial(n - k))
    return GaussianBinomial(n, k, poly_exact_div(bracket_factorial(n), den))


def gauss_binom_ratio(n: int, k: int) -> IntPoly:
    """Same polynomial as the quotient ``<n-k+1>...<n> / <1>...<k>``."""
    _check_nk(n, k)
    return poly_exact_div(bracket_range(n - k + 1, n), bracket_factorial(k))


_PASCAL_ROWS: list[tuple[IntPoly, ...]] = [(ONE,)]
_PASCAL_LOCK = threading.Lock()


def gauss_binom_pascal(n: int, k: int) -> IntPoly:
    """Division-free construction: ``[n,k] = [n-1,k-1] + x**k [n-1,k]``."""
    _check_nk(n, k)
    rows = _PASCAL_ROWS
    with _PASCAL_LOCK:
        while len(rows) <= n:
            prev = rows[-1]
            m = len(rows)
            inner = tuple(prev[j - 1] + prev[j].shift(j) for j in range(1, m))
            rows.append((ONE,) + inner + (ONE,))
    return rows[n][k]


def divide_by_bracket(coeffs: list[int], m: int, times: int = 1) -> None:
    """Multiply the truncated series ``coeffs`` by ``(1 - x**m)**-times`` in place."""
    size = len(coeffs)
    for _ in range(times):
        for start in range(m, size, m):
            stop = min(start + m, size)
            coeffs[start:stop] = [u + v for u, v in zip(coeffs[start:stop], coeffs[start - m : stop - m])]


def reciprocal_bracket_product(exponents, order: int) -> XSeries:
    """``prod_m (1 - x**m)**-exponents(m)`` for ``m = 1..order``, mod ``x**(order+1)``."""
    coeffs = [1] + [0] * order
    for m in range(1, order + 1):
        e = exponents(m)
        if e:
            divide_by_bracket(coeffs, m, e)
    return XSeries(IntPoly(tuple(coeffs)), order)
