"""Exact dense polynomials and truncated power series over Python ints.

Three value types live here:

* :class:`IntPoly`  -- a polynomial in ``x`` with integer coefficients,
  stored ascending and always in canonical form (no trailing zeros).
* :class:`XSeries`  -- an ``IntPoly`` read modulo ``x**(order + 1)``.
* :class:`ASeries`  -- a polynomial in a second variable ``a`` whose
  coefficients are ``XSeries`` sharing one x-order.

Everything is immutable.  Mixing truncation orders raises
:class:`OrderMismatchError` instead of silently dropping precision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


class InexactDivisionError(ArithmeticError):
    """A polynomial division left a nonzero remainder."""


class NonUnitError(ArithmeticError):
    """Series inversion was asked for a series whose constant term is not +-1."""


class _NegInfinity:
    """Degree of the zero polynomial.  Compares below every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"

    def __reduce__(self):
        return (_NegInfinity, ())


NEG_INFINITY = _NegInfinity()


def _canon(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, tuple) or (c and c[-1] == 0):
            object.__setattr__(self, "coeffs", _canon(c))
        for v in self.coeffs:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")

    # construction helpers

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> IntPoly:
        if d < 0:
            raise ValueError("negative exponent")
        return cls((0,) * d + (c,))

    # queries

    @property
    def degree(self):
        """Degree as an int, or ``NEG_INFINITY`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def valuation(self):
        """Lowest exponent with a nonzero coefficient (``None`` for zero)."""
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> int:
        if d < 0:
            raise IndexError(d)
        return self.coeffs[d] if d < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, d: int) -> IntPoly:
        """Multiply by ``x**d``."""
        if d < 0:
            raise ValueError("negative shift")
        if not self.coeffs or d == 0:
            return self
        return IntPoly((0,) * d + self.coeffs)

    def truncate(self, order: int) -> IntPoly:
        """Drop every term of degree above ``order``."""
        if len(self.coeffs) <= order + 1:
            return self
        return IntPoly(self.coeffs[: order + 1])

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"


ZERO = IntPoly(())
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(_canon(out))


def _mul_coeffs(a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    """Schoolbook product, optionally keeping only degrees <= limit.

    The operand with fewer nonzero terms drives the outer loop, so a sparse
    factor such as ``1 - x**m`` costs O(len(other)).
    """
    if not a or not b:
        return []
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit + 1)
    out = [0] * size
    lb = len(b)
    for i, ai in enumerate(a):
        if i >= size:
            break
        if not ai:
            continue
        stop = min(lb, size - i)
        if ai == 1:
            for j in range(stop):
                out[i + j] += b[j]
        elif ai == -1:
            for j in range(stop):
                out[i + j] -= b[j]
        else:
            for j in range(stop):
                out[i + j] += ai * b[j]
    return out


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return IntPoly(_canon(_mul_coeffs(p.coeffs, q.coeffs)))


def poly_exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Return ``q`` with ``num == q * den``.

    Raises :class:`InexactDivisionError` if the remainder is nonzero and
    :class:`ZeroDivisionError` if ``den`` is zero.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return ZERO
    d = den.coeffs
    lead = d[-1]
    dd = len(d) - 1
    r = list(num.coeffs)
    qlen = len(r) - dd
    if qlen <= 0:
        raise InexactDivisionError(f"{format_poly(num)} is not divisible by {format_poly(den)}")
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        top = r[k + dd]
        if not top:
            continue
        c, rem = divmod(top, lead)
        if rem:
            raise InexactDivisionError(f"{format_poly(num)} is not divisible by {format_poly(den)}")
        q[k] = c
        for j, dj in enumerate(d):
            if dj:
                r[k + j] -= c * dj
    if any(r[:dd]):
        raise InexactDivisionError(f"{format_poly(num)} is not divisible by {format_poly(den)}")
    return IntPoly(_canon(q))


def eval_at_one(p: IntPoly) -> int:
    return sum(p.coeffs)


# -- text form ---------------------------------------------------------------


def _mono(d: int) -> str:
    if d == 0:
        return ""
    return "x" if d == 1 else f"x^{d}"


def format_poly(p: IntPoly) -> str:
    """Render ``p`` ascending, e.g. ``1 + x^2 + 2*x^3 - x^4``."""
    parts: list[str] = []
    for d, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif mag == 1:
            body = _mono(d)
        else:
            body = f"{mag}*{_mono(d)}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


def parse_poly(text: str) -> IntPoly:
    """Inverse of :func:`format_poly`."""
    s = text.strip()
    if s == "0":
        return ZERO
    tokens = s.split()
    if not tokens:
        raise ValueError("empty polynomial text")
    sign = 1
    first = tokens[0]
    if first.startswith("-"):
        sign, first = -1, first[1:]
    terms = [(sign, first)]
    rest = tokens[1:]
    if len(rest) % 2:
        raise ValueError(f"malformed polynomial text: {text!r}")
    for op, tok in zip(rest[::2], rest[1::2]):
        if op not in "+-":
            raise ValueError(f"malformed polynomial text: {text!r}")
        terms.append((1 if op == "+" else -1, tok))
    acc: dict[int, int] = {}
    for sgn, tok in terms:
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"bad term {tok!r} in {text!r}")
        if m.group(3) is not None:
            d, c = 0, int(m.group(3))
        else:
            c = int(m.group(1)) if m.group(1) else 1
            d = int(m.group(2)) if m.group(2) else 1
        acc[d] = acc.get(d, 0) + sgn * c
    coeffs = [0] * (max(acc) + 1)
    for d, c in acc.items():
        coeffs[d] = c
    return IntPoly(_canon(coeffs))


# -- truncated series --------------------------------------------------------


@dataclass(frozen=True)
class XSeries:
    poly: IntPoly
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if not isinstance(self.poly, IntPoly):
            object.__setattr__(self, "poly", IntPoly(tuple(self.poly)))
        object.__setattr__(self, "poly", self.poly.truncate(self.order))

    @classmethod
    def one(cls, order: int) -> XSeries:
        return cls(ONE, order)

    @classmethod
    def zero(cls, order: int) -> XSeries:
        return cls(ZERO, order)

    def __getitem__(self, d: int) -> int:
        if d > self.order:
            raise IndexError(f"x^{d} is beyond truncation order {self.order}")
        return self.poly[d]

    def coefficients(self) -> list[int]:
        """All ``order + 1`` coefficients, zero-padded."""
        c = list(self.poly.coeffs)
        return c + [0] * (self.order + 1 - len(c))

    def _check(self, other: XSeries):
        if not isinstance(other, XSeries):
            raise TypeError(f"expected XSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return XSeries(self.poly + other.poly, self.order)

    def __sub__(self, other):
        self._check(other)
        return XSeries(self.poly - other.poly, self.order)

    def __neg__(self):
        return XSeries(-self.poly, self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return XSeries(self.poly * other, self.order)
        return series_mul(self, other)

    def shift(self, d: int) -> XSeries:
        return XSeries(self.poly.truncate(self.order - d).shift(d) if d <= self.order else ZERO, self.order)

    def __str__(self):
        return f"{format_poly(self.poly)} + O(x^{self.order + 1})"


def series_mul(p: XSeries, q: XSeries) -> XSeries:
    p._check(q)
    return XSeries(IntPoly(_canon(_mul_coeffs(p.poly.coeffs, q.poly.coeffs, p.order))), p.order)


def series_inverse(p: XSeries) -> XSeries:
    """Reciprocal of ``p`` modulo ``x**(order+1)``; needs constant term +-1."""
    c = p.coefficients()
    c0 = c[0]
    if c0 not in (1, -1):
        raise NonUnitError(f"constant term {c0} is not a unit")
    n = p.order
    support = [(j, cj) for j, cj in enumerate(c) if j and cj]
    inv = [0] * (n + 1)
    inv[0] = c0
    for k in range(1, n + 1):
        acc = 0
        for j, cj in support:
            if j > k:
                break
            acc += cj * inv[k - j]
        # c0 is its own inverse
        inv[k] = -acc * c0
    return XSeries(IntPoly(_canon(inv)), n)


# -- bivariate series --------------------------------------------------------


@dataclass(frozen=True)
class ASeries:
    """Polynomial in ``a`` (degree <= a_order) with XSeries coefficients."""

    coeffs: tuple[XSeries, ...]
    x_order: int
    a_order: int

    def __post_init__(self):
        c = tuple(self.coeffs)
        if len(c) > self.a_order + 1:
            c = c[: self.a_order + 1]
        c = c + tuple(XSeries.zero(self.x_order) for _ in range(self.a_order + 1 - len(c)))
        for s in c:
            if s.order != self.x_order:
                raise OrderMismatchError(f"a-coefficient has x-order {s.order}, expected {self.x_order}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls, a_order: int, x_order: int) -> ASeries:
        return cls((XSeries.one(x_order),), x_order, a_order)

    @classmethod
    def from_polys(cls, polys: Sequence[IntPoly], a_order: int, x_order: int) -> ASeries:
        return cls(tuple(XSeries(p, x_order) for p in polys[: a_order + 1]), x_order, a_order)

    def __getitem__(self, j: int) -> XSeries:
        return self.coeffs[j]

    def coefficient(self, x_deg: int, a_deg: int) -> int:
        return self.coeffs[a_deg][x_deg]

    def __mul__(self, other):
        return aseries_mul(self, other)

    def first_difference(self, other: ASeries):
        """First ``(a_deg, x_deg)`` where the two series differ, else ``None``."""
        if (self.x_order, self.a_order) != (other.x_order, other.a_order):
            raise OrderMismatchError("cannot compare series with different orders")
        for j, (s, t) in enumerate(zip(self.coeffs, other.coeffs)):
            if s != t:
                for d in range(self.x_order + 1):
                    if s[d] != t[d]:
                        return j, d
        return None

    def specialize_a(self, value: int = 1) -> XSeries:
        """Substitute a number for ``a`` and sum the x-series."""
        acc = [0] * (self.x_order + 1)
        w = 1
        for s in self.coeffs:
            for d, c in enumerate(s.poly.coeffs):
                acc[d] += w * c
            w *= value
        return XSeries(IntPoly(_canon(acc)), self.x_order)


def aseries_mul(p: ASeries, q: ASeries) -> ASeries:
    """Cauchy product in ``a``; each coefficient product is a series_mul."""
    if (p.a_order, p.x_order) != (q.a_order, q.x_order):
        raise OrderMismatchError(
            f"(a_order, x_order) differ: {(p.a_order, p.x_order)} vs {(q.a_order, q.x_order)}"
        )
    A, N = p.a_order, p.x_order
    out = []
    for n in range(A + 1):
        acc = [0] * (N + 1)
        for i in range(n + 1):
            pi, qj = p.coeffs[i].poly.coeffs, q.coeffs[n - i].poly.coeffs
            if not pi or not qj:
                continue
            for d, c in enumerate(_mul_coeffs(pi, qj, N)):
                acc[d] += c
        out.append(XSeries(IntPoly(_canon(acc)), N))
    return ASeries(tuple(out), N, A)
