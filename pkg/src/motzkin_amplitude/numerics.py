"""Exact integer arithmetic: dense polynomials, truncated power series,
trinomial coefficients and Motzkin numbers.

Everything here works on Python ints, so counts never overflow.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "PolynomialZ",
    "TruncatedSeries",
    "TrinomialRow",
    "trinomial_row",
    "trinomial",
    "poly_mul",
    "series_div",
    "motzkin_number",
]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PolynomialZ:
    """Dense polynomial in ``z``; ``coefficients[i]`` multiplies ``z**i``.

    Trailing zeros are stripped on construction, so the zero polynomial is
    stored as an empty tuple.
    """

    coefficients: tuple[int, ...] = ()

    def __init__(self, coefficients: Iterable[int] = ()):
        object.__setattr__(self, "coefficients", _strip(int(c) for c in coefficients))

    @classmethod
    def z(cls) -> "PolynomialZ":
        return cls((0, 1))

    @classmethod
    def one(cls) -> "PolynomialZ":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __add__(self, other: "PolynomialZ") -> "PolynomialZ":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolynomialZ(out)

    def __neg__(self) -> "PolynomialZ":
        return PolynomialZ(-c for c in self.coefficients)

    def __sub__(self, other: "PolynomialZ") -> "PolynomialZ":
        return self + (-other)

    def __mul__(self, other: Union["PolynomialZ", int]) -> "PolynomialZ":
        if isinstance(other, int):
            return PolynomialZ(other * c for c in self.coefficients)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PolynomialZ":
        """Multiply by ``z**k`` (k >= 0)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coefficients:
            return self
        return PolynomialZ((0,) * k + self.coefficients)

    def to_series(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coefficients(self.coefficients, order)

    def __repr__(self) -> str:
        return f"PolynomialZ({list(self.coefficients)})"


def poly_mul(a: PolynomialZ, b: PolynomialZ) -> PolynomialZ:
    """Exact schoolbook product of two dense polynomials."""
    ac, bc = a.coefficients, b.coefficients
    if not ac or not bc:
        return PolynomialZ()
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x == 0:
            continue
        for j, y in enumerate(bc):
            out[i + j] += x * y
    return PolynomialZ(out)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in ``z`` known modulo ``z**(order + 1)``."""

    order: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients,"
                f" got {len(self.coefficients)}"
            )

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], order: int) -> "TruncatedSeries":
        """Truncate or zero-pad ``coeffs`` to ``order + 1`` entries."""
        c = [int(x) for x in coeffs[: order + 1]]
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    @classmethod
    def constant(cls, value: int, order: int) -> "TruncatedSeries":
        return cls.from_coefficients((value,), order)

    def __getitem__(self, n: int) -> int:
        if 0 <= n <= self.order:
            return self.coefficients[n]
        if n < 0:
            return 0
        raise IndexError(f"coefficient z^{n} lies beyond truncation order {self.order}")

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(order, self.coefficients[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            n, tuple(x + y for x, y in zip(self.coefficients[: n + 1], other.coefficients))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(self.order, tuple(other * c for c in self.coefficients))
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [0] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if x == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += x * b[j]
        return TruncatedSeries(n, tuple(out))

    __rmul__ = __mul__


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``num / den`` to order ``min(num.order, den.order)``.

    The constant term of ``den`` must be +1 or -1 so the quotient stays
    integral; anything else raises ``ValueError``.
    """
    c0 = den.coefficients[0]
    if c0 not in (1, -1):
        raise ValueError(f"denominator constant term must be +-1, got {c0}")
    n = min(num.order, den.order)
    d = list(_strip(den.coefficients[: n + 1]))
    q = [0] * (n + 1)
    for i in range(n + 1):
        acc = num.coefficients[i]
        for j in range(1, min(i, len(d) - 1) + 1):
            acc -= d[j] * q[i - j]
        q[i] = acc * c0
    return TruncatedSeries(n, tuple(q))


@dataclass(frozen=True)
class TrinomialRow:
    """Row ``n`` of trinomial coefficients: ``values[k] = [t^k](1+t+t^2)^n``."""

    n: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if 0 <= k <= 2 * self.n:
            return self.values[k]
        return 0


_ROW_CACHE_SIZE = 64
_row_cache: "OrderedDict[int, tuple[int, ...]]" = OrderedDict()
_row_lock = threading.Lock()


def _half_row_from(start: int, half: list[int], n: int) -> list[int]:
    # half holds indices 0..m of row m; row m is symmetric about m
    for m in range(start, n):
        ext = half + [half[m - 1] if m >= 1 else 0]
        half = [x + y + w for x, y, w in zip(ext, [0] + ext, [0, 0] + ext)]
    return half


def trinomial_row(n: int) -> TrinomialRow:
    """Coefficients of ``(1+t+t^2)**n``.

    Built with the additive recurrence
    ``row_n[k] = row_{n-1}[k-2] + row_{n-1}[k-1] + row_{n-1}[k]``, resuming
    from the nearest cached lower row. Recently used rows are kept in a
    small LRU cache.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _row_lock:
        hit = _row_cache.get(n)
        if hit is not None:
            _row_cache.move_to_end(n)
            return TrinomialRow(n, hit)
        below = [m for m in _row_cache if m < n]
        start = max(below) if below else 0
        seed = list(_row_cache[start][: start + 1]) if below else [1]
    half = _half_row_from(start, seed, n)
    values = tuple(half + half[-2::-1])
    with _row_lock:
        _row_cache[n] = values
        _row_cache.move_to_end(n)
        while len(_row_cache) > _ROW_CACHE_SIZE:
            _row_cache.popitem(last=False)
    return TrinomialRow(n, values)


def trinomial(n: int, k: int) -> int:
    """``[t^k](1+t+t^2)^n``; zero outside ``0 <= k <= 2n``."""
    if k < 0 or k > 2 * n:
        return 0
    return trinomial_row(n)[k]


_motzkin: list[int] = [1, 1]
_motzkin_lock = threading.Lock()


def motzkin_number(n: int) -> int:
    """n-th Motzkin number from ``(n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _motzkin_lock:
        m = _motzkin
        while len(m) <= n:
            k = len(m)
            q, r = divmod((2 * k + 1) * m[k - 1] + 3 * (k - 1) * m[k - 2], k + 2)
            if r:
                raise ArithmeticError(f"inexact division in Motzkin recurrence at n={k}")
            m.append(q)
        return m[n]
