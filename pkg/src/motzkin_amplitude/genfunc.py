"""Bounded-height generating functions as ratios of determinant polynomials.

``D_n`` is the determinant of the n x n tridiagonal system with diagonal
``1 - z`` and off-diagonals ``-z``; ``D*_n`` replaces the last diagonal entry
by ``1``. Then ``M^{<=h} = D_h / D_{h+1}`` and ``N^{<=h} = D*_h / D*_{h+1}``.
"""
from __future__ import annotations

import enum
import threading

from .numerics import PolynomialZ, TruncatedSeries, series_div

__all__ = [
    "Kind",
    "DeterminantFamily",
    "det_poly",
    "det_star_poly",
    "series_bounded",
    "series_bounded_no_horiz",
    "class_coeff_series",
    "class_table_series",
]

_ONE = PolynomialZ.one()
_ONE_MINUS_Z = PolynomialZ((1, -1))


class Kind(enum.Enum):
    STANDARD = "D"
    STARRED = "D*"


class DeterminantFamily:
    """Memoized ``D_0, D_1, ...`` (or the starred variant).

    Reads of an already-built prefix take no lock; extension is serialized.
    """

    def __init__(self, kind: Kind):
        self.kind = kind
        second = _ONE_MINUS_Z if kind is Kind.STANDARD else _ONE
        self._polys: list[PolynomialZ] = [_ONE, second]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> PolynomialZ:
        if n < 0:
            raise ValueError("n must be nonnegative")
        polys = self._polys
        if n < len(polys):
            return polys[n]
        with self._lock:
            while len(self._polys) <= n:
                k = len(self._polys)
                if self.kind is Kind.STANDARD:
                    p = _ONE_MINUS_Z * self._polys[k - 1] - self._polys[k - 2].shift(2)
                else:
                    p = _standard[k - 1] - _standard[k - 2].shift(2)
                self._polys.append(p)
            return self._polys[n]


_standard = DeterminantFamily(Kind.STANDARD)
_starred = DeterminantFamily(Kind.STARRED)


def det_poly(n: int) -> PolynomialZ:
    """``D_n``, via ``D_n = (1-z) D_{n-1} - z^2 D_{n-2}``."""
    return _standard[n]


def det_star_poly(n: int) -> PolynomialZ:
    """``D*_n = D_{n-1} - z^2 D_{n-2}``, with ``D*_0 = D*_1 = 1``."""
    return _starred[n]


def series_bounded(h: int, order: int) -> TruncatedSeries:
    """``M^{<=h}(z)`` to the given order.

    ``h = -1`` gives the zero series (``D_{-1} = 0``): even the empty path
    has height 0.
    """
    if h < -1:
        raise ValueError("h must be >= -1")
    if h == -1:
        return TruncatedSeries.constant(0, order)
    return series_div(det_poly(h).to_series(order), det_poly(h + 1).to_series(order))


def series_bounded_no_horiz(h: int, order: int) -> TruncatedSeries:
    """``N^{<=h}(z)``: height at most h, no Level step at altitude h."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    return series_div(det_star_poly(h).to_series(order), det_star_poly(h + 1).to_series(order))


def class_coeff_series(n: int, h: int, horizontal_at_max: bool) -> int:
    """``[z^n]`` of ``M^{<=h} - N^{<=h}`` (horizontal) or ``N^{<=h} - M^{<=h-1}``."""
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    capped = series_bounded_no_horiz(h, n)[n]
    if horizontal_at_max:
        return series_bounded(h, n)[n] - capped
    return capped - series_bounded(h - 1, n)[n]


def class_table_series(max_n: int) -> list[list[tuple[int, int]]]:
    """``table[n][h] = (horiz, no_horiz)`` for ``n <= max_n``, ``h <= n // 2``.

    Each series is expanded once to order ``max_n``; its prefix of order
    ``n`` is exactly the order-``n`` expansion.
    """
    table: list[list[tuple[int, int]]] = [[] for _ in range(max_n + 1)]
    below = series_bounded(-1, max_n)
    for h in range(max_n // 2 + 1):
        full = series_bounded(h, max_n)
        capped = series_bounded_no_horiz(h, max_n)
        for n in range(2 * h, max_n + 1):
            table[n].append((full[n] - capped[n], capped[n] - below[n]))
        below = full
    return table
