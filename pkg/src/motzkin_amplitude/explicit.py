"""Closed-form class counts as alternating sums of trinomial coefficients.

The building block is the kernel

    K(n, a) = [z^n] (1+v+v^2)(1-v^-2) v^a / (1-v^a),   z = v / (1+v+v^2),

which equals ``-sum_{k>=1} (T(n, n+2-ka) - 2 T(n, n-ka) + T(n, n-2-ka))``
with ``T(n, j) = [t^j](1+t+t^2)^n``. Every class count is a difference of
two kernels.
"""
from __future__ import annotations

from typing import Optional

from .numerics import TrinomialRow, trinomial_row

__all__ = [
    "kernel_coeff",
    "class_coeff_explicit",
    "height_coeff_explicit",
    "class_counts_explicit",
]


def kernel_coeff(n: int, a: int, row: Optional[TrinomialRow] = None) -> int:
    """Kernel coefficient ``K(n, a)``; zero once ``a > n + 2``."""
    if a < 1:
        raise ValueError("a must be positive")
    if row is None:
        row = trinomial_row(n)
    elif row.n != n:
        raise ValueError(f"row is for n={row.n}, expected n={n}")
    total = 0
    ka = a
    while ka <= n + 2:
        total += row[n + 2 - ka] - 2 * row[n - ka] + row[n - 2 - ka]
        ka += a
    return -total


def class_coeff_explicit(
    n: int, h: int, horizontal_at_max: bool, row: Optional[TrinomialRow] = None
) -> int:
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    if row is None:
        row = trinomial_row(n)
    if horizontal_at_max:
        return kernel_coeff(n, 2 * h + 4, row) - kernel_coeff(n, 2 * h + 3, row)
    return kernel_coeff(n, 2 * h + 3, row) - kernel_coeff(n, 2 * h + 2, row)


def height_coeff_explicit(n: int, h: int, row: Optional[TrinomialRow] = None) -> int:
    """Number of length-``n`` paths of height exactly ``h``."""
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    if row is None:
        row = trinomial_row(n)
    return kernel_coeff(n, 2 * h + 4, row) - kernel_coeff(n, 2 * h + 2, row)


def class_counts_explicit(n: int) -> list[tuple[int, int]]:
    """``[(horiz_h, no_horiz_h) for h in 0..n//2]`` from one trinomial row.

    Each kernel value is computed once and shared between neighbouring
    cells, which keeps the whole sweep at O(n log n) big-int additions.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = trinomial_row(n)
    top = n // 2
    kern = {a: kernel_coeff(n, a, row) for a in range(2, 2 * top + 5)}
    return [
        (kern[2 * h + 4] - kern[2 * h + 3], kern[2 * h + 3] - kern[2 * h + 2])
        for h in range(top + 1)
    ]
