"""Amplitude distribution, exact means and fractions, and their comparison
with the leading-order asymptotic laws.

Exact quantities are :class:`fractions.Fraction`; floats only appear in
:class:`AsymptoticReport`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .explicit import class_counts_explicit
from .numerics import motzkin_number

__all__ = [
    "Quantity",
    "AmplitudeDistribution",
    "AsymptoticReport",
    "amplitude_distribution",
    "mean_amplitude",
    "mean_height",
    "asymptotic_mean_amplitude",
    "horizontal_fraction",
    "asymptotic_report",
]


class Quantity(enum.Enum):
    MEAN_AMPLITUDE = "mean-amplitude"
    HORIZONTAL_FRACTION = "horizontal-fraction"


@dataclass(frozen=True)
class AmplitudeDistribution:
    length: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class AsymptoticReport:
    length: int
    quantity: Quantity
    exact_value: Fraction
    asymptotic_value: float
    ratio: float


def amplitude_distribution(n: int) -> AmplitudeDistribution:
    """Nonzero counts keyed by amplitude ``2h + 1`` (horizontal) or ``2h``."""
    counts: dict[int, int] = {}
    for h, (horiz, no_horiz) in enumerate(class_counts_explicit(n)):
        if no_horiz:
            counts[2 * h] = no_horiz
        if horiz:
            counts[2 * h + 1] = horiz
    return AmplitudeDistribution(n, counts)


def mean_amplitude(n: int) -> Fraction:
    if n < 1:
        raise ValueError("mean amplitude needs n >= 1")
    total = sum(
        (2 * h + 1) * horiz + 2 * h * no_horiz
        for h, (horiz, no_horiz) in enumerate(class_counts_explicit(n))
    )
    return Fraction(total, motzkin_number(n))


def mean_height(n: int) -> Fraction:
    if n < 1:
        raise ValueError("mean height needs n >= 1")
    total = sum(h * (a + b) for h, (a, b) in enumerate(class_counts_explicit(n)))
    return Fraction(total, motzkin_number(n))


def asymptotic_mean_amplitude(n: int) -> float:
    """Leading-order law ``2 * sqrt(pi * n / 3)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2.0 * math.sqrt(math.pi * n / 3.0)


def horizontal_fraction(n: int) -> Fraction:
    """Share of length-``n`` paths with a Level step on their maximal level."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    horiz = sum(a for a, _ in class_counts_explicit(n))
    return Fraction(horiz, motzkin_number(n))


def asymptotic_report(n: int, quantity: Quantity | str) -> AsymptoticReport:
    quantity = Quantity(quantity)
    if n < 1:
        raise ValueError("n must be positive")
    if quantity is Quantity.MEAN_AMPLITUDE:
        exact = mean_amplitude(n)
        predicted = asymptotic_mean_amplitude(n)
    else:
        exact = horizontal_fraction(n)
        predicted = 0.5
    return AsymptoticReport(n, quantity, exact, predicted, float(exact) / predicted)
