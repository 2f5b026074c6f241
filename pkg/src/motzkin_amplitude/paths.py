"""Ground truth for Motzkin path counts.

Two independent routes: literal enumeration of step sequences (small n),
and a bounded-altitude dynamic program that tracks the number of prefixes
ending at each level.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Step",
    "MotzkinPath",
    "PathProfile",
    "ClassCount",
    "BRUTE_FORCE_MAX",
    "profile",
    "enumerate_all",
    "dp_count_bounded",
    "dp_count_bounded_no_horiz",
    "dp_counts_upto",
    "class_count_oracle",
    "class_table_dp",
]

BRUTE_FORCE_MAX = 16


class Step(enum.IntEnum):
    UP = 1
    DOWN = -1
    LEVEL = 0


def _check(steps: Sequence[int]) -> None:
    alt = 0
    for i, s in enumerate(steps):
        alt += s
        if alt < 0:
            raise ValueError(f"path dips below the axis after step {i}")
    if alt != 0:
        raise ValueError(f"path ends at altitude {alt}, not 0")


@dataclass(frozen=True)
class MotzkinPath:
    steps: tuple[Step, ...]

    def __init__(self, steps: Iterable[int | Step] = ()):
        steps = tuple(Step(s) for s in steps)
        _check(steps)
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "".join({Step.UP: "U", Step.DOWN: "D", Step.LEVEL: "L"}[s] for s in self.steps)


@dataclass(frozen=True)
class PathProfile:
    length: int
    height: int
    horizontal_at_max: bool

    @property
    def amplitude(self) -> int:
        return 2 * self.height + (1 if self.horizontal_at_max else 0)


@dataclass(frozen=True)
class ClassCount:
    length: int
    height: int
    horizontal_at_max: bool
    count: int

    @property
    def amplitude(self) -> int:
        return 2 * self.height + (1 if self.horizontal_at_max else 0)


def profile(path: MotzkinPath | Sequence[int]) -> PathProfile:
    """Height, horizontal-at-max flag and amplitude of a path.

    Raw step sequences are validated first. The empty path has height 0
    and no horizontal step, hence amplitude 0.
    """
    if not isinstance(path, MotzkinPath):
        path = MotzkinPath(path)
    alt = height = 0
    level_at: set[int] = set()
    for s in path.steps:
        if s == Step.LEVEL:
            level_at.add(alt)
        alt += s
        height = max(height, alt)
    return PathProfile(len(path), height, height in level_at)


def enumerate_all(n: int) -> Iterator[MotzkinPath]:
    """Every Motzkin path of length ``n``, by filtering all ``3**n`` words."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > BRUTE_FORCE_MAX:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_MAX}, got {n}")
    for word in itertools.product((Step.UP, Step.LEVEL, Step.DOWN), repeat=n):
        alt = 0
        for s in word:
            alt += s
            if alt < 0:
                break
        else:
            if alt == 0:
                yield MotzkinPath(word)


def dp_counts_upto(max_n: int, h: int, level_at_top: bool = True) -> list[int]:
    """Counts of paths of every length ``0..max_n`` that stay within ``[0, h]``.

    With ``level_at_top=False`` a Level step at altitude ``h`` is forbidden.
    Entry ``n`` of the result is ``[z^n]`` of the corresponding bounded
    generating function.
    """
    if max_n < 0 or h < 0:
        raise ValueError("max_n and h must be nonnegative")
    f = [1] + [0] * h
    out = [1]
    for _ in range(max_n):
        g = [0] * (h + 1)
        for i in range(h + 1):
            acc = f[i]
            if i > 0:
                acc += f[i - 1]
            if i < h:
                acc += f[i + 1]
            g[i] = acc
        if not level_at_top:
            g[h] -= f[h]
        f = g
        out.append(f[0])
    return out


def dp_count_bounded(n: int, h: int) -> int:
    """Motzkin paths of length ``n`` never rising above altitude ``h``."""
    return dp_counts_upto(n, h)[n]


def dp_count_bounded_no_horiz(n: int, h: int) -> int:
    """As :func:`dp_count_bounded`, but with no Level step taken at altitude ``h``."""
    return dp_counts_upto(n, h, level_at_top=False)[n]


def class_count_oracle(n: int, h: int, horizontal_at_max: bool) -> ClassCount:
    """Count of height-``h`` paths of length ``n`` in the given class, via DP differences."""
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    no_horiz = dp_count_bounded_no_horiz(n, h)
    if horizontal_at_max:
        count = dp_count_bounded(n, h) - no_horiz
    else:
        # no path, not even the empty one, stays below altitude 0
        below = dp_count_bounded(n, h - 1) if h > 0 else 0
        count = no_horiz - below
    return ClassCount(n, h, horizontal_at_max, count)


def class_table_dp(max_n: int) -> list[list[tuple[int, int]]]:
    """``table[n][h] = (horiz, no_horiz)`` for all ``n <= max_n``, ``h <= n // 2``.

    One DP run per bound serves every length at once.
    """
    table: list[list[tuple[int, int]]] = [[] for _ in range(max_n + 1)]
    below = [0] * (max_n + 1)
    for h in range(max_n // 2 + 1):
        full = dp_counts_upto(max_n, h)
        capped = dp_counts_upto(max_n, h, level_at_top=False)
        for n in range(2 * h, max_n + 1):
            table[n].append((full[n] - capped[n], capped[n] - below[n]))
        below = full
    return table
