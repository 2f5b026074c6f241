"""Cross-method consistency suite behind ``motzkin-amplitude verify``.

Checks, in order, and stops at the first mismatch:

* the nine length-4 paths with their heights, flags and amplitudes;
* brute force = DP = series = explicit formula for every cell up to ``brute_max``;
* DP = series = explicit for every cell up to ``max_length``;
* ``horiz_h + no_horiz_h = M^{<=h} - M^{<=h-1}`` and cell sums against the
  Motzkin numbers.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import explicit, genfunc, paths
from .numerics import motzkin_number

# (steps, horizontal on maximal level, height, amplitude)
LENGTH_FOUR_TABLE = (
    ("LLLL", True, 0, 1),
    ("LLUD", False, 1, 2),
    ("UDUD", False, 1, 2),
    ("LULD", True, 1, 3),
    ("ULLD", True, 1, 3),
    ("ULDL", True, 1, 3),
    ("UDLL", False, 1, 2),
    ("LUDL", False, 1, 2),
    ("UUDD", False, 2, 4),
)


class VerificationError(AssertionError):
    pass


@dataclass
class VerifyResult:
    max_length: int
    brute_max: int
    cells_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise VerificationError(message)


def check_length_four_table() -> int:
    got = {str(p): paths.profile(p) for p in paths.enumerate_all(4)}
    _expect(len(got) == 9, f"expected 9 paths of length 4, enumerated {len(got)}")
    for word, flag, height, amp in LENGTH_FOUR_TABLE:
        prof = got.get(word)
        _expect(prof is not None, f"length-4 path {word} not enumerated")
        _expect(
            (prof.horizontal_at_max, prof.height, prof.amplitude) == (flag, height, amp),
            f"{word}: got {prof}, table says flag={flag} height={height} amplitude={amp}",
        )
    return len(LENGTH_FOUR_TABLE)


def _brute_force_cells(n: int) -> Counter:
    cells: Counter = Counter()
    for p in paths.enumerate_all(n):
        prof = paths.profile(p)
        cells[prof.height, prof.horizontal_at_max] += 1
    return cells


def run_verification(max_length: int, brute_max: int = 12) -> VerifyResult:
    if max_length < 0 or brute_max < 0:
        raise ValueError("lengths must be nonnegative")
    if brute_max > paths.BRUTE_FORCE_MAX:
        raise ValueError(f"brute_max must be <= {paths.BRUTE_FORCE_MAX}")
    result = VerifyResult(max_length, brute_max)
    try:
        result.cells_checked += check_length_four_table()
        dp = paths.class_table_dp(max_length)
        series = genfunc.class_table_series(max_length)
        bounded = [paths.dp_counts_upto(max_length, h) for h in range(max_length // 2 + 1)]
        for n in range(max_length + 1):
            exp = explicit.class_counts_explicit(n)
            brute = _brute_force_cells(n) if n <= brute_max else None
            for h in range(n // 2 + 1):
                for flag, idx in ((True, 0), (False, 1)):
                    where = f"n={n} h={h} {'horiz' if flag else 'no-horiz'}"
                    d, s, e = dp[n][h][idx], series[n][h][idx], exp[h][idx]
                    _expect(d == s == e, f"{where}: dp={d} series={s} explicit={e}")
                    if brute is not None:
                        b = brute.get((h, flag), 0)
                        _expect(b == d, f"{where}: brute force={b} dp={d}")
                    result.cells_checked += 1
                below = bounded[h - 1][n] if h > 0 else 0
                _expect(
                    sum(exp[h]) == bounded[h][n] - below,
                    f"n={n} h={h}: class sum {sum(exp[h])} != M<=h - M<=h-1 = "
                    f"{bounded[h][n] - below}",
                )
            total = sum(a + b for a, b in exp)
            _expect(total == motzkin_number(n), f"n={n}: cells total {total} != M_n")
    except VerificationError as err:
        result.failures.append(str(err))
    return result
