import pytest

from motzkin_amplitude.explicit import (
    class_coeff_explicit,
    class_counts_explicit,
    height_coeff_explicit,
    kernel_coeff,
)
from motzkin_amplitude.genfunc import class_table_series
from motzkin_amplitude.numerics import motzkin_number, trinomial_row
from motzkin_amplitude.paths import class_table_dp


def test_kernel_examples():
    assert kernel_coeff(4, 4) == -8
    assert kernel_coeff(4, 3) == -9
    assert kernel_coeff(4, 6) == -1
    assert kernel_coeff(4, 5) == -4
    assert kernel_coeff(0, 3) == 0
    assert kernel_coeff(0, 2) == -1


def test_kernel_vanishes_past_n_plus_two():
    for n in range(60):
        row = trinomial_row(n)
        for a in range(n + 3, n + 10):
            assert kernel_coeff(n, a, row) == 0


def test_kernel_rejects_wrong_row():
    with pytest.raises(ValueError):
        kernel_coeff(5, 3, trinomial_row(4))
    with pytest.raises(ValueError):
        kernel_coeff(5, 0)


def test_class_examples():
    assert class_coeff_explicit(4, 1, True) == 3
    assert class_coeff_explicit(4, 1, False) == 4
    assert class_coeff_explicit(0, 0, False) == 1
    assert height_coeff_explicit(4, 1) == 7
    assert height_coeff_explicit(4, 2) == 1
    assert height_coeff_explicit(4, 0) == 1


def test_three_way_equality():
    dp, series = class_table_dp(200), class_table_series(200)
    for n in range(201):
        exp = class_counts_explicit(n)
        assert exp == dp[n] == series[n]


def test_height_sum_and_split():
    for n in range(201):
        row = trinomial_row(n)
        heights = [height_coeff_explicit(n, h, row) for h in range(n // 2 + 1)]
        assert sum(heights) == motzkin_number(n)
        for h, total in enumerate(heights):
            assert total == class_coeff_explicit(n, h, True, row) + class_coeff_explicit(
                n, h, False, row
            )


def test_sweep_matches_cellwise():
    for n in (0, 1, 9, 50):
        assert class_counts_explicit(n) == [
            (class_coeff_explicit(n, h, True), class_coeff_explicit(n, h, False))
            for h in range(n // 2 + 1)
        ]
