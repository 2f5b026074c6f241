import threading

import pytest

from motzkin_amplitude.genfunc import (
    DeterminantFamily,
    Kind,
    class_coeff_series,
    class_table_series,
    det_poly,
    det_star_poly,
    series_bounded,
    series_bounded_no_horiz,
)
from motzkin_amplitude.numerics import PolynomialZ, motzkin_number
from motzkin_amplitude.paths import class_table_dp, dp_count_bounded


def tridiagonal_det(n, last_entry_one=False):
    """Determinant of the n x n system matrix by cofactor expansion over polynomials."""
    diag, off = PolynomialZ([1, -1]), PolynomialZ([0, -1])
    mat = [[PolynomialZ() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        mat[i][i] = diag
        if i + 1 < n:
            mat[i][i + 1] = mat[i + 1][i] = off
    if n and last_entry_one:
        mat[n - 1][n - 1] = PolynomialZ.one()

    def det(rows, cols):
        if not rows:
            return PolynomialZ.one()
        r, total = rows[0], PolynomialZ()
        for idx, c in enumerate(cols):
            entry = mat[r][c]
            if entry.degree < 0:
                continue
            minor = det(rows[1:], cols[:idx] + cols[idx + 1 :])
            term = entry * minor
            total = total + term if idx % 2 == 0 else total - term
        return total

    return det(list(range(n)), list(range(n)))


def coeffs(p):
    return list(p.coefficients)


class TestDeterminants:
    def test_examples(self):
        assert coeffs(det_poly(0)) == [1]
        assert coeffs(det_poly(1)) == [1, -1]
        assert coeffs(det_poly(2)) == [1, -2]
        assert coeffs(det_star_poly(0)) == [1]
        assert coeffs(det_star_poly(1)) == [1]
        assert coeffs(det_star_poly(2)) == [1, -1, -1]
        assert coeffs(det_star_poly(3)) == [1, -2, -1, 1]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_cofactor_expansion(self, n):
        assert det_poly(n) == tridiagonal_det(n)
        assert det_star_poly(n) == tridiagonal_det(n, last_entry_one=True)

    def test_constant_term(self):
        for n in range(501):
            assert det_poly(n)[0] == 1
            assert det_star_poly(n)[0] == 1

    def test_top_coefficients(self):
        # [z^n] D_n is the determinant of the all-(-1) tridiagonal matrix: 1, -1, 0, ...
        cycle = (1, -1, 0)
        for n in range(501):
            assert det_poly(n).degree <= n
            assert det_poly(n)[n] == cycle[n % 3]
            if n >= 2:
                assert det_star_poly(n).degree <= n
                assert det_star_poly(n)[n] == -cycle[(n - 2) % 3]
        assert det_poly(2).degree == 1
        assert det_star_poly(4).degree == 3

    def test_concurrent_extension(self):
        fam = DeterminantFamily(Kind.STANDARD)
        results = []

        def work(k):
            results.append((k, fam[k]))

        threads = [threading.Thread(target=work, args=(60 + i,)) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for k, p in results:
            assert p == det_poly(k)


class TestSeries:
    def test_examples(self):
        assert list(series_bounded(0, 4).coefficients) == [1, 1, 1, 1, 1]
        assert list(series_bounded(1, 4).coefficients) == [1, 1, 2, 4, 8]
        assert list(series_bounded_no_horiz(1, 5).coefficients) == [1, 1, 2, 3, 5, 8]
        assert list(series_bounded_no_horiz(0, 3).coefficients) == [1, 0, 0, 0]
        assert list(series_bounded(-1, 3).coefficients) == [0, 0, 0, 0]

    def test_saturates_at_motzkin(self):
        for n in range(30):
            assert series_bounded(n // 2, n)[n] == motzkin_number(n)

    def test_matches_dp_and_dominates_capped(self):
        for h in range(8):
            full, capped = series_bounded(h, 40), series_bounded_no_horiz(h, 40)
            for n in range(41):
                assert full[n] == dp_count_bounded(n, h)
                assert capped[n] <= full[n]


class TestClassCoefficients:
    def test_examples(self):
        assert class_coeff_series(4, 1, True) == 3
        assert class_coeff_series(4, 0, True) == 1
        assert class_coeff_series(0, 0, False) == 1

    def test_table_against_dp(self):
        assert class_table_series(200) == class_table_dp(200)

    def test_identity_against_height_counts(self):
        table = class_table_series(200)
        for h in range(101):
            full = series_bounded(h, 200)
            below = series_bounded(h - 1, 200)
            for n in range(2 * h, 201):
                assert sum(table[n][h]) == full[n] - below[n]

    def test_single_cell_query_matches_table(self):
        table = class_table_series(24)
        for n in range(25):
            for h in range(n // 2 + 1):
                assert table[n][h] == (
                    class_coeff_series(n, h, True),
                    class_coeff_series(n, h, False),
                )
