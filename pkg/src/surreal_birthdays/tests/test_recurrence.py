"""f(n, m) 递推与增长推论"""

import pytest

from surreal_birthdays.calculus import (
    BirthdayRecurrence, asymptote_errors, diagonal_ratio, f, f_table, pow2_constant_check,
    pow2_generation, square_diagonal, square_diagonal_asymptote,
)
from surreal_birthdays.config import LAMBDA, POW2_GENERATIONS, SQUARE_DIAGONAL, TABLE2_GRID


def test_boundaries():
    assert f(0, 0) == 0
    assert f(0, 17) == 0
    assert f(9, 0) == 0
    assert f(1, 1) == 1


def test_known_values():
    assert f(2, 3) == 12
    assert f(2, 6) == 42
    assert f(3, 3) == 31
    assert f(3, 5) == 115
    assert f(4, 4) == 160
    assert f(6, 6) == 4494


def test_table_matches_grid():
    table = f_table(6)
    assert table.shape == (7, 7)
    for n, row in enumerate(TABLE2_GRID):
        assert list(table.loc[n]) == row


def test_rectangular_table():
    table = f_table(2, 5)
    assert table.shape == (3, 6)
    assert list(table.loc[2]) == [0, 2, 6, 12, 20, 30]


def test_closed_forms_and_symmetry():
    for m in range(41):
        assert f(1, m) == m
        assert f(2, m) == m * (m + 1)
        for n in range(41):
            assert f(n, m) == f(m, n)


def test_strictly_increasing():
    for n in range(1, 30):
        for m in range(1, 30):
            assert f(n + 1, m) > f(n, m)
            assert f(n, m + 1) > f(n, m)


def test_large_arguments_are_exact():
    recurrence = BirthdayRecurrence()
    value = recurrence.value(300, 300)
    assert value > 10 ** 200
    assert recurrence.value(300, 299) == recurrence.value(299, 300)


def test_negative_arguments():
    with pytest.raises(ValueError):
        f(-1, 2)


def test_square_diagonal():
    assert [square_diagonal(n) for n in range(7)] == SQUARE_DIAGONAL


def test_diagonal_ratio_approaches_lambda():
    assert abs(diagonal_ratio(30) - LAMBDA) < 0.15
    assert abs(diagonal_ratio(30) - LAMBDA) < abs(diagonal_ratio(5) - LAMBDA)


def test_asymptote_within_five_percent():
    errors = asymptote_errors(15, 25)
    assert len(errors) == 11
    assert (errors['relative_error'] < 0.05).all()
    assert square_diagonal_asymptote(20) > 0


def test_pow2_generation():
    assert [pow2_generation(n) for n in range(1, 5)] == POW2_GENERATIONS
    assert pow2_generation(4) == 1806
    with pytest.raises(ValueError):
        pow2_generation(0)


def test_pow2_constant():
    frame = pow2_constant_check(5)
    assert frame['match'].all()
    assert list(frame['g_n']) == [2, 6, 42, 1806, 1806 * 1807]
