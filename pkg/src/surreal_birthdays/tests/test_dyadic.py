"""Dyadic 的构造、解析与精确运算"""

from fractions import Fraction

import pytest

from surreal_birthdays.core.dyadic import ONE, ZERO, Dyadic
from surreal_birthdays.core.errors import NonDyadicDenominator


class TestConstruction:

    def test_of_reduces_to_lowest_terms(self):
        assert Dyadic.of(2, 1) == Dyadic(1)
        assert Dyadic.of(6, 2) == Dyadic(3, 1)
        assert Dyadic.of(0, 5) == ZERO

    def test_rejects_non_reduced_fields(self):
        with pytest.raises(ValueError):
            Dyadic(2, 1)
        with pytest.raises(ValueError):
            Dyadic(1, -1)

    def test_from_fraction(self):
        assert Dyadic.from_fraction(Fraction(3, 4)) == Dyadic(3, 2)
        with pytest.raises(NonDyadicDenominator):
            Dyadic.from_fraction(Fraction(1, 3))

    def test_coerce(self):
        assert Dyadic.coerce(5) == Dyadic(5)
        with pytest.raises(TypeError):
            Dyadic.coerce(True)
        with pytest.raises(TypeError):
            Dyadic.coerce(0.5)

    def test_hash_agrees_with_int_equality(self):
        for n in (-3, 0, 1, 2 ** 70):
            assert Dyadic(n) == n
            assert hash(Dyadic(n)) == hash(n)
        lookup = {Dyadic(1): "one", Dyadic(3, 2): "three quarters"}
        assert lookup[1] == "one"
        assert {0: "zero"}[ZERO] == "zero"
        assert len({Dyadic(2), 2, Dyadic.of(4, 1)}) == 1
        assert Dyadic(3, 2) in lookup and 3 not in lookup


class TestParse:

    @pytest.mark.parametrize("text, expected", [
        ("0", Dyadic(0)),
        ("3/4", Dyadic(3, 2)),
        ("-5/8", Dyadic(-5, 3)),
        ("4/8", Dyadic(1, 1)),
        ("1/2^3", Dyadic(1, 3)),
        (" 7 ", Dyadic(7)),
    ])
    def test_parse(self, text, expected):
        assert Dyadic.parse(text) == expected

    def test_non_power_of_two_denominator(self):
        with pytest.raises(NonDyadicDenominator):
            Dyadic.parse("1/3")
        with pytest.raises(NonDyadicDenominator):
            Dyadic.parse("1/3^2")

    def test_garbage(self):
        with pytest.raises(ValueError):
            Dyadic.parse("abc")


class TestQueries:

    def test_ceil_abs_is_integer_only(self):
        assert Dyadic(-5, 3).ceil_abs() == 1
        assert Dyadic(3, 1).ceil_abs() == 2
        assert Dyadic(4).ceil_abs() == 4
        assert ZERO.ceil_abs() == 0

    def test_floor_and_ceil(self):
        assert Dyadic(-3, 1).floor() == -2
        assert Dyadic(-3, 1).ceil() == -1
        assert Dyadic(3, 2).floor() == 0
        assert Dyadic(3, 2).ceil() == 1

    def test_sign(self):
        assert Dyadic(-1, 3).sign == -1
        assert ZERO.sign == 0
        assert ONE.sign == 1


class TestArithmetic:

    def test_add_sub(self):
        assert Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2)
        assert Dyadic(1, 1) - 1 == Dyadic(-1, 1)
        assert 1 - Dyadic(1, 1) == Dyadic(1, 1)

    def test_mul(self):
        assert Dyadic(3, 2) * 2 == Dyadic(3, 1)
        assert Dyadic(-1, 1) * Dyadic(-1, 1) == Dyadic(1, 2)

    def test_midpoint(self):
        assert ZERO.midpoint(ONE) == Dyadic(1, 1)
        assert Dyadic(1, 1).midpoint(ONE) == Dyadic(3, 2)

    def test_ordering_against_ints(self):
        assert Dyadic(1, 1) < 1
        assert Dyadic(2) == 2
        assert Dyadic(-1, 1) > -1
        assert sorted([Dyadic(3, 2), ZERO, Dyadic(-1, 1)]) == [Dyadic(-1, 1), ZERO, Dyadic(3, 2)]

    def test_str_and_repr(self):
        assert str(Dyadic(3, 2)) == "3/4"
        assert str(Dyadic(-2)) == "-2"
        assert repr(Dyadic(3, 2)) == "Dyadic(3/4)"
