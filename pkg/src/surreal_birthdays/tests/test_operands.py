"""OperandFactory：按 generation 生成操作数"""

import pytest

from surreal_birthdays.calculus import OperandFactory
from surreal_birthdays.core import FormStore, generation, is_canonical, value_of
from surreal_birthdays.core.dyadic import Dyadic


@pytest.mark.parametrize("g", range(0, 7))
def test_canonical_has_exact_generation(store, g):
    factory = OperandFactory(store, seed=3)
    for _ in range(10):
        x = factory.canonical(g)
        assert generation(store, x) == g
        assert is_canonical(store, x)


@pytest.mark.parametrize("g", range(2, 7))
def test_non_canonical_has_exact_generation(store, g):
    factory = OperandFactory(store, seed=11)
    for _ in range(10):
        x = factory.non_canonical(g)
        assert generation(store, x) == g
        assert not is_canonical(store, x)


def test_no_non_canonical_below_two(store):
    factory = OperandFactory(store)
    with pytest.raises(ValueError):
        factory.non_canonical(1)


def test_padded_keeps_value(store):
    factory = OperandFactory(store, seed=5)
    x = factory.padded(4, h=1)
    assert generation(store, x) == 4
    assert value_of(store, x) in {Dyadic(-2), Dyadic(-1, 1), Dyadic(1, 1), Dyadic(2)}


def test_same_seed_same_forms():
    first, second = FormStore(), FormStore()
    a, b = OperandFactory(first, seed=7), OperandFactory(second, seed=7)
    for g in (2, 3, 5, 8):
        x, y = a.form(g), b.form(g)
        assert value_of(first, x) == value_of(second, y)
        assert generation(first, x) == generation(second, y)
        assert len(first.reachable(x)) == len(second.reachable(y))


def test_reset_replays(store):
    factory = OperandFactory(store, seed=9)
    forms = [factory.form(4) for _ in range(5)]
    factory.reset()
    assert [factory.form(4) for _ in range(5)] == forms


def test_pair_bounds(store):
    factory = OperandFactory(store, seed=1)
    for _ in range(20):
        x, y = factory.pair(5)
        assert generation(store, x) <= 5
        assert generation(store, y) <= 5
