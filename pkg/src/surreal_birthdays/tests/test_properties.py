"""代数定律的性质测试"""

from hypothesis import given, settings, strategies as st

from surreal_birthdays.core import (
    FormStore, add, dali, dyadics_of_birthday, equiv, generation, identical, leq, mul, negate, sub,
    value_of,
)

STORE = FormStore()

dyadics = st.integers(min_value=0, max_value=3).flatmap(
    lambda g: st.sampled_from(dyadics_of_birthday(g)))


@st.composite
def forms(draw):
    """规范形式，或零填充后的非规范形式 x + (p − p)"""
    x = dali(STORE, draw(dyadics))
    if draw(st.booleans()):
        p = dali(STORE, draw(dyadics))
        x = add(STORE, x, sub(STORE, p, p))
    return x


@settings(deadline=None)
@given(forms(), forms())
def test_addition_commutes_structurally(x, y):
    mirror = FormStore()
    y_mirror = mirror.import_form(STORE, y)
    x_mirror = mirror.import_form(STORE, x)
    reversed_sum = STORE.import_form(mirror, add(mirror, y_mirror, x_mirror))
    assert reversed_sum == add(STORE, x, y)


@settings(deadline=None)
@given(forms(), forms())
def test_addition_birthday(x, y):
    assert generation(STORE, add(STORE, x, y)) == generation(STORE, x) + generation(STORE, y)
    assert generation(STORE, sub(STORE, x, y)) == generation(STORE, x) + generation(STORE, y)


@settings(deadline=None)
@given(forms(), forms())
def test_value_homomorphism(x, y):
    assert value_of(STORE, add(STORE, x, y)) == value_of(STORE, x) + value_of(STORE, y)


@settings(deadline=None)
@given(forms())
def test_identities(x):
    assert identical(STORE, add(STORE, x, STORE.zero_id), x)
    assert identical(STORE, negate(STORE, negate(STORE, x)), x)
    assert generation(STORE, negate(STORE, x)) == generation(STORE, x)
    assert equiv(STORE, sub(STORE, x, x), STORE.zero_id)


@settings(deadline=None)
@given(forms(), forms())
def test_order_agrees_with_value(x, y):
    assert leq(STORE, x, y) == (value_of(STORE, x) <= value_of(STORE, y))


small_dyadics = st.integers(min_value=0, max_value=2).flatmap(
    lambda g: st.sampled_from(dyadics_of_birthday(g)))


@settings(max_examples=25, deadline=None)
@given(small_dyadics, small_dyadics)
def test_multiplication_values(p, q):
    x, y = dali(STORE, p), dali(STORE, q)
    product = mul(STORE, x, y)
    assert value_of(STORE, product) == p * q
    assert product == mul(STORE, y, x)
    assert identical(STORE, mul(STORE, x, dali(STORE, 1)), x)
