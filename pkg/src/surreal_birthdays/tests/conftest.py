"""公共 fixture"""

import pytest

from surreal_birthdays.contracts import EngineSettings
from surreal_birthdays.core import FormStore, dali
from surreal_birthdays.core.dyadic import Dyadic


@pytest.fixture
def store():
    """每个测试一个全新的 FormStore"""
    return FormStore(EngineSettings())


@pytest.fixture
def one(store):
    return dali(store, 1)


@pytest.fixture
def minus_one(store):
    return dali(store, -1)


@pytest.fixture
def half(store):
    return dali(store, Dyadic(1, 1))


@pytest.fixture
def spread_zero(store, minus_one, one):
    """{−1̄ | 1̄}：值为 0，但不是 0̄"""
    return store.make_form([minus_one], [one])
