"""核心模块

- FormStore / FormNode / FormId: 形式驻留存储
- ordering: 递归序关系
- canonical: 二进有理数、规范形式、generation 与取值
- arithmetic: 加、取负、减、乘
- ConfigManager: 配置管理器
"""

from .dyadic import Dyadic
from .errors import (
    SurrealError, NotANumber, InvalidFormId, DepthExceeded, CacheLimitExceeded,
    ArithmeticInvariantError, NonDyadicDenominator, FormSyntaxError,
    MalformedSnapshot, FeasibilityExceeded,
)
from .form_store import FormId, FormNode, FormStore, make_form, parents, zero
from .ordering import leq, geq, lt, gt, equiv, identical
from .canonical import (
    dali, generation, canonical_birthday, value_of, is_canonical,
    simplest_between, dyadics_of_birthday, dyadic_dag,
)
from .arithmetic import add, negate, sub, mul
from .config_manager import ConfigManager, get_config_manager, init_config_manager

__all__ = [
    'Dyadic',
    'SurrealError', 'NotANumber', 'InvalidFormId', 'DepthExceeded', 'CacheLimitExceeded',
    'ArithmeticInvariantError', 'NonDyadicDenominator', 'FormSyntaxError',
    'MalformedSnapshot', 'FeasibilityExceeded',
    'FormId', 'FormNode', 'FormStore', 'make_form', 'parents', 'zero',
    'leq', 'geq', 'lt', 'gt', 'equiv', 'identical',
    'dali', 'generation', 'canonical_birthday', 'value_of', 'is_canonical',
    'simplest_between', 'dyadics_of_birthday', 'dyadic_dag',
    'add', 'negate', 'sub', 'mul',
    'ConfigManager', 'get_config_manager', 'init_config_manager',
]
