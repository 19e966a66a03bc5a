"""
引擎配置契约：枚举、配置数据类与全局默认实例
"""
from dataclasses import dataclass, fields, replace
from enum import Enum, IntEnum
from typing import Any, Dict, Optional


class NumericCheck(Enum):
    """数值条件校验方式"""
    ORDER = "order"   # 按值选出 max(L) / min(R)，再用递归序关系 leq 判定
    VALUE = "value"   # 直接比较精确二进有理值
    OFF = "off"       # 不校验（不安全，仅用于性能实验）


class CachePolicy(Enum):
    """缓存达到上限后的策略"""
    EVICT_NONE = "evict-none"   # 不淘汰、不再写入
    FAIL_FAST = "fail-fast"     # 立即报错


class CheckStatus(Enum):
    """校验结果状态"""
    PASS = "PASS"
    FAIL = "FAIL"
    RECURRENCE_ONLY = "RECURRENCE_ONLY"   # 超出可行性上限或时间预算，仅给出递推值


class ExitCode(IntEnum):
    """CLI 退出码"""
    OK = 0
    FAILURE = 1
    PARSE_ERROR = 2
    COUNTEREXAMPLE = 3
    FEASIBILITY_ONLY = 4
    INTERRUPTED = 130


@dataclass
class EngineSettings:
    """FormStore 运行参数"""
    max_depth: int = 2000
    max_cache: Optional[int] = None             # None 表示不限
    cache_policy: CachePolicy = CachePolicy.EVICT_NONE
    numeric_check: NumericCheck = NumericCheck.ORDER        # make_form 的校验方式
    arithmetic_check: NumericCheck = NumericCheck.VALUE     # 算术结果的校验方式

    def __post_init__(self):
        if isinstance(self.cache_policy, str):
            self.cache_policy = CachePolicy(self.cache_policy)
        if isinstance(self.numeric_check, str):
            self.numeric_check = NumericCheck(self.numeric_check)
        if isinstance(self.arithmetic_check, str):
            self.arithmetic_check = NumericCheck(self.arithmetic_check)
        if self.max_depth <= 0:
            raise ValueError(f"max_depth 必须为正: {self.max_depth}")
        if self.max_cache is not None and self.max_cache <= 0:
            raise ValueError(f"max_cache 必须为正或 None: {self.max_cache}")


@dataclass
class HarnessSettings:
    """验证套件参数"""
    seed: int = 7
    feasibility_ceiling: int = 64      # 实际乘积的预测 generation 上限
    time_budget: float = 300.0         # 秒；超出后剩余单元格只给递推值
    thm1_pairs: int = 200
    thm1_max_generation: int = 8
    laws_samples: int = 100
    laws_max_generation: int = 5
    laws_triple_max_generation: int = 3   # 加法结合律的样本上限
    laws_mul_samples: int = 20
    laws_mul_max_generation: int = 2   # 乘法相关定律的样本上限
    table2_max_generation: int = 6     # thm2 套件遍历的 (n, m) 网格
    lemma1_max_k: int = 6
    lemma1_max_abs: int = 8
    asymptote_from: int = 15
    asymptote_to: int = 25
    asymptote_tolerance: float = 0.05


class EngineContract:
    """引擎配置总契约"""

    def __init__(self, engine: EngineSettings = None, harness: HarnessSettings = None):
        self.engine = engine or EngineSettings()
        self.harness = harness or HarnessSettings()

    @classmethod
    def from_config(cls, config_manager) -> 'EngineContract':
        """从 ConfigManager 的 engine / harness 段合并配置"""
        engine = _merge(EngineSettings(), config_manager.get_section("engine"))
        harness = _merge(HarnessSettings(), config_manager.get_section("harness"))
        return cls(engine, harness)

    def with_overrides(self, **overrides: Any) -> 'EngineContract':
        """按字段名覆盖（None 值忽略），返回新契约"""
        engine = _merge(self.engine, overrides)
        harness = _merge(self.harness, overrides)
        return EngineContract(engine, harness)

    def to_dict(self) -> Dict[str, Any]:
        def dump(obj):
            return {f.name: (getattr(obj, f.name).value if isinstance(getattr(obj, f.name), Enum)
                             else getattr(obj, f.name)) for f in fields(obj)}
        return {"engine": dump(self.engine), "harness": dump(self.harness)}


def _merge(settings, values: Optional[Dict[str, Any]]):
    """只合并 settings 已声明的字段"""
    if not values or not isinstance(values, dict):
        return settings
    names = {f.name for f in fields(settings)}
    updates = {key: value for key, value in values.items() if key in names and value is not None}
    if not updates:
        return settings
    return replace(settings, **updates)


# 全局默认配置实例
DEFAULT_CONTRACT = EngineContract()
