"""异常定义

所有库内异常都继承自 SurrealError，CLI 在命令边界统一捕获并映射为退出码。
"""

from typing import Optional


class SurrealError(Exception):
    """surreal_birthdays 异常基类"""
    pass


class InvalidFormId(SurrealError, KeyError):
    """FormId 不属于当前 store"""
    pass


class NotANumber(SurrealError):
    """左集合中存在元素 ≥ 右集合中的某个元素：该形式是博弈而非数"""

    def __init__(self, message: str, left_id: Optional[int] = None, right_id: Optional[int] = None):
        super().__init__(message)
        self.left_id = left_id
        self.right_id = right_id


class ArithmeticInvariantError(SurrealError):
    """算术结果违反数值条件，只可能是实现缺陷"""
    pass


class DepthExceeded(SurrealError, RecursionError):
    """递归深度超过配置上限"""

    def __init__(self, max_depth: int):
        super().__init__(f"递归深度超过上限 max_depth={max_depth}，可通过 --max-depth 调大")
        self.max_depth = max_depth


class CacheLimitExceeded(SurrealError):
    """缓存条目数达到上限且策略为 fail-fast"""
    pass


class NonDyadicDenominator(SurrealError, ValueError):
    """分母不是 2 的幂"""
    pass


class FormSyntaxError(SurrealError, SyntaxError):
    """表达式文本语法错误，position 为出错字符下标"""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} (位置 {position})")
        self.position = position
        self.text = text


class MalformedSnapshot(SurrealError, ValueError):
    """JSON 快照不符合约定的结构或数值条件"""
    pass


class FeasibilityExceeded(SurrealError):
    """预测的乘积 generation 超过可行性上限，不做实际计算"""

    def __init__(self, predicted: int, ceiling: int):
        super().__init__(f"预测 generation={predicted} 超过可行性上限 {ceiling}")
        self.predicted = predicted
        self.ceiling = ceiling
