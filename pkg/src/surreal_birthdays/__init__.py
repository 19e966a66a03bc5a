"""超现实数有限形式的生日演算

- core: 形式驻留存储、序关系、规范形式与 Conway 算术
- calculus: f(n, m) 递推、增长推论与验证套件
- formats: 文本语法、φ 记号、DOT 与 JSON 快照
- cli: 命令行工具
"""

__version__ = "1.0.0"

from .contracts import DEFAULT_CONTRACT, EngineContract, EngineSettings, HarnessSettings
from .core import FormStore, add, dali, generation, mul, negate, sub, value_of

__all__ = [
    'DEFAULT_CONTRACT', 'EngineContract', 'EngineSettings', 'HarnessSettings',
    'FormStore', 'add', 'dali', 'generation', 'mul', 'negate', 'sub', 'value_of',
]
