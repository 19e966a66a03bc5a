"""二进有理数 (dyadic rational)

值为 n / 2^k 的精确有理数，n 为任意精度整数，k 为非负整数。
始终以最简形式保存：k == 0 或 n 为奇数，因此字段相等当且仅当数值相等。
全程只用整数运算，不出现浮点。
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import NonDyadicDenominator

_DYADIC_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*(?:\^\s*(\d+))?)?\s*$')

DyadicLike = Union['Dyadic', int]


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """最简形式的 n / 2^k"""
    n: int
    k: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"指数 k 不能为负: {self.k}")
        if self.k > 0 and self.n % 2 == 0:
            raise ValueError(f"{self.n}/2^{self.k} 不是最简形式，请使用 Dyadic.of()")

    # ---- 构造 ----

    @classmethod
    def of(cls, n: int, k: int = 0) -> 'Dyadic':
        """约分后构造"""
        if k < 0:
            return cls(n << -k, 0)
        if n == 0:
            return cls(0, 0)
        while k > 0 and n % 2 == 0:
            n //= 2
            k -= 1
        return cls(n, k)

    @classmethod
    def coerce(cls, value: DyadicLike) -> 'Dyadic':
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"无法转换为 Dyadic: {value!r}")
        return cls(value, 0)

    @classmethod
    def from_fraction(cls, value: Fraction) -> 'Dyadic':
        value = Fraction(value)
        d = value.denominator
        if d & (d - 1):
            raise NonDyadicDenominator(f"分母 {d} 不是 2 的幂: {value}")
        return cls.of(value.numerator, d.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> 'Dyadic':
        """解析 "n"、"n/d"（d 为 2 的幂）或 "n/2^k" """
        match = _DYADIC_RE.match(text)
        if not match:
            raise ValueError(f"无法解析的二进有理数: {text!r}")
        numerator = int(match.group(1))
        base, power = match.group(2), match.group(3)
        if base is None:
            return cls(numerator, 0)
        if power is not None:
            if base != '2':
                raise NonDyadicDenominator(f"分母底数必须为 2: {text!r}")
            return cls.of(numerator, int(power))
        denominator = int(base)
        if denominator == 0 or denominator & (denominator - 1):
            raise NonDyadicDenominator(f"分母 {denominator} 不是 2 的幂: {text!r}")
        return cls.of(numerator, denominator.bit_length() - 1)

    # ---- 查询 ----

    @property
    def is_integer(self) -> bool:
        return self.k == 0

    @property
    def sign(self) -> int:
        return (self.n > 0) - (self.n < 0)

    def floor(self) -> int:
        return self.n >> self.k

    def ceil(self) -> int:
        return -((-self.n) >> self.k)

    def ceil_abs(self) -> int:
        """⌈|n| / 2^k⌉，纯整数运算"""
        return -((-abs(self.n)) >> self.k)

    def to_fraction(self) -> Fraction:
        return Fraction(self.n, 1 << self.k)

    # ---- 运算 ----

    def _aligned(self, other: 'Dyadic'):
        k = max(self.k, other.k)
        return self.n << (k - self.k), other.n << (k - other.k), k

    def __add__(self, other: DyadicLike) -> 'Dyadic':
        other = Dyadic.coerce(other)
        a, b, k = self._aligned(other)
        return Dyadic.of(a + b, k)

    __radd__ = __add__

    def __sub__(self, other: DyadicLike) -> 'Dyadic':
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other: DyadicLike) -> 'Dyadic':
        return Dyadic.coerce(other) - self

    def __neg__(self) -> 'Dyadic':
        return Dyadic(-self.n, self.k)

    def __abs__(self) -> 'Dyadic':
        return Dyadic(abs(self.n), self.k)

    def __mul__(self, other: DyadicLike) -> 'Dyadic':
        other = Dyadic.coerce(other)
        return Dyadic.of(self.n * other.n, self.k + other.k)

    __rmul__ = __mul__

    def half(self) -> 'Dyadic':
        if self.n == 0:
            return self
        return Dyadic.of(self.n, self.k + 1)

    def midpoint(self, other: DyadicLike) -> 'Dyadic':
        return (self + other).half()

    # ---- 比较 ----

    def __lt__(self, other: DyadicLike) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Dyadic(other, 0)
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.k == 0 and self.n == other
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.n == other.n and self.k == other.k

    def __hash__(self) -> int:
        # 与相等的 int 同哈希
        return hash(self.n) if self.k == 0 else hash((self.n, self.k))

    def __bool__(self) -> bool:
        return self.n != 0

    def __float__(self) -> float:
        return self.n / (1 << self.k)

    def __str__(self) -> str:
        if self.k == 0:
            return str(self.n)
        return f"{self.n}/{1 << self.k}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)
