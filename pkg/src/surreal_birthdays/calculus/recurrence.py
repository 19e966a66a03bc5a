"""生日乘法递推 f(n, m) 及其增长推论

f(n, 0) = f(0, m) = 0
f(n, m) = f(n, m−1) + f(n−1, m) + f(n−1, m−1) + 1
按行填表计算，精确整数，不做递归。
"""

import logging
import math
import threading
from decimal import ROUND_FLOOR, Decimal, localcontext
from typing import List

import numpy as np
import pandas as pd

from ..config import DIAGONAL_CONSTANT, LAMBDA, POW2_CONSTANT

logger = logging.getLogger(__name__)


class BirthdayRecurrence:
    """按需扩展的 f(n, m) 方表"""

    def __init__(self):
        self._table: List[List[int]] = [[0]]
        self._lock = threading.Lock()

    @property
    def size(self) -> int:
        return len(self._table)

    def _extend(self, size: int) -> None:
        with self._lock:
            old = len(self._table)
            if size <= old:
                return
            for row in self._table:
                row.extend([0] * (size - old))
            for _ in range(old, size):
                self._table.append([0] * size)
            table = self._table
            for n in range(1, size):
                row, prev = table[n], table[n - 1]
                start = old if n < old else 1
                for m in range(start, size):
                    row[m] = row[m - 1] + prev[m] + prev[m - 1] + 1
            logger.debug(f"f(n, m) 表扩展至 {size}×{size}")

    def value(self, n: int, m: int) -> int:
        if n < 0 or m < 0:
            raise ValueError(f"f(n, m) 只对非负整数定义: ({n}, {m})")
        size = max(n, m) + 1
        if size > len(self._table):
            self._extend(max(size, 2 * len(self._table)))
        return self._table[n][m]

    def table(self, n_max: int, m_max: int) -> List[List[int]]:
        self.value(n_max, m_max)
        return [row[:m_max + 1] for row in self._table[:n_max + 1]]


_DEFAULT = BirthdayRecurrence()


def f(n: int, m: int) -> int:
    """g(xy) = f(g(x), g(y))"""
    return _DEFAULT.value(n, m)


def f_table(n_max: int, m_max: int = None) -> pd.DataFrame:
    """f(n, m) 表，行 n = g(x)，列 m = g(y)"""
    m_max = n_max if m_max is None else m_max
    rows = _DEFAULT.table(n_max, m_max)
    frame = pd.DataFrame(rows, index=range(n_max + 1), columns=range(m_max + 1), dtype=object)
    frame.index.name = 'n'
    frame.columns.name = 'm'
    return frame


def square_diagonal(n: int) -> int:
    """g(n̄²) = f(n, n)"""
    return f(n, n)


def diagonal_ratio(n: int) -> float:
    """f(n, n) / f(n−1, n−1)，趋近 λ = 3 + 2√2"""
    if n < 2:
        raise ValueError(f"比值从 n = 2 开始定义: {n}")
    return square_diagonal(n) / square_diagonal(n - 1)


def square_diagonal_asymptote(n: int) -> float:
    """a·λⁿ/√n"""
    if n < 1:
        raise ValueError(f"渐近式从 n = 1 开始定义: {n}")
    return DIAGONAL_CONSTANT * LAMBDA ** n / math.sqrt(n)


def asymptote_errors(n_from: int, n_to: int) -> pd.DataFrame:
    """|f(n,n)·√n / (a·λⁿ) − 1|，逐 n 列出"""
    ns = np.arange(n_from, n_to + 1)
    exact = np.array([float(square_diagonal(int(n))) for n in ns])
    approx = np.array([square_diagonal_asymptote(int(n)) for n in ns])
    return pd.DataFrame({
        'n': ns,
        'f(n,n)': [square_diagonal(int(n)) for n in ns],
        'asymptote': approx,
        'relative_error': np.abs(exact / approx - 1.0),
    })


def pow2_generation(n: int) -> int:
    """g(2̄ⁿ)：g_1 = 2，g_n = g_{n−1}(g_{n−1} + 1)"""
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    g = 2
    for _ in range(n - 1):
        g = g * (g + 1)
    return g


def pow2_constant_check(n_max: int = 5) -> pd.DataFrame:
    """对比 g_n 与 ⌊c^(2^n)⌋；以精确递推为准，常数只是描述"""
    rows = []
    with localcontext() as ctx:
        ctx.prec = 60
        c = Decimal(POW2_CONSTANT)
        for n in range(1, n_max + 1):
            exact = pow2_generation(n)
            approx = int((c ** (2 ** n)).to_integral_value(rounding=ROUND_FLOOR))
            rows.append({'n': n, 'g_n': exact, 'floor_c_pow': approx, 'match': exact == approx})
    return pd.DataFrame(rows)
