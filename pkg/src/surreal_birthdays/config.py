"""
常量配置 - 生日算术的已知表格与序列
"""

import math

# --- 加法生日表 ---
# 行列使用同一组规范形式操作数
TABLE1_OPERANDS = ['0', '1/2', '3/4', '1', '2']
TABLE1_GENERATIONS = [0, 2, 3, 1, 2]
TABLE1_GRID = [
    [0, 2, 3, 1, 2],
    [2, 4, 5, 3, 4],
    [3, 5, 6, 4, 5],
    [1, 3, 4, 2, 3],
    [2, 4, 5, 3, 4],
]

# --- 乘法生日表 f(n, m)，n, m = 0..6 ---
TABLE2_GRID = [
    [0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6],
    [0, 2, 6, 12, 20, 30, 42],
    [0, 3, 12, 31, 64, 115, 188],
    [0, 4, 20, 64, 160, 340, 644],
    [0, 5, 30, 115, 340, 841, 1826],
    [0, 6, 42, 188, 644, 1826, 4494],
]

# --- 序列 ---
SQUARE_DIAGONAL = [0, 1, 6, 31, 160, 841, 4494]
POW2_GENERATIONS = [2, 6, 42, 1806]      # 印刷版第 4 项 18006 与递推 42·43 = 1806 不符

# --- 增长常数 ---
LAMBDA = 3 + 2 * math.sqrt(2)                           # ≈ 5.83
DIAGONAL_CONSTANT = 2 ** (-9 / 4) * math.sqrt(LAMBDA / math.pi)   # ≈ 0.29
POW2_CONSTANT = "1.597910218031873178338070118157"      # g_n = ⌊c^(2^n)⌋

# --- 形式文本 ---
EMPTY_SET_TOKEN = 'phi'

# --- 形式展开（空白无关比较） ---
EXPANSION_ONE_PLUS_HALF = (
    "{{{phi|phi}|{{phi|phi}|phi}},{{phi|phi}|phi}|{{{phi|phi}|phi}|phi}}"
)
EXPANSION_TWO_TIMES_TWO = (
    "{{{{{{phi|{phi|phi}}|{{phi|phi}|phi}}|{{{phi|phi}|phi}|phi}}|"
    "{{{{phi|phi}|phi}|phi}|phi}}|{{{{{phi|phi}|phi}|phi}|phi}|phi}}|phi}"
)
