"""
生日演算示例
演示形式求值、φ 记号展开、生日表复现与 DOT 导出
"""

import sys
from pathlib import Path

# 添加 src 目录到Python路径
sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from surreal_birthdays.core import FormStore, dali, generation, mul, value_of
from surreal_birthdays.calculus import addition_table, f_table, verify_birthday_multiplication
from surreal_birthdays.formats import evaluate, print_form, to_dot


def demo_worked_examples(store: FormStore):
    """1̄ + 1/2̄ 的展开与 2̄ × 3̄ 的生日"""
    print("=" * 60)
    print("示例1: 形式求值")
    print("=" * 60)
    x = evaluate(store, "dali(1) + dali(1/2)")
    print(f"1 + 1/2 = {value_of(store, x)}, generation {generation(store, x)}")
    print(print_form(store, x))

    report = verify_birthday_multiplication(store, dali(store, 2), dali(store, 3))
    print(report)


def demo_tables(store: FormStore):
    print("=" * 60)
    print("示例2: 加法生日表与 f(n, m)")
    print("=" * 60)
    print(addition_table(store).to_string())
    print()
    print(f_table(6).to_string())


def demo_dot(store: FormStore):
    print("=" * 60)
    print("示例3: 3/4 + 3/4 的 DOT 图")
    print("=" * 60)
    x = evaluate(store, "dali(3/4) + dali(3/4)")
    print(to_dot(store, x))
    square = mul(store, dali(store, 2), dali(store, 2))
    print(f"2 × 2 的展开: {print_form(store, square, depth_limit=2)}")


def main():
    store = FormStore()
    demo_worked_examples(store)
    demo_tables(store)
    demo_dot(store)


if __name__ == '__main__':
    main()
