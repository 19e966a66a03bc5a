"""
生日定理验证框架

- verify_birthday_addition / verify_birthday_multiplication: 单对形式的生日校验
- VerificationHarness: 按套件 (lemma1 / thm1 / thm2 / gonshor / laws) 批量校验，
  结果收集为 CheckResult，可汇总、导出 JSON 报告与 CSV 行
"""
import json
import logging
import time
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd
from tqdm import tqdm

from ..config import (
    EXPANSION_ONE_PLUS_HALF, EXPANSION_TWO_TIMES_TWO, POW2_GENERATIONS, SQUARE_DIAGONAL,
    TABLE1_GENERATIONS, TABLE1_GRID, TABLE1_OPERANDS, TABLE2_GRID,
)
from ..contracts import DEFAULT_CONTRACT, CheckStatus, EngineContract, ExitCode
from ..core import (
    FeasibilityExceeded, FormId, FormStore, add, canonical_birthday, dali, dyadics_of_birthday,
    equiv, generation, identical, is_canonical, leq, mul, negate, sub, value_of,
)
from ..core.dyadic import Dyadic
from ..formats.printer import print_form, strip_whitespace
from .operands import OperandFactory
from .recurrence import asymptote_errors, f, f_table, pow2_constant_check, pow2_generation, square_diagonal

SUITES = ('lemma1', 'thm1', 'thm2', 'gonshor', 'laws')

# 见证形式的展开层数
WITNESS_DEPTH = 4
# 每项检查最多记录的反例数
MAX_WITNESSES = 5


@dataclass
class BirthdayReport:
    """一次生日校验：预测值与实测值"""
    operation: str          # '+' 或 '×'
    x: FormId
    y: FormId
    x_generation: int
    y_generation: int
    predicted: int
    measured: int
    result: FormId

    @property
    def passed(self) -> bool:
        return self.predicted == self.measured

    def __str__(self) -> str:
        rule = (f"{self.x_generation} + {self.y_generation}" if self.operation == '+'
                else f"f({self.x_generation}, {self.y_generation})")
        status = "PASS" if self.passed else "FAIL"
        return f"g(x {self.operation} y): 预测 {rule} = {self.predicted}，实测 {self.measured} [{status}]"


def verify_birthday_addition(store: FormStore, x: FormId, y: FormId) -> BirthdayReport:
    """g(x + y) = g(x) + g(y)"""
    gx, gy = generation(store, x), generation(store, y)
    result = add(store, x, y)
    return BirthdayReport('+', x, y, gx, gy, gx + gy, generation(store, result), result)


def verify_birthday_multiplication(store: FormStore, x: FormId, y: FormId,
                                   ceiling: Optional[int] = None) -> BirthdayReport:
    """g(xy) = f(g(x), g(y))

    Raises:
        FeasibilityExceeded: f(g(x), g(y)) 超过 ceiling，不做实际乘法
    """
    ceiling = DEFAULT_CONTRACT.harness.feasibility_ceiling if ceiling is None else ceiling
    gx, gy = generation(store, x), generation(store, y)
    predicted = f(gx, gy)
    if predicted > ceiling:
        raise FeasibilityExceeded(predicted, ceiling)
    result = mul(store, x, y)
    return BirthdayReport('×', x, y, gx, gy, predicted, generation(store, result), result)


@dataclass
class CheckResult:
    """单项检查结果"""
    check_id: str
    suite: str
    status: CheckStatus
    message: str
    details: Dict[str, Any] = None
    timestamp: str = None

    def __post_init__(self):
        if self.timestamp is None:
            self.timestamp = datetime.now().isoformat()
        if self.details is None:
            self.details = {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "suite": self.suite,
            "status": self.status.value,
            "message": self.message,
            "details": _json_safe(self.details),
            "timestamp": self.timestamp,
        }


@dataclass
class ProductMeasurement:
    """thm2 单元格上的一次实际乘积"""
    n: int
    m: int
    operands: str           # 'canonical' / 'non-canonical'
    predicted: int
    measured: Optional[int]
    status: CheckStatus
    x: Optional[FormId] = None
    y: Optional[FormId] = None
    reason: Optional[str] = None    # 未实测时: 'ceiling' / 'time_budget'


class VerificationHarness:
    """生日定理验证套件"""

    def __init__(self, contract: EngineContract = None, store: FormStore = None,
                 progress: bool = False):
        self.contract = contract or DEFAULT_CONTRACT
        self.settings = self.contract.harness
        self.store = store or FormStore(self.contract.engine)
        self.factory = OperandFactory(self.store, self.settings.seed)
        self.progress = progress
        self.results: List[CheckResult] = []
        self._products: Optional[List[ProductMeasurement]] = None
        self.logger = logging.getLogger(self.__class__.__name__)

    # ---- 套件调度 ----

    def run(self, suite: str) -> List[CheckResult]:
        """运行一个套件（或 'all'），返回本次产生的结果"""
        if suite == 'all':
            produced = []
            for name in SUITES:
                produced.extend(self.run(name))
            return produced
        if suite not in SUITES:
            raise ValueError(f"未知的验证套件: {suite}，可选 {', '.join(SUITES)} 或 all")

        runner: Callable[[], List[CheckResult]] = getattr(self, f"run_{suite}")
        self.factory.reset()
        self.logger.info(f"开始验证套件 {suite} (seed={self.settings.seed})")
        started = time.monotonic()
        produced = runner()
        self.results.extend(produced)

        elapsed = time.monotonic() - started
        counts = _count_status(produced)
        self.logger.info(f"套件 {suite} 完成: {len(produced)} 项, {counts}, 用时 {elapsed:.2f}s")
        for result in produced:
            if result.status is CheckStatus.FAIL:
                self.logger.error(f"[{result.check_id}] {result.message}")
        return produced

    # ---- lemma1: 规范形式的生日闭式 ----

    def run_lemma1(self) -> List[CheckResult]:
        s = self.settings
        store = self.store
        checked, witnesses = 0, []
        dyadics = [Dyadic(n, k) for k in range(s.lemma1_max_k + 1)
                   for n in range(-(s.lemma1_max_abs << k), (s.lemma1_max_abs << k) + 1)
                   if k == 0 or n % 2]
        for q in self._iter(dyadics, "lemma1"):
            fid = dali(store, q)
            measured, expected = generation(store, fid), canonical_birthday(q)
            checked += 1
            if measured != expected or value_of(store, fid) != q:
                witnesses.append({"q": str(q), "expected": expected, "measured": measured,
                                  "value": str(value_of(store, fid))})
        results = [self._result(
            "lemma1.canonical_birthday", "lemma1", not witnesses,
            f"generation(dali(q)) = ⌈|q|⌉ + k: 检查 {checked} 个二进有理数 "
            f"(k ≤ {s.lemma1_max_k}, |q| ≤ {s.lemma1_max_abs})",
            {"checked": checked, "witnesses": witnesses[:MAX_WITNESSES]})]

        rows = []
        for g in range(s.lemma1_max_k + 1):
            row = dyadics_of_birthday(g)
            expected_size = 1 if g == 0 else 2 ** g
            if len(row) != expected_size or any(canonical_birthday(q) != g for q in row):
                rows.append(g)
        results.append(self._result(
            "lemma1.dyadic_rows", "lemma1", not rows,
            f"第 0..{s.lemma1_max_k} 天诞生的二进有理数个数与生日",
            {"bad_rows": rows}))
        return results

    # ---- thm1: 加法生日可加 ----

    def run_thm1(self) -> List[CheckResult]:
        s = self.settings
        store = self.store
        results = []

        grid = addition_table(store)
        mismatches = [(a, b, int(grid.loc[a, b]), TABLE1_GRID[i][j])
                      for i, a in enumerate(TABLE1_OPERANDS) for j, b in enumerate(TABLE1_OPERANDS)
                      if int(grid.loc[a, b]) != TABLE1_GRID[i][j]]
        # 表头：操作数自身的 generation
        headers = [generation(store, dali(store, Dyadic.parse(label))) for label in TABLE1_OPERANDS]
        header_mismatches = [(label, measured, expected) for label, measured, expected
                             in zip(TABLE1_OPERANDS, headers, TABLE1_GENERATIONS) if measured != expected]
        results.append(self._result(
            "thm1.table1", "thm1", not mismatches and not header_mismatches,
            f"加法生日表 {len(TABLE1_OPERANDS)}×{len(TABLE1_OPERANDS)} 与已知表格逐格比较",
            {"mismatches": mismatches, "header_mismatches": header_mismatches,
             "operand_generations": headers}))

        witnesses, sub_witnesses, non_canonical = [], [], 0
        for _ in self._iter(range(s.thm1_pairs), "thm1"):
            x, y = self.factory.pair(s.thm1_max_generation)
            non_canonical += (not is_canonical(store, x)) + (not is_canonical(store, y))
            report = verify_birthday_addition(store, x, y)
            if not report.passed:
                witnesses.append(self._witness(report))
            difference = generation(store, sub(store, x, y))
            if difference != report.predicted:
                sub_witnesses.append({"x": print_form(store, x, WITNESS_DEPTH),
                                      "y": print_form(store, y, WITNESS_DEPTH),
                                      "predicted": report.predicted, "measured": difference})
        results.append(self._result(
            "thm1.random_pairs", "thm1", not witnesses,
            f"{s.thm1_pairs} 对随机形式 (generation ≤ {s.thm1_max_generation}) 满足 "
            f"g(x + y) = g(x) + g(y)",
            {"pairs": s.thm1_pairs, "non_canonical_operands": non_canonical,
             "witnesses": witnesses[:MAX_WITNESSES]}))
        results.append(self._result(
            "thm1.subtraction", "thm1", not sub_witnesses,
            "同一组随机形式满足 g(x − y) = g(x) + g(y)",
            {"pairs": s.thm1_pairs, "witnesses": sub_witnesses[:MAX_WITNESSES]}))

        # (1̄ − 1̄) + 1/2̄ 与 1/2̄ 同值，但 generation 为 4
        half = add(store, sub(store, dali(store, 1), dali(store, 1)), dali(store, Dyadic(1, 1)))
        report = verify_birthday_addition(store, half, dali(store, 1))
        results.append(self._result(
            "thm1.padded_half", "thm1",
            report.passed and report.measured == 5 and generation(store, half) == 4,
            f"非规范 1/2 (generation 4) + 1̄: {report}",
            {"predicted": report.predicted, "measured": report.measured}))
        return results

    # ---- thm2: 乘法递推与实际乘积 ----

    def run_thm2(self) -> List[CheckResult]:
        s = self.settings
        results = []

        size = len(TABLE2_GRID) - 1
        table = f_table(size)
        mismatches = [(n, m, int(table.loc[n, m]), TABLE2_GRID[n][m])
                      for n in range(size + 1) for m in range(size + 1)
                      if table.loc[n, m] != TABLE2_GRID[n][m]]
        results.append(self._result(
            "thm2.table2", "thm2", not mismatches,
            f"f(n, m) 与乘法生日表逐格比较 (n, m ≤ {size})", {"mismatches": mismatches}))
        results.append(self._recurrence_laws())

        for cell in self._measure_products():
            results.append(self._cell_result(cell))

        diagonal = [square_diagonal(n) for n in range(len(SQUARE_DIAGONAL))]
        results.append(self._result(
            "thm2.square_diagonal", "thm2", diagonal == SQUARE_DIAGONAL,
            f"g(n̄²) = f(n, n), n = 0..{len(SQUARE_DIAGONAL) - 1}: {diagonal}", {"values": diagonal}))

        errors = asymptote_errors(s.asymptote_from, s.asymptote_to)
        worst = float(errors['relative_error'].max())
        results.append(self._result(
            "thm2.diagonal_asymptote", "thm2", worst < s.asymptote_tolerance,
            f"|f(n,n)·√n / (a·λⁿ) − 1| < {s.asymptote_tolerance}, n = "
            f"{s.asymptote_from}..{s.asymptote_to}: 最大偏差 {worst:.4f}",
            {"max_relative_error": worst}))

        sequence = [pow2_generation(n) for n in range(1, len(POW2_GENERATIONS) + 1)]
        constant = pow2_constant_check()
        results.append(self._result(
            "thm2.pow2_sequence", "thm2",
            sequence == POW2_GENERATIONS and bool(constant['match'].all()),
            f"g(2̄ⁿ) = {sequence}，与 ⌊c^(2^n)⌋ 一致: {bool(constant['match'].all())}",
            {"sequence": sequence, "constant_check": constant.to_dict('records')}))

        two = dali(self.store, 2)
        measured = generation(self.store, mul(self.store, two, two))
        results.append(self._result(
            "thm2.pow2_product", "thm2", measured == pow2_generation(2),
            f"g(2̄ × 2̄) = {measured}，递推给出 {pow2_generation(2)}",
            {"measured": measured}))
        return results

    def _recurrence_laws(self) -> CheckResult:
        bound = 40
        table = f_table(bound)
        problems = []
        for n in range(bound + 1):
            for m in range(bound + 1):
                value = table.loc[n, m]
                if value != table.loc[m, n]:
                    problems.append(("symmetry", n, m))
                if n >= 1 and m >= 1 and ((n < bound and table.loc[n + 1, m] <= value)
                                          or (m < bound and table.loc[n, m + 1] <= value)):
                    problems.append(("monotone", n, m))
            if table.loc[1, n] != n:
                problems.append(("f(1,m)=m", 1, n))
            if table.loc[2, n] != n * (n + 1):
                problems.append(("f(2,m)=m(m+1)", 2, n))
        return self._result(
            "thm2.recurrence_laws", "thm2", not problems,
            f"f 对称、各变量严格递增，f(1,m) = m，f(2,m) = m(m+1)  (n, m ≤ {bound})",
            {"problems": problems[:MAX_WITNESSES]})

    def _measure_products(self) -> List[ProductMeasurement]:
        """逐格计算 (n, m) 网格（n ≤ m ≤ table2_max_generation）上的实际乘积

        f(n, m) ≤ feasibility_ceiling 的单元格按 f 从小到大实测；超过上限的单元格
        只给出递推值 (reason='ceiling')；时间预算用完后剩下的可行单元格同样只给
        递推值 (reason='time_budget')。结果按 (n, m) 排列并缓存，供 gonshor 复用。
        """
        if self._products is not None:
            return self._products
        s = self.settings
        store = self.store
        top = s.table2_max_generation
        grid = [(n, m) for n in range(top + 1) for m in range(n, top + 1)]
        feasible = sorted((cell for cell in grid if f(*cell) <= s.feasibility_ceiling),
                          key=lambda cell: (f(*cell), cell))
        started = time.monotonic()
        exhausted = False
        measurements: List[ProductMeasurement] = []

        for n, m in self._iter(feasible, "thm2"):
            for kind, (x, y) in self._cell_operands(n, m):
                predicted = f(n, m)
                if not exhausted and time.monotonic() - started > s.time_budget:
                    exhausted = True
                    self.logger.warning(f"时间预算 {s.time_budget}s 已用完，剩余单元格只给出递推值")
                if exhausted:
                    measurements.append(ProductMeasurement(n, m, kind, predicted, None,
                                                           CheckStatus.RECURRENCE_ONLY,
                                                           reason='time_budget'))
                    continue
                try:
                    report = verify_birthday_multiplication(store, x, y, s.feasibility_ceiling)
                except FeasibilityExceeded as e:
                    self.logger.warning(f"({n}, {m}) {e}")
                    measurements.append(ProductMeasurement(n, m, kind, predicted, None,
                                                           CheckStatus.RECURRENCE_ONLY,
                                                           reason='ceiling'))
                    continue
                status = CheckStatus.PASS if report.passed else CheckStatus.FAIL
                self.logger.debug(f"({n}, {m}) {kind}: {report}")
                measurements.append(ProductMeasurement(n, m, kind, predicted, report.measured,
                                                       status, x, y))

        beyond = [cell for cell in grid if f(*cell) > s.feasibility_ceiling]
        if beyond:
            self.logger.info(f"{len(beyond)} 个单元格超过可行性上限 {s.feasibility_ceiling}，只给出递推值")
        for n, m in beyond:
            for kind in self._cell_kinds(n, m):
                measurements.append(ProductMeasurement(n, m, kind, f(n, m), None,
                                                       CheckStatus.RECURRENCE_ONLY,
                                                       reason='ceiling'))

        measurements.sort(key=lambda cell: (cell.n, cell.m))
        self._products = measurements
        return measurements

    @staticmethod
    def _cell_kinds(n: int, m: int) -> List[str]:
        return ['canonical', 'non-canonical'] if n >= 2 or m >= 2 else ['canonical']

    def _cell_operands(self, n: int, m: int) -> List[Tuple[str, Tuple[FormId, FormId]]]:
        """每个单元格：一对规范整数，以及一对（能构造时）含非规范成员的操作数"""
        store = self.store
        pairs = [('canonical', (dali(store, n), dali(store, m)))]
        if n >= 2 or m >= 2:
            x = self.factory.non_canonical(n) if n >= 2 else self.factory.canonical(n)
            y = self.factory.non_canonical(m) if m >= 2 else self.factory.canonical(m)
            pairs.append(('non-canonical', (x, y)))
        return pairs

    def _cell_result(self, cell: ProductMeasurement) -> CheckResult:
        details = {"n": cell.n, "m": cell.m, "f": cell.predicted, "measured": cell.measured,
                   "operands": cell.operands}
        check_id = f"thm2.product[{cell.n},{cell.m}].{cell.operands}"
        if cell.status is CheckStatus.RECURRENCE_ONLY:
            details["reason"] = cell.reason
            why = ("超过可行性上限" if cell.reason == 'ceiling' else "时间预算已用完")
            return CheckResult(check_id, "thm2", cell.status,
                               f"f({cell.n}, {cell.m}) = {cell.predicted}，{why}，未做实际乘积", details)
        if cell.status is CheckStatus.FAIL:
            details["witness"] = {"x": print_form(self.store, cell.x, WITNESS_DEPTH),
                                  "y": print_form(self.store, cell.y, WITNESS_DEPTH)}
        return CheckResult(check_id, "thm2", cell.status,
                           f"g(x × y) = {cell.measured}，f({cell.n}, {cell.m}) = {cell.predicted}",
                           details)

    # ---- gonshor: 生日上界 ----

    def run_gonshor(self) -> List[CheckResult]:
        measured = [cell for cell in self._measure_products() if cell.measured is not None]
        violations = [(cell.n, cell.m, cell.measured) for cell in measured
                      if cell.measured > 3 ** (cell.n + cell.m)]
        results = [self._result(
            "gonshor.bound", "gonshor", not violations,
            f"{len(measured)} 个实际乘积满足 g(xy) ≤ 3^(g(x)+g(y))",
            {"products": len(measured), "violations": violations})]

        # g(xy) ≤ g(x)g(y) 的猜想上界被 2̄ × 3̄ 推翻
        store = self.store
        product = generation(store, mul(store, dali(store, 2), dali(store, 3)))
        exceeding = sorted({(cell.n, cell.m, cell.measured) for cell in measured
                            if cell.measured > cell.n * cell.m})
        results.append(self._result(
            "gonshor.product_bound_refuted", "gonshor", product == 12 and product > 2 * 3,
            f"g(2̄ × 3̄) = {product} > 2·3：g(xy) ≤ g(x)g(y) 不成立",
            {"g(2x3)": product, "cells_exceeding": exceeding}))
        return results

    # ---- laws: 代数定律 ----

    def run_laws(self) -> List[CheckResult]:
        s = self.settings
        store = self.store
        zero_id, one_id = store.zero_id, dali(store, 1)
        mirror = FormStore(self.contract.engine)
        results = []

        pairs = [self.factory.pair(s.laws_max_generation)
                 for _ in self._iter(range(s.laws_samples), "laws")]
        results.append(self._law("laws.add_commutative", "x + y == y + x（结构恒等）", pairs,
                                 lambda x, y: identical(store, add(store, x, y),
                                                        self._reversed(mirror, add, x, y))))
        results.append(self._law("laws.add_identity", "x + 0̄ == x（结构恒等）", pairs,
                                 lambda x, y: identical(store, add(store, x, zero_id), x)))
        results.append(self._law(
            "laws.negation", "g(−x) = g(x)，−(−x) == x，值取负", pairs,
            lambda x, y: (generation(store, negate(store, x)) == generation(store, x)
                          and identical(store, negate(store, negate(store, x)), x)
                          and value_of(store, negate(store, x)) == -value_of(store, x))))
        results.append(self._law(
            "laws.add_value", "v(x + y) = v(x) + v(y)", pairs,
            lambda x, y: value_of(store, add(store, x, y)) == value_of(store, x) + value_of(store, y)))
        results.append(self._law(
            "laws.order_value", "x ≤ y ⇔ v(x) ≤ v(y)", pairs,
            lambda x, y: leq(store, x, y) == (value_of(store, x) <= value_of(store, y))))

        triples = [self._triple(s.laws_triple_max_generation) for _ in range(s.laws_samples)]
        results.append(self._law(
            "laws.add_associative", "(x + y) + z ≡ x + (y + z)", triples,
            lambda x, y, z: equiv(store, add(store, add(store, x, y), z),
                                  add(store, x, add(store, y, z)))))

        mul_triples = [self._triple(s.laws_mul_max_generation) for _ in range(s.laws_mul_samples)]
        results.append(self._law(
            "laws.mul_commutative", "xy == yx（结构恒等）", mul_triples,
            lambda x, y, z: identical(store, mul(store, x, y), self._reversed(mirror, mul, x, y))))
        results.append(self._law(
            "laws.mul_identity", "x·1̄ == x，x·0̄ == 0̄（结构恒等）", mul_triples,
            lambda x, y, z: (identical(store, mul(store, x, one_id), x)
                             and identical(store, mul(store, x, zero_id), zero_id))))
        results.append(self._law(
            "laws.mul_value", "v(xy) = v(x)·v(y)", mul_triples,
            lambda x, y, z: value_of(store, mul(store, x, y)) == value_of(store, x) * value_of(store, y)))
        results.append(self._law(
            "laws.mul_associative", "(xy)z ≡ x(yz)", mul_triples,
            lambda x, y, z: equiv(store, mul(store, mul(store, x, y), z),
                                  mul(store, x, mul(store, y, z)))))
        results.append(self._law(
            "laws.distributive", "x(y + z) ≡ xy + xz", mul_triples,
            lambda x, y, z: equiv(store, mul(store, x, add(store, y, z)),
                                  add(store, mul(store, x, y), mul(store, x, z)))))

        results.append(self._worked_identities())
        return results

    def _triple(self, max_generation: int) -> Tuple[FormId, FormId, FormId]:
        rng = self.factory.rng
        return tuple(self.factory.form(rng.randint(0, max_generation)) for _ in range(3))

    def _reversed(self, mirror: FormStore, op, x: FormId, y: FormId) -> FormId:
        """在另一个 store 里先导入 y 再导入 x，按 (y, x) 顺序计算后导回"""
        ym = mirror.import_form(self.store, y)
        xm = mirror.import_form(self.store, x)
        return self.store.import_form(mirror, op(mirror, ym, xm))

    def _law(self, check_id: str, description: str, samples: List[Tuple[FormId, ...]],
             holds: Callable[..., bool]) -> CheckResult:
        witnesses = []
        for sample in samples:
            if not holds(*sample):
                witnesses.append([print_form(self.store, fid, WITNESS_DEPTH) for fid in sample])
        return self._result(check_id, "laws", not witnesses,
                            f"{description}: {len(samples)} 个样本",
                            {"samples": len(samples), "witnesses": witnesses[:MAX_WITNESSES]})

    def _worked_identities(self) -> CheckResult:
        store = self.store
        one, two, half = dali(store, 1), dali(store, 2), dali(store, Dyadic(1, 1))
        checks: Dict[str, bool] = {}

        checks["2̄ + 2̄ == dali(4)"] = identical(store, add(store, two, two), dali(store, 4))
        checks["1̄ + 1/2̄ 展开"] = strip_whitespace(print_form(store, add(store, one, half))) \
            == EXPANSION_ONE_PLUS_HALF
        checks["2̄ × 2̄ 展开"] = strip_whitespace(print_form(store, mul(store, two, two))) \
            == EXPANSION_TWO_TIMES_TWO
        difference = sub(store, one, one)
        checks["1̄ − 1̄ ≡ 0̄ 且不恒等"] = (equiv(store, difference, store.zero_id)
                                      and not identical(store, difference, store.zero_id))

        spread = store.make_form([dali(store, -1)], [one])
        total = add(store, half, spread)
        node = store.node(total)
        checks["1/2̄ + {−1̄|1̄} 的左右值"] = (
            sorted(store.value(i) for i in node.left) == [Dyadic(-1, 1), Dyadic(0)]
            and sorted(store.value(i) for i in node.right) == [Dyadic(1), Dyadic(3, 1)])

        checks["非负整数相加保持规范"] = all(
            is_canonical(store, add(store, dali(store, a), dali(store, b)))
            for a in range(6) for b in range(6))
        checks["2̄ − 1̄ 不是规范形式"] = not is_canonical(store, sub(store, two, one))

        failed = [name for name, ok in checks.items() if not ok]
        return self._result("laws.worked_identities", "laws", not failed,
                            f"{len(checks)} 个已知恒等式", {"failed": failed})

    # ---- 汇总与导出 ----

    def summary(self, results: Optional[List[CheckResult]] = None) -> Dict[str, Any]:
        results = self.results if results is None else results
        by_status: Dict[str, int] = {}
        by_suite: Dict[str, int] = {}
        for result in results:
            by_status[result.status.value] = by_status.get(result.status.value, 0) + 1
            by_suite[result.suite] = by_suite.get(result.suite, 0) + 1
        return {
            "by_status": by_status,
            "by_suite": by_suite,
            "has_failures": any(r.status is CheckStatus.FAIL for r in results),
            "recurrence_only": by_status.get(CheckStatus.RECURRENCE_ONLY.value, 0),
            "skipped_feasible": sum(1 for r in results if r.status is CheckStatus.RECURRENCE_ONLY
                                    and r.details.get("reason") != 'ceiling'),
            "pass_rate": by_status.get(CheckStatus.PASS.value, 0) / len(results) if results else 0,
        }

    def exit_code(self, results: Optional[List[CheckResult]] = None) -> ExitCode:
        summary = self.summary(results)
        if summary["has_failures"]:
            return ExitCode.COUNTEREXAMPLE
        if summary["skipped_feasible"]:
            return ExitCode.FEASIBILITY_ONLY
        return ExitCode.OK

    def save_report(self, report_path: Union[str, Path],
                    results: Optional[List[CheckResult]] = None) -> Path:
        """保存 JSON 报告"""
        results = self.results if results is None else results
        report_path = Path(report_path)
        report_path.parent.mkdir(parents=True, exist_ok=True)
        report_data = {
            "timestamp": datetime.now().isoformat(),
            "seed": self.settings.seed,
            "settings": self.contract.to_dict(),
            "total_checks": len(results),
            "summary": self.summary(results),
            "results": [r.to_dict() for r in results],
        }
        with open(report_path, 'w', encoding='utf-8') as f_out:
            json.dump(report_data, f_out, ensure_ascii=False, indent=2)
        self.logger.info(f"验证报告已保存到: {report_path}")
        return report_path

    def product_rows(self) -> pd.DataFrame:
        """实际乘积的机器可读行：n, m, f(n,m), measured, status"""
        rows = [{"n": c.n, "m": c.m, "f(n,m)": c.predicted, "measured": c.measured,
                 "status": c.status.value, "operands": c.operands}
                for c in (self._products or [])]
        return pd.DataFrame(rows, columns=["n", "m", "f(n,m)", "measured", "status", "operands"])

    def format_report(self, results: Optional[List[CheckResult]] = None) -> str:
        """纯文本报告"""
        results = self.results if results is None else results
        lines = [f"[{r.status.value:>15}] {r.check_id}: {r.message}" for r in results]
        summary = self.summary(results)
        lines.append(f"共 {len(results)} 项: {summary['by_status']}，通过率 {summary['pass_rate']:.1%}")
        return "\n".join(lines)

    # ---- 内部 ----

    def _result(self, check_id: str, suite: str, passed: bool, message: str,
                details: Dict[str, Any] = None) -> CheckResult:
        status = CheckStatus.PASS if passed else CheckStatus.FAIL
        return CheckResult(check_id, suite, status, message, details)

    def _witness(self, report: BirthdayReport) -> Dict[str, Any]:
        return {"x": print_form(self.store, report.x, WITNESS_DEPTH),
                "y": print_form(self.store, report.y, WITNESS_DEPTH),
                "predicted": report.predicted, "measured": report.measured}

    def _iter(self, iterable: Iterable, desc: str):
        return tqdm(iterable, desc=desc, disable=not self.progress)


def addition_table(store: FormStore, operands: List[str] = None) -> pd.DataFrame:
    """规范操作数两两相加的 generation 表"""
    operands = operands or TABLE1_OPERANDS
    forms = {label: dali(store, Dyadic.parse(label)) for label in operands}
    grid = [[generation(store, add(store, forms[a], forms[b])) for b in operands] for a in operands]
    return pd.DataFrame(grid, index=operands, columns=operands)


def multiplication_table(max_generation: int, store: FormStore = None,
                         ceiling: Optional[int] = None) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """f(n, m) 表与每格的状态表

    给出 store 时，对 f(n, m) ≤ ceiling 的单元格用规范整数 n̄ × m̄ 实测，
    状态为 PASS / FAIL；其余单元格为 RECURRENCE_ONLY。
    """
    values = f_table(max_generation)
    status = pd.DataFrame(CheckStatus.RECURRENCE_ONLY.value, index=values.index,
                          columns=values.columns)
    if store is None:
        return values, status
    ceiling = DEFAULT_CONTRACT.harness.feasibility_ceiling if ceiling is None else ceiling
    for n in range(max_generation + 1):
        for m in range(n, max_generation + 1):
            if values.loc[n, m] > ceiling:
                continue
            report = verify_birthday_multiplication(store, dali(store, n), dali(store, m), ceiling)
            outcome = CheckStatus.PASS.value if report.passed else CheckStatus.FAIL.value
            status.loc[n, m] = status.loc[m, n] = outcome
    return values, status


def _count_status(results: List[CheckResult]) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for result in results:
        counts[result.status.value] = counts.get(result.status.value, 0) + 1
    return counts


def _json_safe(obj):
    """转换为 JSON 可序列化的对象"""
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(item) for item in obj]
    if isinstance(obj, Dyadic):
        return str(obj)
    if hasattr(obj, 'item'):
        return obj.item()
    return obj
