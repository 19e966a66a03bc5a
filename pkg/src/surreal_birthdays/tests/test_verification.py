"""生日定理校验与验证套件"""

import json

import pytest

from surreal_birthdays.calculus import (
    CheckResult, VerificationHarness, addition_table, multiplication_table,
    verify_birthday_addition, verify_birthday_multiplication,
)
from surreal_birthdays.config import TABLE1_GENERATIONS, TABLE1_GRID, TABLE1_OPERANDS
from surreal_birthdays.contracts import CheckStatus, EngineContract, ExitCode, HarnessSettings
from surreal_birthdays.core import FeasibilityExceeded, add, dali, sub, zero
from surreal_birthdays.core.dyadic import Dyadic


def small_contract(**overrides) -> EngineContract:
    harness = HarnessSettings(thm1_pairs=30, thm1_max_generation=5, laws_samples=20,
                              laws_mul_samples=5, feasibility_ceiling=12, table2_max_generation=4,
                              lemma1_max_k=3, lemma1_max_abs=4)
    return EngineContract(harness=harness).with_overrides(**overrides)


class TestSingleChecks:

    def test_addition_three_quarters(self, store):
        q = dali(store, Dyadic(3, 2))
        report = verify_birthday_addition(store, q, q)
        assert report.passed
        assert (report.x_generation, report.y_generation, report.measured) == (3, 3, 6)

    def test_addition_with_zero(self, store, half):
        report = verify_birthday_addition(store, zero(store), half)
        assert report.passed and report.predicted == 2

    def test_addition_non_canonical_half(self, store, one, half):
        padded = add(store, sub(store, one, one), half)
        report = verify_birthday_addition(store, padded, one)
        assert report.passed
        assert (report.x_generation, report.measured) == (4, 5)

    def test_multiplication(self, store):
        report = verify_birthday_multiplication(store, dali(store, 2), dali(store, 3))
        assert report.passed and report.measured == 12
        assert "f(2, 3)" in str(report)

    def test_multiplication_by_one(self, store, spread_zero):
        report = verify_birthday_multiplication(store, dali(store, 1), spread_zero)
        assert report.passed and report.measured == 2

    def test_feasibility_guard(self, store):
        with pytest.raises(FeasibilityExceeded) as info:
            verify_birthday_multiplication(store, dali(store, 4), dali(store, 4), ceiling=64)
        assert info.value.predicted == 160

    @pytest.mark.slow
    def test_three_times_three(self, store):
        report = verify_birthday_multiplication(store, dali(store, 3), dali(store, 3))
        assert report.passed and report.measured == 31


class TestTables:

    def test_addition_table(self, store):
        table = addition_table(store)
        assert [list(table.loc[a]) for a in TABLE1_OPERANDS] == TABLE1_GRID
        assert table.loc['3/4', '3/4'] == 6

    def test_multiplication_table_without_products(self):
        values, status = multiplication_table(0)
        assert values.shape == (1, 1) and values.loc[0, 0] == 0
        assert status.loc[0, 0] == CheckStatus.RECURRENCE_ONLY.value

    def test_multiplication_table_with_products(self, store):
        values, status = multiplication_table(3, store, ceiling=12)
        assert status.loc[2, 3] == CheckStatus.PASS.value
        assert status.loc[3, 2] == CheckStatus.PASS.value
        assert status.loc[3, 3] == CheckStatus.RECURRENCE_ONLY.value


class TestHarness:

    def test_lemma1(self):
        harness = VerificationHarness(small_contract())
        results = harness.run('lemma1')
        assert {r.check_id for r in results} == {"lemma1.canonical_birthday", "lemma1.dyadic_rows"}
        assert all(r.status is CheckStatus.PASS for r in results)
        assert harness.exit_code(results) is ExitCode.OK

    def test_thm1(self):
        harness = VerificationHarness(small_contract())
        results = harness.run('thm1')
        assert all(r.status is CheckStatus.PASS for r in results), harness.format_report(results)
        pairs = next(r for r in results if r.check_id == "thm1.random_pairs")
        assert pairs.details["pairs"] == 30
        table = next(r for r in results if r.check_id == "thm1.table1")
        assert table.details["operand_generations"] == TABLE1_GENERATIONS
        assert table.details["mismatches"] == [] and table.details["header_mismatches"] == []

    def test_thm2_small_grid(self):
        harness = VerificationHarness(small_contract())
        results = harness.run('thm2')
        statuses = {r.status for r in results}
        assert statuses <= {CheckStatus.PASS, CheckStatus.RECURRENCE_ONLY}, harness.format_report(results)
        assert harness.exit_code(results) is ExitCode.OK
        cells = {r.check_id: r for r in results if r.check_id.startswith("thm2.product")}
        assert cells["thm2.product[2,3].canonical"].status is CheckStatus.PASS
        assert cells["thm2.product[2,3].non-canonical"].status is CheckStatus.PASS
        assert "thm2.product[1,1].non-canonical" not in cells
        # n ≤ m ≤ 4 的网格全部出现，超过上限的单元格只给递推值
        assert {(r.details["n"], r.details["m"]) for r in cells.values()} == \
            {(n, m) for n in range(5) for m in range(n, 5)}
        beyond = cells["thm2.product[3,3].canonical"]
        assert beyond.status is CheckStatus.RECURRENCE_ONLY
        assert beyond.details["reason"] == "ceiling" and beyond.details["f"] == 31
        rows = harness.product_rows()
        assert list(rows.columns[:5]) == ["n", "m", "f(n,m)", "measured", "status"]
        assert list(zip(rows["n"], rows["m"])) == sorted(zip(rows["n"], rows["m"]))
        measured = rows[rows["status"] == CheckStatus.PASS.value]
        assert len(measured) and (measured["f(n,m)"] == measured["measured"]).all()
        assert (rows[rows["f(n,m)"] > 12]["status"] == CheckStatus.RECURRENCE_ONLY.value).all()

    @pytest.mark.slow
    def test_thm2_default_grid_measures_up_to_ceiling(self):
        harness = VerificationHarness()
        results = harness.run('thm2')
        cells = {r.check_id: r for r in results if r.check_id.startswith("thm2.product")}
        for check_id, measured in [("thm2.product[2,6].canonical", 42),
                                   ("thm2.product[3,4].canonical", 64),
                                   ("thm2.product[3,4].non-canonical", 64)]:
            assert cells[check_id].status is CheckStatus.PASS, cells[check_id].message
            assert cells[check_id].details["measured"] == measured
        assert cells["thm2.product[4,4].canonical"].details["reason"] == "ceiling"
        assert harness.exit_code(results) is ExitCode.OK

    def test_gonshor_reuses_products(self):
        harness = VerificationHarness(small_contract())
        results = harness.run('gonshor')
        assert all(r.status is CheckStatus.PASS for r in results)
        refuted = next(r for r in results if r.check_id == "gonshor.product_bound_refuted")
        assert refuted.details["g(2x3)"] == 12

    def test_laws(self):
        harness = VerificationHarness(small_contract())
        results = harness.run('laws')
        assert all(r.status is CheckStatus.PASS for r in results), harness.format_report(results)
        assert any(r.check_id == "laws.worked_identities" for r in results)

    def test_time_budget_gives_recurrence_only(self):
        harness = VerificationHarness(small_contract(time_budget=-1.0))
        results = harness.run('thm2')
        cells = [r for r in results if r.check_id.startswith("thm2.product")]
        assert cells and all(r.status is CheckStatus.RECURRENCE_ONLY for r in cells)
        assert {r.details["reason"] for r in cells if r.details["f"] <= 12} == {"time_budget"}
        assert harness.exit_code(results) is ExitCode.FEASIBILITY_ONLY

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            VerificationHarness(small_contract()).run('nope')

    def test_deterministic_given_seed(self):
        first = VerificationHarness(small_contract()).run('thm1')
        second = VerificationHarness(small_contract()).run('thm1')
        assert [(r.check_id, r.status, r.details) for r in first] == \
            [(r.check_id, r.status, r.details) for r in second]

    def test_counterexample_exit_code(self):
        harness = VerificationHarness(small_contract())
        failing = CheckResult("x", "laws", CheckStatus.FAIL, "forced")
        assert harness.exit_code([failing]) is ExitCode.COUNTEREXAMPLE

    def test_save_report(self, tmp_path):
        harness = VerificationHarness(small_contract())
        harness.run('lemma1')
        path = harness.save_report(tmp_path / "reports" / "lemma1.json")
        data = json.loads(path.read_text(encoding='utf-8'))
        assert data["total_checks"] == 2
        assert data["summary"]["pass_rate"] == 1.0
        assert data["results"][0]["status"] == "PASS"

    @pytest.mark.slow
    def test_full_thm2(self):
        harness = VerificationHarness()
        results = harness.run('thm2')
        assert all(r.status is CheckStatus.PASS for r in results), harness.format_report(results)
        assert "thm2.product[3,3].canonical" in {r.check_id for r in results}
