"""文本语法、打印、DOT 与 JSON 快照"""

import json

import pytest

from surreal_birthdays.calculus import OperandFactory, f
from surreal_birthdays.config import TABLE1_OPERANDS
from surreal_birthdays.core import (
    FormStore, FormSyntaxError, MalformedSnapshot, NonDyadicDenominator, NotANumber,
    add, dali, generation, identical, is_canonical, mul, value_of,
)
from surreal_birthdays.core.dyadic import Dyadic
from surreal_birthdays.formats import (
    evaluate, from_json, load_snapshot, parse, print_form, snapshot, strip_whitespace, to_dot,
    to_dot_many, to_json,
)
from surreal_birthdays.formats.parser import BinaryOp, DaliLiteral, FormLiteral, Negation


def _dyadics(max_k: int, max_abs: int):
    """k ≤ max_k 且 |q| ≤ max_abs 的全部二进有理数"""
    return sorted({Dyadic.of(n, k) for k in range(max_k + 1)
                   for n in range(-(max_abs << k), (max_abs << k) + 1)})


class TestParser:

    def test_precedence(self):
        expr = parse("dali(1) + dali(2) * dali(3)")
        assert isinstance(expr, BinaryOp) and expr.op == '+'
        assert isinstance(expr.right, BinaryOp) and expr.right.op == '*'

    def test_negation_and_parentheses(self):
        expr = parse("-(dali(1) - dali(1/2))")
        assert isinstance(expr, Negation)
        assert expr.operand == BinaryOp('-', DaliLiteral(Dyadic(1)), DaliLiteral(Dyadic(1, 1)))

    def test_form_literal(self):
        assert parse("{ phi | phi }") == FormLiteral((), ())
        assert parse("{φ|φ}") == FormLiteral((), ())
        assert parse("{|}") == FormLiteral((), ())
        expr = parse("{ dali(-1), {phi|phi} | dali(1/2^3) }")
        assert expr.left == (DaliLiteral(Dyadic(-1)), FormLiteral((), ()))
        assert expr.right == (DaliLiteral(Dyadic(1, 3)),)

    def test_times_sign(self):
        assert parse("dali(2) × dali(3)") == parse("dali(2)*dali(3)")

    @pytest.mark.parametrize("text, position", [
        ("{ phi | phi", 11),
        ("{3|5}", 1),
        ("dali(2) + 3", 10),
        ("dali(1) )", 8),
        ("dali(abc)", 5),
        ("", 0),
    ])
    def test_syntax_error_position(self, text, position):
        with pytest.raises(FormSyntaxError) as info:
            parse(text)
        assert info.value.position == position

    def test_non_dyadic_denominator(self):
        with pytest.raises(NonDyadicDenominator):
            parse("dali(1/3)")

    def test_deep_nesting(self):
        with pytest.raises(FormSyntaxError) as info:
            parse("(" * 5000 + "dali(1)" + ")" * 5000)
        assert "嵌套过深" in str(info.value)


class TestEvaluate:

    def test_sum_is_canonical_four(self, store):
        x = evaluate(store, "dali(2) + dali(2)")
        assert value_of(store, x) == Dyadic(4)
        assert generation(store, x) == 4
        assert identical(store, x, dali(store, 4))

    def test_product(self, store):
        x = evaluate(store, "dali(2) × dali(3)")
        assert value_of(store, x) == Dyadic(6)
        assert generation(store, x) == 12

    def test_form_literals(self, store, spread_zero):
        assert evaluate(store, "{ phi | phi }") == store.zero_id
        x = evaluate(store, "{ dali(-1) | dali(1) }")
        assert x == spread_zero
        assert not is_canonical(store, x)

    def test_negated_half(self, store):
        x = evaluate(store, "-dali(1/2)")
        assert value_of(store, x) == Dyadic(-1, 1)
        assert identical(store, x, dali(store, Dyadic(-1, 1)))

    def test_not_a_number(self, store):
        with pytest.raises(NotANumber):
            evaluate(store, "{ dali(1) | dali(0) }")


class TestPrinter:

    def test_zero_and_one(self, store, one):
        assert print_form(store, store.zero_id) == "{ phi | phi }"
        assert print_form(store, one) == "{ { phi | phi } | phi }"

    def test_members_ordered_by_value(self, store):
        x = evaluate(store, "{ dali(1), dali(-1) | dali(2) }")
        assert strip_whitespace(print_form(store, x)) == \
            "{{phi|{phi|phi}},{{phi|phi}|phi}|{{{phi|phi}|phi}|phi}}"

    def test_round_trip(self, store):
        for text in ("dali(2) * dali(3)", "(dali(1) - dali(1)) + dali(1/2)", "{dali(-1)|dali(1)}"):
            x = evaluate(store, text)
            assert evaluate(store, print_form(store, x)) == x

    def test_round_trip_canonical_dyadics(self, store):
        for q in _dyadics(max_k=3, max_abs=4):
            x = dali(store, q)
            assert evaluate(store, print_form(store, x)) == x, q

    @pytest.mark.slow
    def test_round_trip_canonical_dyadics_wide(self, store):
        for q in _dyadics(max_k=6, max_abs=8):
            x = dali(store, q)
            assert evaluate(store, print_form(store, x)) == x, q

    def test_round_trip_addition_table(self, store):
        forms = [dali(store, Dyadic.parse(label)) for label in TABLE1_OPERANDS]
        for a in forms:
            for b in forms:
                x = add(store, a, b)
                assert evaluate(store, print_form(store, x)) == x

    @pytest.mark.parametrize("ceiling", [
        6,
        pytest.param(12, marks=pytest.mark.slow),
    ])
    def test_round_trip_products(self, store, ceiling):
        factory = OperandFactory(store, seed=7)
        cells = [(n, m) for n in range(7) for m in range(n, 7) if f(n, m) <= ceiling]
        for n, m in cells:
            pairs = [(dali(store, n), dali(store, m))]
            if n >= 2 or m >= 2:
                pairs.append((factory.non_canonical(n) if n >= 2 else factory.canonical(n),
                              factory.non_canonical(m) if m >= 2 else factory.canonical(m)))
            for x, y in pairs:
                product = mul(store, x, y)
                assert evaluate(store, print_form(store, product)) == product, (n, m)

    def test_depth_limit(self, store, half):
        assert print_form(store, half, 0) == "<1/2>"
        assert print_form(store, half, 1) == "{ <0> | <1> }"
        assert print_form(store, store.zero_id, 1) == "{ phi | phi }"
        with pytest.raises(ValueError):
            print_form(store, half, -1)

    def test_deep_form(self, store):
        deep = dali(store, 1500)
        assert print_form(store, deep, 2) == "{ { <1498> | phi } | phi }"
        text = print_form(store, deep)
        assert text.count("{") == 1501
        assert text.count("phi") == 1502


class TestDotExport:

    def test_boxes_and_edges(self, store, spread_zero):
        source = to_dot(store, spread_zero)
        assert source.count("label=") == 4
        assert source.count("color=red") == 2
        assert source.count("color=blue") == 2
        assert "shape=record" in source

    def test_deterministic(self):
        first = FormStore()
        x = evaluate(first, "{ dali(-1) | dali(1) }")
        second = FormStore()
        dali(second, -3)
        y = evaluate(second, "{ dali(-1) | dali(1) }")
        assert to_dot(first, x) == to_dot(first, x) == to_dot(second, y)

    def test_shared_nodes_drawn_once(self, store):
        roots = [dali(store, q) for q in (Dyadic(1, 1), Dyadic(3, 2))]
        source = to_dot_many(store, roots)
        # 0, 1, 1/2, 3/4
        assert source.count("label=") == 4


class TestJsonSnapshot:

    def test_structure(self, store, half):
        data = snapshot(store, half)
        assert data["root"] == 2
        assert [node["value"] for node in data["nodes"]] == ["0", "1", "1/2"]
        assert data["nodes"][2] == {"id": 2, "left": [0], "right": [1], "value": "1/2", "generation": 2}

    def test_round_trip_into_fresh_store(self, store):
        x = mul(store, dali(store, 2), dali(store, 3))
        text = to_json(store, x)
        other = FormStore()
        y = from_json(other, text)
        assert generation(other, y) == 12
        assert value_of(other, y) == Dyadic(6)
        assert to_json(other, y) == text

    def test_round_trip_same_store(self, store, spread_zero):
        assert from_json(store, to_json(store, spread_zero, indent=2)) == spread_zero

    @pytest.mark.parametrize("data", [
        [],
        {"root": 0},
        {"root": True, "nodes": [{"id": 0, "left": [], "right": []}]},
        {"root": 1, "nodes": [{"id": 0, "left": [], "right": []}]},
        {"root": 0, "nodes": [{"id": 0, "left": [], "right": []}, {"id": 0, "left": [], "right": []}]},
        {"root": 1, "nodes": [{"id": 1, "left": [0], "right": []}, {"id": 0, "left": [], "right": []}]},
        {"root": 1, "nodes": [{"id": 0, "left": [], "right": []}, {"id": 1, "left": [0], "right": [0]}]},
        {"root": 0, "nodes": [{"id": 0, "left": [], "right": [], "value": "1"}]},
        {"root": 0, "nodes": [{"id": 0, "left": [], "right": [], "generation": 3}]},
        {"root": 0, "nodes": [{"id": 0, "left": "x", "right": []}]},
    ])
    def test_malformed(self, store, data):
        with pytest.raises(MalformedSnapshot):
            load_snapshot(store, data)

    def test_invalid_json_text(self, store):
        with pytest.raises(MalformedSnapshot):
            from_json(store, "{not json")

    def test_written_file(self, store, tmp_path, half):
        path = tmp_path / "half.json"
        path.write_text(to_json(store, half, indent=2), encoding='utf-8')
        loaded = json.loads(path.read_text(encoding='utf-8'))
        assert load_snapshot(FormStore(), loaded) is not None
