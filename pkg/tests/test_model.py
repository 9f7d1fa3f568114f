from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sutratrace.digits import DigitString
from sutratrace.errors import ReplayError
from sutratrace.model import (
    MINUS,
    PLUS,
    TIMES,
    BasicOp,
    CarryNote,
    CellRef,
    CellWrite,
    GridBlock,
    GridSpec,
    MainStep,
    Metrics,
    Trace,
    evaluate_expression,
    expression_literals,
    flatten_basic_ops,
    recompute_metrics,
)
from sutratrace.replay import replay
from sutratrace.serialize import canonical_serialize, parse_trace


def times(*parts: int) -> str:
    return TIMES.join(str(p) for p in parts)


def test_evaluate_plain_number():
    assert evaluate_expression("8") == 8


def test_evaluate_product():
    assert evaluate_expression(f"4{TIMES}6") == 24


def test_evaluate_sum_chain():
    assert evaluate_expression("4+6+1") == 11


def test_evaluate_minus():
    assert evaluate_expression(f"10{MINUS}6") == 4


def test_evaluate_precedence():
    # 20×4+5 = 85, not 20×9
    assert evaluate_expression(f"20{TIMES}4+5") == 85


def test_evaluate_duplex_shape():
    assert evaluate_expression(f"2{TIMES}3{TIMES}5+4{TIMES}4") == 46


@pytest.mark.parametrize("bad", ["", "+", f"4{TIMES}", f"{TIMES}4", "4 5", "4//2"])
def test_evaluate_rejects_malformed(bad):
    with pytest.raises(ValueError):
        evaluate_expression(bad)


@given(st.lists(st.integers(0, 99), min_size=1, max_size=5), st.data())
def test_evaluator_agrees_with_python(values, data):
    ops = [
        data.draw(st.sampled_from([PLUS, TIMES])) for _ in range(len(values) - 1)
    ]
    expr = str(values[0])
    pythonic = str(values[0])
    for op, v in zip(ops, values[1:]):
        expr += f"{op}{v}"
        pythonic += ("+" if op == PLUS else "*") + str(v)
    assert evaluate_expression(expr) == eval(pythonic)
    assert expression_literals(expr) == tuple(values)


def test_basicop_validates_result():
    BasicOp.of(f"4{TIMES}6")
    with pytest.raises(ValueError):
        BasicOp(expression=f"4{TIMES}6", operands=(4, 6), result=25)


def test_basicop_validates_operands():
    with pytest.raises(ValueError):
        BasicOp(expression=f"4{TIMES}6", operands=(4, 7), result=24)


def test_gridspec_rejects_overlapping_blocks():
    with pytest.raises(ValueError):
        GridSpec(
            rows=3,
            cols=2,
            blocks=(
                GridBlock("operand-row", 0, 1, "a"),
                GridBlock("result-row", 1, 1, "b"),
            ),
        )


def test_gridspec_rejects_out_of_bounds_block():
    with pytest.raises(ValueError):
        GridSpec(rows=2, cols=2, blocks=(GridBlock("result-row", 1, 2, "r"),))


def _tiny_trace(result_token: str = "0", description: str = "write the result") -> Trace:
    layout = GridSpec(
        rows=2,
        cols=1,
        blocks=(
            GridBlock("operand-row", 0, 0, "operands"),
            GridBlock("result-row", 1, 1, "result"),
        ),
    )
    step = MainStep(
        index=0,
        description=description,
        writes=(CellWrite(CellRef("vedic", 1, 0), result_token),),
    )
    return Trace(
        method_id="test.tiny",
        operands=(DigitString((0,)),),
        layouts={"vedic": layout},
        steps=(step,),
        result=DigitString((0,)),
        metrics=recompute_metrics((step,)),
    )


def test_replay_single_zero_write():
    grids = replay(_tiny_trace())
    assert grids["vedic"][1][0] == "0"


def test_replay_rejects_double_write():
    base = _tiny_trace()
    dup = MainStep(
        index=1,
        description="write again",
        writes=(CellWrite(CellRef("vedic", 1, 0), "0"),),
    )
    bad = Trace(
        method_id=base.method_id,
        operands=base.operands,
        layouts=base.layouts,
        steps=base.steps + (dup,),
        result=base.result,
        metrics=recompute_metrics(base.steps + (dup,)),
    )
    err = pytest.raises(ReplayError, replay, bad).value
    assert err.step_index == 1


def test_replay_rejects_out_of_bounds():
    base = _tiny_trace()
    oob = MainStep(
        index=1,
        description="off the grid",
        writes=(CellWrite(CellRef("vedic", 5, 0), "1"),),
    )
    bad = Trace(
        method_id=base.method_id,
        operands=base.operands,
        layouts=base.layouts,
        steps=base.steps + (oob,),
        result=base.result,
        metrics=recompute_metrics(base.steps + (oob,)),
    )
    with pytest.raises(ReplayError):
        replay(bad)


def test_replay_rejects_result_mismatch():
    with pytest.raises(ReplayError):
        replay(_tiny_trace(result_token="5"))


def test_replay_rejects_unordered_steps():
    base = _tiny_trace()
    extra = MainStep(index=0, description="same index again")
    bad = Trace(
        method_id=base.method_id,
        operands=base.operands,
        layouts=base.layouts,
        steps=base.steps + (extra,),
        result=base.result,
        metrics=recompute_metrics(base.steps + (extra,)),
    )
    with pytest.raises(ReplayError):
        replay(bad)


def test_serialization_is_deterministic():
    assert canonical_serialize(_tiny_trace()) == canonical_serialize(_tiny_trace())


def test_serialization_round_trip():
    t = _tiny_trace()
    assert parse_trace(canonical_serialize(t)) == t


def test_serialization_locality_of_description_change():
    a = json.loads(canonical_serialize(_tiny_trace(description="first")))
    b = json.loads(canonical_serialize(_tiny_trace(description="second")))
    assert a["steps"][0]["description"] == "first"
    b["steps"][0]["description"] = "first"
    assert a == b


def test_canonical_form_has_sorted_keys_no_whitespace():
    raw = canonical_serialize(_tiny_trace()).decode("utf-8")
    assert ": " not in raw and ", " not in raw
    keys = list(json.loads(raw).keys())
    assert keys == sorted(keys)


def test_digit_values_serialized_as_strings():
    payload = json.loads(canonical_serialize(_tiny_trace()))
    assert payload["result"] == "0"
    assert payload["operands"] == ["0"]
    assert isinstance(payload["steps"][0]["writes"][0]["token"], str)


def test_flatten_empty():
    t = _tiny_trace()
    assert flatten_basic_ops(t) == []


def test_flatten_length_equals_basic_ops_metric():
    from sutratrace.digits import parse_operand
    from sutratrace.engine import build_trace

    t = build_trace(
        "vedic.multiply.crisscross", [parse_operand("87"), parse_operand("65")]
    )
    assert len(flatten_basic_ops(t)) == t.metrics.basic_ops


def test_flatten_crisscross_product_stream_order():
    from sutratrace.digits import parse_operand
    from sutratrace.engine import build_trace

    t = build_trace(
        "vedic.multiply.crisscross", [parse_operand("12"), parse_operand("34")]
    )
    products = [
        op.expression
        for op in flatten_basic_ops(t)
        if op.expression.count(TIMES) == 1
    ]
    assert products == [f"2{TIMES}4", f"1{TIMES}4", f"2{TIMES}3", f"1{TIMES}3"]


def test_round_trip_100_random_method_traces():
    import random

    from sutratrace.digits import parse_operand, value_of
    from sutratrace.engine import build_trace, list_methods

    rng = random.Random(3)

    def operand(max_len=6):
        return parse_operand(
            "".join(rng.choice("0123456789") for _ in range(rng.randint(1, max_len)))
        )

    methods = list_methods()
    built = 0
    while built < 100:
        descriptor = rng.choice(methods)
        if descriptor.operation == "sqrt":
            ops_ = [operand()]
        elif descriptor.operation == "add":
            ops_ = [operand() for _ in range(rng.randint(2, 10))]
        else:
            a, b = operand(), operand()
            if descriptor.operation == "subtract" and value_of(a) < value_of(b):
                a, b = b, a
            ops_ = [a, b]
        t = build_trace(descriptor.id, ops_)
        assert parse_trace(canonical_serialize(t)) == t
        built += 1


def test_metrics_recompute_counts():
    steps = (
        MainStep(
            index=0,
            description="column",
            sub_ops=(BasicOp.of(times(2, 4)), BasicOp.of("4+6+1")),
            carry_note=CarryNote(value=1, target_col=0),
        ),
        MainStep(index=1, description="plain", sub_ops=(BasicOp.of("9"),)),
    )
    m = recompute_metrics(steps)
    assert m == Metrics(
        digit_multiplications=1,
        digit_additions=2,
        carries=1,
        main_steps=2,
        basic_ops=3,
    )
