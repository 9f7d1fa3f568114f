from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sutratrace.digits import DigitString, pad_to_length, parse_operand, value_of
from sutratrace.errors import ArityError, NegativeResultError
from sutratrace.model import TIMES, MethodRun, recompute_metrics
from sutratrace.vedic import (
    complement_subtract,
    criss_cross_multiply,
    duplex_sqrt,
    place_value_add,
)

operands = st.integers(0, 10**9 - 1).map(lambda n: parse_operand(str(n)))


def products_in_order(run: MethodRun) -> list[str]:
    """Single-digit product expressions, in emission order."""
    out = []
    for step in run.steps:
        for op in step.sub_ops:
            if op.expression.count(TIMES) == 1 and all(
                v < 10 for v in op.operands
            ):
                out.append(op.expression)
    return out


def test_crisscross_one_times_one():
    run = criss_cross_multiply(parse_operand("1"), parse_operand("1"))
    assert value_of(run.result) == 1
    assert run.metrics.main_steps == 1
    assert run.metrics.digit_multiplications == 1
    assert run.steps[0].sub_ops[0].expression == f"1{TIMES}1"


def test_crisscross_12_times_34():
    run = criss_cross_multiply(parse_operand("12"), parse_operand("34"))
    assert value_of(run.result) == 12 * 34 == 408
    # column sums 8, 10 (write 0 carry 1), 3+1=4
    assert [s.carry_note.value if s.carry_note else 0 for s in run.steps] == [0, 1, 0]
    col_sum = run.steps[1].sub_ops[-1]
    assert col_sum.expression == "4+6"
    closing = run.steps[2].sub_ops[-1]
    assert closing.expression == "3+1"


def test_crisscross_product_order_matches_convolution():
    # Most-significant a-digit first within each column.
    run = criss_cross_multiply(parse_operand("12"), parse_operand("34"))
    assert products_in_order(run) == [
        f"2{TIMES}4",
        f"1{TIMES}4",
        f"2{TIMES}3",
        f"1{TIMES}3",
    ]


def test_crisscross_columns_cover_convolution_pairs():
    a, b = parse_operand("804"), parse_operand("397")
    n = 3
    run = criss_cross_multiply(a, b)
    pa, pb = pad_to_length(a, n), pad_to_length(b, n)
    for k in range(2 * n - 1):
        expected = {
            (pa.digits[i], pb.digits[k - i])
            for i in range(n)
            if 0 <= k - i < n
        }
        got = {
            tuple(op.operands)
            for op in run.steps[k].sub_ops
            if op.expression.count(TIMES) == 1
        }
        assert got == expected


def test_crisscross_grouping_order_three_digits():
    # Highlighted operand columns per step: rightmost, right pair, all
    # three, left pair, leftmost.
    run = criss_cross_multiply(parse_operand("123"), parse_operand("456"))
    cols = run.layout.cols
    col_sets = [
        sorted({c.col for c in step.highlights}) for step in run.steps[:5]
    ]
    assert col_sets == [
        [cols - 1],
        [cols - 2, cols - 1],
        [cols - 3, cols - 2, cols - 1],
        [cols - 3, cols - 2],
        [cols - 3],
    ]


def test_crisscross_oracle_123_456():
    run = criss_cross_multiply(parse_operand("123"), parse_operand("456"))
    assert value_of(run.result) == 123 * 456 == 56088


def test_crisscross_pads_unequal_lengths():
    run = criss_cross_multiply(parse_operand("12"), parse_operand("345"))
    assert value_of(run.result) == 12 * 345
    assert run.metrics.digit_multiplications == 9  # n^2 after padding
    # the padding zero is revealed on the operand row
    pad_writes = [
        w for s in run.steps for w in s.writes if w.cell.row == 0 and w.token == "0"
    ]
    assert pad_writes


def test_crisscross_step_count_formula():
    for a, b in [(1, 1), (12, 34), (99, 99), (123, 456), (10, 10), (987654, 999999)]:
        da, db = parse_operand(str(a)), parse_operand(str(b))
        n = max(len(da), len(db))
        run = criss_cross_multiply(da, db)
        final_carry = 1 if len(run.result) > 2 * n - 1 else 0
        assert run.metrics.main_steps == 2 * n - 1 + final_carry
        assert run.metrics.digit_multiplications == n * n


@given(operands, operands)
def test_crisscross_oracle_equivalence(a, b):
    assert value_of(criss_cross_multiply(a, b).result) == value_of(a) * value_of(b)


@given(operands, operands, st.integers(0, 3))
def test_crisscross_padding_invariance(a, b, extra):
    n = max(len(a), len(b)) + extra
    plain = criss_cross_multiply(a, b)
    padded = criss_cross_multiply(pad_to_length(a, n), pad_to_length(b, n))
    assert value_of(plain.result) == value_of(padded.result)


@given(operands, operands)
def test_crisscross_commutative_value(a, b):
    assert value_of(criss_cross_multiply(a, b).result) == value_of(
        criss_cross_multiply(b, a).result
    )


def test_placevalue_identity():
    run = place_value_add([parse_operand("0"), parse_operand("7")])
    assert value_of(run.result) == 7


def test_placevalue_999_plus_1():
    run = place_value_add([parse_operand("999"), parse_operand("1")])
    assert value_of(run.result) == 1000
    assert run.metrics.main_steps == 4  # 3 columns + closing carry
    assert run.metrics.carries == 3


def test_placevalue_three_operands():
    run = place_value_add([parse_operand(t) for t in ("123", "456", "789")])
    assert value_of(run.result) == 123 + 456 + 789 == 1368


def test_placevalue_arity_errors():
    with pytest.raises(ArityError):
        place_value_add([parse_operand("1")])
    with pytest.raises(ArityError):
        place_value_add([parse_operand("1")] * 11)


def test_placevalue_step_count_formula():
    cases = [
        ["5", "5"],
        ["123", "9"],
        ["999", "1"],
        ["1", "2", "3"],
        ["999999", "999999", "999999"],
    ]
    for texts in cases:
        ops = [parse_operand(t) for t in texts]
        run = place_value_add(ops)
        max_len = max(len(d) for d in ops)
        closing = 1 if sum(value_of(d) for d in ops) >= 10**max_len else 0
        assert run.metrics.main_steps == max_len + closing


@given(st.lists(operands, min_size=2, max_size=10))
def test_placevalue_oracle_equivalence(ops):
    assert value_of(place_value_add(ops).result) == sum(value_of(d) for d in ops)


def test_duplex_sqrt_zero():
    run = duplex_sqrt(parse_operand("0"))
    assert value_of(run.result) == 0
    assert run.remainder == 0


def test_duplex_sqrt_one():
    run = duplex_sqrt(parse_operand("1"))
    assert value_of(run.result) == 1
    assert run.remainder == 0


def test_duplex_sqrt_2025_and_2026():
    exact = duplex_sqrt(parse_operand("2025"))
    assert (value_of(exact.result), exact.remainder) == (45, 0)
    off = duplex_sqrt(parse_operand("2026"))
    assert (value_of(off.result), off.remainder) == (45, 1)


def test_duplex_sqrt_group_step_formula():
    rng = random.Random(7)
    for length in range(1, 7):
        for _ in range(40):
            text = "".join(rng.choice("0123456789") for _ in range(length))
            run = duplex_sqrt(parse_operand(text))
            adjustments = sum(
                1 for s in run.steps if s.description.startswith("Adjust")
            )
            group_steps = run.metrics.main_steps - adjustments
            assert group_steps == (length + 1) // 2, text


def test_duplex_sqrt_adjustment_is_explicit():
    # 10200: the naive second digit overdraws and is lowered; the trace
    # keeps the trial visible as a dedicated adjustment step.
    run = duplex_sqrt(parse_operand("10200"))
    assert (value_of(run.result), run.remainder) == (100, 200)
    assert any(s.description.startswith("Adjust") for s in run.steps)


def test_duplex_sqrt_leading_zeros():
    run = duplex_sqrt(parse_operand("0025"))
    assert value_of(run.result) == 5
    assert run.remainder == 0
    assert run.metrics.main_steps >= 2  # zero group + significant group


@given(st.integers(0, 10**9 - 1))
def test_duplex_sqrt_oracle(n):
    run = duplex_sqrt(parse_operand(str(n)))
    root = value_of(run.result)
    assert root == math.isqrt(n)
    assert run.remainder == n - root * root
    assert root * root <= n < (root + 1) * (root + 1)


def test_complement_subtract_identity():
    run = complement_subtract(parse_operand("123"), parse_operand("0"))
    assert value_of(run.result) == 123


def test_complement_subtract_pure_nikhilam():
    run = complement_subtract(parse_operand("1000"), parse_operand("456"))
    assert value_of(run.result) == 544


def test_complement_subtract_negative_raises():
    with pytest.raises(NegativeResultError):
        complement_subtract(parse_operand("123"), parse_operand("456"))


def test_complement_subtract_discard_step_present():
    run = complement_subtract(parse_operand("905"), parse_operand("87"))
    assert value_of(run.result) == 905 - 87
    assert run.steps[-1].description.startswith("Discard")


@given(operands, operands)
def test_complement_subtract_oracle(a, b):
    if value_of(a) < value_of(b):
        a, b = b, a
    run = complement_subtract(a, b)
    assert value_of(run.result) == value_of(a) - value_of(b)


@given(operands, operands)
def test_vedic_metrics_match_recomputation(a, b):
    run = criss_cross_multiply(a, b)
    assert recompute_metrics(run.steps) == run.metrics


@given(st.integers(0, 10**8))
def test_sqrt_metrics_match_recomputation(n):
    run = duplex_sqrt(parse_operand(str(n)))
    assert recompute_metrics(run.steps) == run.metrics
