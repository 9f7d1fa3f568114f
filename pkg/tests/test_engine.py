from __future__ import annotations

import json
from dataclasses import replace

import pytest

from sutratrace import engine
from sutratrace.digits import parse_operand, value_of
from sutratrace.engine import (
    TraceOptions,
    build_comparison,
    build_trace,
    describe_method,
    descriptor_to_jsonable,
    list_methods,
    validate,
)
from sutratrace.errors import (
    ApplicabilityError,
    MetricsMismatchError,
    UnknownMethodError,
)
from sutratrace.model import Metrics
from sutratrace.replay import replay
from sutratrace.serialize import canonical_bytes, canonical_serialize


def ops(*texts: str):
    return [parse_operand(t) for t in texts]


def test_registry_has_eight_methods():
    assert len(list_methods()) == 8


def test_registry_order_level_then_id():
    methods = list_methods()
    assert methods[0].level == 1 and methods[0].operation == "add"
    assert [(m.level, m.id) for m in methods] == sorted(
        (m.level, m.id) for m in methods
    )


def test_registry_closure():
    for descriptor in list_methods():
        assert describe_method(descriptor.id) == descriptor
        assert descriptor.info_text


def test_describe_crisscross_mentions_padding():
    d = describe_method("vedic.multiply.crisscross")
    assert "appending zeroes to the left" in d.info_text


def test_describe_unknown_method():
    with pytest.raises(UnknownMethodError):
        describe_method("nosuch")


def test_descriptor_round_trips_through_canonical_json():
    d = describe_method("vedic.sqrt.duplex")
    payload = json.loads(canonical_bytes(descriptor_to_jsonable(d)))
    assert payload["id"] == d.id
    assert payload["operandArity"] == [1, 1]
    assert payload["level"] == 3


def test_validate_negative_subtraction():
    report = validate("vedic.subtract.complement", ops("123", "456"))
    assert not report.ok
    assert report.warnings[0].code == "NEGATIVE_RESULT"
    assert report.warnings[0].blocking


def test_validate_padding_note_is_informational():
    report = validate("vedic.multiply.crisscross", ops("12", "345"))
    assert report.ok
    assert [w.code for w in report.warnings] == ["PADDING_APPLIED"]
    assert not report.warnings[0].blocking


def test_validate_arity():
    report = validate("vedic.add.placevalue", ops("1"))
    assert not report.ok
    assert report.warnings[0].code == "ARITY"


def test_validate_max_digits():
    report = validate("vedic.multiply.crisscross", ops("1" * 51, "2"))
    assert not report.ok
    assert any(w.code == "MAX_DIGITS" for w in report.warnings)
    relaxed = validate(
        "vedic.multiply.crisscross", ops("1" * 51, "2"), TraceOptions(max_digits=None)
    )
    assert relaxed.ok


def test_build_trace_add():
    t = build_trace("vedic.add.placevalue", ops("2", "3"))
    assert value_of(t.result) == 5
    replay(t)


def test_build_trace_multiply_oracle():
    t = build_trace("vedic.multiply.crisscross", ops("123", "456"))
    assert value_of(t.result) == 56088


def test_build_trace_sqrt_oracle():
    t = build_trace("vedic.sqrt.duplex", ops("2025"))
    assert value_of(t.result) == 45


def test_build_trace_normalizes_result():
    t = build_trace("traditional.subtract.borrow", ops("1000", "999"))
    assert t.result.digits == (1,)


def test_build_trace_blocked_raises():
    with pytest.raises(ApplicabilityError) as exc:
        build_trace("vedic.subtract.complement", ops("123", "456"))
    assert exc.value.report.warnings[0].code == "NEGATIVE_RESULT"


def test_build_trace_unknown_method():
    with pytest.raises(UnknownMethodError):
        build_trace("nosuch", ops("1"))


def test_build_trace_latent_display_option():
    t = build_trace(
        "vedic.add.placevalue", ops("2", "3"), TraceOptions(latent_display="both")
    )
    assert t.latent_display == "both"


def test_comparison_multiply():
    report = build_comparison("multiply", ops("12", "34"))
    assert value_of(report.vedic.result) == value_of(report.traditional.result) == 408
    assert set(report.deltas) == {
        "digitMultiplications",
        "digitAdditions",
        "carries",
        "mainSteps",
        "basicOps",
    }


def test_comparison_sqrt_zero():
    report = build_comparison("sqrt", ops("0"))
    assert value_of(report.vedic.result) == value_of(report.traditional.result) == 0


def test_comparison_padding_changes_multiplication_count():
    report = build_comparison("multiply", ops("12", "345"))
    assert report.vedic.metrics.digit_multiplications == 9
    assert report.traditional.metrics.digit_multiplications == 6
    assert report.deltas["digitMultiplications"] == 3


def test_comparison_names_failing_family():
    with pytest.raises(ApplicabilityError) as exc:
        build_comparison("subtract", ops("123", "456"))
    assert exc.value.family == "vedic"


def test_comparison_unknown_operation():
    with pytest.raises(UnknownMethodError):
        build_comparison("modulo", ops("1", "2"))


def test_build_trace_deterministic_bytes():
    a = canonical_serialize(build_trace("vedic.multiply.crisscross", ops("12", "34")))
    b = canonical_serialize(build_trace("vedic.multiply.crisscross", ops("12", "34")))
    assert a == b


def test_metrics_gate_rejects_lying_implementation(monkeypatch):
    entry = engine._REGISTRY["vedic.add.placevalue"]

    def lying(operands):
        run = entry.impl(operands)
        wrong = Metrics(
            digit_multiplications=run.metrics.digit_multiplications + 1,
            digit_additions=run.metrics.digit_additions,
            carries=run.metrics.carries,
            main_steps=run.metrics.main_steps,
            basic_ops=run.metrics.basic_ops,
        )
        return replace(run, metrics=wrong)

    monkeypatch.setitem(
        engine._REGISTRY, "vedic.add.placevalue", engine._Entry(entry.descriptor, lying)
    )
    with pytest.raises(MetricsMismatchError):
        build_trace("vedic.add.placevalue", ops("2", "3"))
