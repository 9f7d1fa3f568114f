"""Method registry, applicability validation, trace assembly, comparisons.

The single entry point every frontend calls.  The registry is built once at
import and never mutated; every operation here is a pure function of its
arguments, so traces are deterministic and safe to build concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import traditional, vedic
from .digits import DigitString, normalize, value_of
from .errors import (
    ApplicabilityError,
    ComparisonMismatchError,
    MetricsMismatchError,
    UnknownMethodError,
)
from .model import LatentDisplay, MethodRun, Trace, recompute_metrics
from .serialize import metrics_to_jsonable, trace_to_jsonable

__all__ = [
    "DEFAULT_MAX_DIGITS",
    "MethodDescriptor",
    "Warning_",
    "ApplicabilityReport",
    "ComparisonReport",
    "TraceOptions",
    "list_methods",
    "describe_method",
    "validate",
    "build_trace",
    "build_comparison",
    "descriptor_to_jsonable",
    "report_to_jsonable",
    "comparison_to_jsonable",
]

DEFAULT_MAX_DIGITS = 50  # keeps traces renderable; override via options


@dataclass(frozen=True, slots=True)
class MethodDescriptor:
    id: str
    operation: str  # add | subtract | multiply | sqrt
    family: str  # vedic | traditional
    display_name: str
    info_text: str
    level: int
    arity_min: int
    arity_max: int
    constraints: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class Warning_:
    code: str
    message: str
    suggestion: str
    blocking: bool


@dataclass(frozen=True, slots=True)
class ApplicabilityReport:
    ok: bool
    warnings: tuple[Warning_, ...]


@dataclass(frozen=True, slots=True)
class TraceOptions:
    max_digits: int | None = DEFAULT_MAX_DIGITS
    latent_display: LatentDisplay = "vedic-only"


@dataclass(frozen=True, slots=True)
class ComparisonReport:
    vedic: Trace
    traditional: Trace
    deltas: dict[str, int]  # vedic minus traditional, per metric


_Impl = Callable[[Sequence[DigitString]], MethodRun]


@dataclass(frozen=True, slots=True)
class _Entry:
    descriptor: MethodDescriptor
    impl: _Impl


_PAD_NOTE = (
    "Numbers with unequal digit counts are extended by appending zeroes to "
    "the left of the shorter one, so every column has a digit pair."
)

_REGISTRY: dict[str, _Entry] = {}


def _register(descriptor: MethodDescriptor, impl: _Impl) -> None:
    if descriptor.id in _REGISTRY:
        raise ValueError(f"duplicate method id {descriptor.id!r}")
    _REGISTRY[descriptor.id] = _Entry(descriptor, impl)


_register(
    MethodDescriptor(
        id="vedic.add.placevalue",
        operation="add",
        family="vedic",
        display_name="Place-value addition",
        info_text=(
            "Adds up to ten numbers one place value at a time: each column's "
            "digits are totalled, the units digit of the total is kept and "
            "the rest carries into the next place. Works for any "
            "non-negative whole numbers."
        ),
        level=1,
        arity_min=2,
        arity_max=10,
        constraints=("2 to 10 operands", "non-negative whole numbers only"),
    ),
    lambda ops: vedic.place_value_add(ops),
)
_register(
    MethodDescriptor(
        id="traditional.add.column",
        operation="add",
        family="traditional",
        display_name="Column addition",
        info_text=(
            "The familiar column method: add each column right to left, "
            "write the units digit and mark the carry above the next column."
        ),
        level=1,
        arity_min=2,
        arity_max=10,
        constraints=("2 to 10 operands", "non-negative whole numbers only"),
    ),
    lambda ops: traditional.column_add(ops),
)
_register(
    MethodDescriptor(
        id="vedic.multiply.crisscross",
        operation="multiply",
        family="vedic",
        display_name="Criss-cross multiplication (vertically and crosswise)",
        info_text=(
            "Multiplies two numbers column by column: the digit pairs whose "
            "places add up to the column's place are multiplied and summed, "
            "so each answer digit appears in one go without long partial "
            "rows. Requires numbers with an equal number of digits. "
            + _PAD_NOTE
        ),
        level=2,
        arity_min=2,
        arity_max=2,
        constraints=(
            "exactly 2 operands",
            "unequal lengths are padded with leading zeroes",
        ),
    ),
    lambda ops: vedic.criss_cross_multiply(ops[0], ops[1]),
)
_register(
    MethodDescriptor(
        id="traditional.multiply.long",
        operation="multiply",
        family="traditional",
        display_name="Long multiplication",
        info_text=(
            "Schoolbook long multiplication: one shifted partial product row "
            "per digit of the multiplier, then the rows are added column by "
            "column."
        ),
        level=2,
        arity_min=2,
        arity_max=2,
        constraints=("exactly 2 operands",),
    ),
    lambda ops: traditional.long_multiply(ops[0], ops[1]),
)
_register(
    MethodDescriptor(
        id="vedic.subtract.complement",
        operation="subtract",
        family="vedic",
        display_name="Ten's-complement subtraction (all from 9, last from 10)",
        info_text=(
            "Turns subtraction into addition: every digit of the subtrahend "
            "is taken from 9 and the last nonzero digit from 10, the "
            "complement is added to the minuend, and the leading overflow 1 "
            "is discarded. Requires the first operand to be at least the "
            "second."
        ),
        level=2,
        arity_min=2,
        arity_max=2,
        constraints=("exactly 2 operands", "first operand must not be smaller"),
    ),
    lambda ops: vedic.complement_subtract(ops[0], ops[1]),
)
_register(
    MethodDescriptor(
        id="traditional.subtract.borrow",
        operation="subtract",
        family="traditional",
        display_name="Borrow subtraction",
        info_text=(
            "Column subtraction right to left, borrowing 1 from the next "
            "place whenever a digit is too small. Requires the first operand "
            "to be at least the second."
        ),
        level=2,
        arity_min=2,
        arity_max=2,
        constraints=("exactly 2 operands", "first operand must not be smaller"),
    ),
    lambda ops: traditional.borrow_subtract(ops[0], ops[1]),
)
_register(
    MethodDescriptor(
        id="vedic.sqrt.duplex",
        operation="sqrt",
        family="vedic",
        display_name="Duplex square root",
        info_text=(
            "Finds the whole-number square root using the duplex: digits are "
            "grouped in pairs from the right, the first root digit is the "
            "largest whose square fits the leading group, and each further "
            "digit comes from dividing by twice the first digit after "
            "subtracting the duplex of the root digits found so far. Returns "
            "the floor root and the remainder."
        ),
        level=3,
        arity_min=1,
        arity_max=1,
        constraints=("exactly 1 operand",),
    ),
    lambda ops: vedic.duplex_sqrt(ops[0]),
)
_register(
    MethodDescriptor(
        id="traditional.sqrt.longdivision",
        operation="sqrt",
        family="traditional",
        display_name="Long-division square root",
        info_text=(
            "The classic digit-pair method: bring down two digits at a time "
            "and find the largest digit t such that (20 times the root so "
            "far, plus t) times t fits the running remainder."
        ),
        level=3,
        arity_min=1,
        arity_max=1,
        constraints=("exactly 1 operand",),
    ),
    lambda ops: traditional.long_division_sqrt(ops[0]),
)


def list_methods() -> list[MethodDescriptor]:
    """All registered methods, ordered by level then id."""
    return sorted(
        (e.descriptor for e in _REGISTRY.values()), key=lambda d: (d.level, d.id)
    )


def describe_method(method_id: str) -> MethodDescriptor:
    entry = _REGISTRY.get(method_id)
    if entry is None:
        raise UnknownMethodError(method_id)
    return entry.descriptor


def validate(
    method_id: str,
    operands: Sequence[DigitString],
    options: TraceOptions | None = None,
) -> ApplicabilityReport:
    """Check operands against the method's applicability constraints.

    Blocking warnings: wrong operand count, a < b for subtraction, and
    operands longer than the configured digit limit.  Criss-cross
    multiplication of unequal-length operands gets a non-blocking note that
    padding will be applied.
    """
    descriptor = describe_method(method_id)
    opts = options or TraceOptions()
    warnings: list[Warning_] = []
    if not descriptor.arity_min <= len(operands) <= descriptor.arity_max:
        expected = (
            str(descriptor.arity_min)
            if descriptor.arity_min == descriptor.arity_max
            else f"{descriptor.arity_min} to {descriptor.arity_max}"
        )
        warnings.append(
            Warning_(
                code="ARITY",
                message=(
                    f"{descriptor.display_name} takes {expected} operands, "
                    f"got {len(operands)}"
                ),
                suggestion=f"provide {expected} operands",
                blocking=True,
            )
        )
    if opts.max_digits is not None:
        for pos, operand in enumerate(operands):
            if len(operand) > opts.max_digits:
                warnings.append(
                    Warning_(
                        code="MAX_DIGITS",
                        message=(
                            f"operand {pos + 1} has {len(operand)} digits; "
                            f"the limit is {opts.max_digits}"
                        ),
                        suggestion="use shorter operands or raise the digit limit",
                        blocking=True,
                    )
                )
    if (
        descriptor.operation == "subtract"
        and len(operands) == 2
        and value_of(operands[0]) < value_of(operands[1])
    ):
        warnings.append(
            Warning_(
                code="NEGATIVE_RESULT",
                message=(
                    f"cannot subtract: {value_of(operands[1])} is larger "
                    f"than {value_of(operands[0])}"
                ),
                suggestion="swap the operands to subtract the smaller from the larger",
                blocking=True,
            )
        )
    if (
        method_id == "vedic.multiply.crisscross"
        and len(operands) == 2
        and len(operands[0]) != len(operands[1])
    ):
        warnings.append(
            Warning_(
                code="PADDING_APPLIED",
                message=(
                    "operands have unequal digit counts; the shorter one is "
                    "extended with zeroes on the left"
                ),
                suggestion="",
                blocking=False,
            )
        )
    ok = not any(w.blocking for w in warnings)
    return ApplicabilityReport(ok=ok, warnings=tuple(warnings))


def build_trace(
    method_id: str,
    operands: Sequence[DigitString],
    options: TraceOptions | None = None,
) -> Trace:
    """Run a method and assemble the full replayable trace.

    The engine recomputes metrics from the emitted steps and refuses any
    implementation whose self-reported counts disagree.
    """
    opts = options or TraceOptions()
    report = validate(method_id, operands, opts)
    if not report.ok:
        raise ApplicabilityError(report)
    run = _REGISTRY[method_id].impl(tuple(operands))
    recomputed = recompute_metrics(run.steps)
    if recomputed != run.metrics:
        raise MetricsMismatchError(
            f"{method_id} reported {run.metrics}, steps say {recomputed}"
        )
    return Trace(
        method_id=method_id,
        operands=tuple(operands),
        layouts={run.pane: run.layout},
        steps=run.steps,
        result=normalize(run.result),
        metrics=run.metrics,
        latent_display=opts.latent_display,
    )


_OPERATIONS = ("add", "subtract", "multiply", "sqrt")


def _method_for(operation: str, family: str) -> MethodDescriptor:
    for descriptor in list_methods():
        if descriptor.operation == operation and descriptor.family == family:
            return descriptor
    raise UnknownMethodError(f"{family}.{operation}")


def build_comparison(
    operation: str,
    operands: Sequence[DigitString],
    options: TraceOptions | None = None,
) -> ComparisonReport:
    """Run the vedic and traditional methods side by side on one input."""
    if operation not in _OPERATIONS:
        raise UnknownMethodError(operation)
    traces: dict[str, Trace] = {}
    for family in ("vedic", "traditional"):
        descriptor = _method_for(operation, family)
        report = validate(descriptor.id, operands, options)
        if not report.ok:
            raise ApplicabilityError(report, family=family)
        traces[family] = build_trace(descriptor.id, operands, options)
    v, t = traces["vedic"], traces["traditional"]
    if value_of(v.result) != value_of(t.result):
        raise ComparisonMismatchError(
            f"family results disagree: {value_of(v.result)} vs {value_of(t.result)}"
        )
    vm = metrics_to_jsonable(v.metrics)
    tm = metrics_to_jsonable(t.metrics)
    deltas = {key: vm[key] - tm[key] for key in vm}
    return ComparisonReport(vedic=v, traditional=t, deltas=deltas)


def descriptor_to_jsonable(descriptor: MethodDescriptor) -> dict[str, Any]:
    return {
        "id": descriptor.id,
        "operation": descriptor.operation,
        "family": descriptor.family,
        "displayName": descriptor.display_name,
        "infoText": descriptor.info_text,
        "level": descriptor.level,
        "operandArity": [descriptor.arity_min, descriptor.arity_max],
        "constraints": list(descriptor.constraints),
    }


def report_to_jsonable(report: ApplicabilityReport) -> dict[str, Any]:
    return {
        "ok": report.ok,
        "warnings": [
            {
                "code": w.code,
                "message": w.message,
                "suggestion": w.suggestion,
                "blocking": w.blocking,
            }
            for w in report.warnings
        ],
    }


def comparison_to_jsonable(comparison: ComparisonReport) -> dict[str, Any]:
    return {
        "vedic": trace_to_jsonable(comparison.vedic),
        "traditional": trace_to_jsonable(comparison.traditional),
        "deltas": dict(sorted(comparison.deltas.items())),
    }
