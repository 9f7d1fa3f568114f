"""Canonical JSON encoding of traces: the product's wire format.

Canonical form: object keys sorted lexicographically, no insignificant
whitespace, UTF-8 bytes, and every digit value (operands, result, tokens,
basic-op values, carries) emitted as a string so consumers never face
numeric-width concerns.  Equal traces serialize byte-identically.
"""

from __future__ import annotations

import json
from typing import Any

from .digits import DigitString
from .model import (
    BasicOp,
    CarryNote,
    CellRef,
    CellWrite,
    GridBlock,
    GridSpec,
    MainStep,
    Metrics,
    Trace,
)

__all__ = [
    "canonical_bytes",
    "canonical_serialize",
    "trace_to_jsonable",
    "parse_trace",
    "digits_to_text",
    "digits_from_text",
]


def canonical_bytes(payload: Any) -> bytes:
    """Serialize any jsonable payload in canonical form."""
    return json.dumps(
        payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    ).encode("utf-8")


def digits_to_text(d: DigitString) -> str:
    """Most-significant-first rendering, leading zeros preserved as typed."""
    return str(d)


def digits_from_text(text: str) -> DigitString:
    return DigitString(tuple(int(ch) for ch in reversed(text)))


def _cell(cell: CellRef) -> dict[str, Any]:
    return {"pane": cell.pane, "row": cell.row, "col": cell.col}


def _grid(spec: GridSpec) -> dict[str, Any]:
    return {
        "rows": spec.rows,
        "cols": spec.cols,
        "blocks": [
            {
                "kind": b.kind,
                "rowRange": [b.row_start, b.row_end],
                "label": b.label,
            }
            for b in spec.blocks
        ],
    }


def _step(step: MainStep) -> dict[str, Any]:
    return {
        "index": step.index,
        "description": step.description,
        "highlights": [_cell(c) for c in step.highlights],
        "writes": [{"cell": _cell(w.cell), "token": w.token} for w in step.writes],
        "subOps": [
            {
                "expression": op.expression,
                "operands": [str(v) for v in op.operands],
                "result": str(op.result),
            }
            for op in step.sub_ops
        ],
        "carryNote": (
            None
            if step.carry_note is None
            else {
                "value": str(step.carry_note.value),
                "targetCol": step.carry_note.target_col,
            }
        ),
    }


def metrics_to_jsonable(metrics: Metrics) -> dict[str, int]:
    return {
        "digitMultiplications": metrics.digit_multiplications,
        "digitAdditions": metrics.digit_additions,
        "carries": metrics.carries,
        "mainSteps": metrics.main_steps,
        "basicOps": metrics.basic_ops,
    }


def trace_to_jsonable(trace: Trace) -> dict[str, Any]:
    return {
        "methodId": trace.method_id,
        "operands": [digits_to_text(d) for d in trace.operands],
        "layouts": {pane: _grid(spec) for pane, spec in trace.layouts.items()},
        "steps": [_step(s) for s in trace.steps],
        "result": digits_to_text(trace.result),
        "metrics": metrics_to_jsonable(trace.metrics),
        "latentDisplay": trace.latent_display,
    }


def canonical_serialize(trace: Trace) -> bytes:
    return canonical_bytes(trace_to_jsonable(trace))


def _parse_cell(data: dict[str, Any]) -> CellRef:
    return CellRef(pane=data["pane"], row=data["row"], col=data["col"])


def _parse_grid(data: dict[str, Any]) -> GridSpec:
    return GridSpec(
        rows=data["rows"],
        cols=data["cols"],
        blocks=tuple(
            GridBlock(
                kind=b["kind"],
                row_start=b["rowRange"][0],
                row_end=b["rowRange"][1],
                label=b["label"],
            )
            for b in data["blocks"]
        ),
    )


def _parse_step(data: dict[str, Any]) -> MainStep:
    note = data["carryNote"]
    return MainStep(
        index=data["index"],
        description=data["description"],
        highlights=tuple(_parse_cell(c) for c in data["highlights"]),
        writes=tuple(
            CellWrite(cell=_parse_cell(w["cell"]), token=w["token"])
            for w in data["writes"]
        ),
        sub_ops=tuple(
            BasicOp(
                expression=op["expression"],
                operands=tuple(int(v) for v in op["operands"]),
                result=int(op["result"]),
            )
            for op in data["subOps"]
        ),
        carry_note=(
            None
            if note is None
            else CarryNote(value=int(note["value"]), target_col=note["targetCol"])
        ),
    )


def parse_trace(data: bytes | str) -> Trace:
    """Inverse of canonical_serialize; re-runs all construction validation."""
    obj = json.loads(data)
    metrics = obj["metrics"]
    return Trace(
        method_id=obj["methodId"],
        operands=tuple(digits_from_text(t) for t in obj["operands"]),
        layouts={pane: _parse_grid(g) for pane, g in obj["layouts"].items()},
        steps=tuple(_parse_step(s) for s in obj["steps"]),
        result=digits_from_text(obj["result"]),
        metrics=Metrics(
            digit_multiplications=metrics["digitMultiplications"],
            digit_additions=metrics["digitAdditions"],
            carries=metrics["carries"],
            main_steps=metrics["mainSteps"],
            basic_ops=metrics["basicOps"],
        ),
        latent_display=obj["latentDisplay"],
    )
