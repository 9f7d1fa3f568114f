"""Command-line frontend: render traces as aligned text or canonical JSON.

Exit codes: 0 success, 2 invalid operands, 3 blocked by validation,
4 unknown method.  JSON output is the engine's canonical bytes, written
verbatim with no trailing newline so it can be compared bit for bit with
service responses.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .digits import DigitString, parse_operand, value_of
from .engine import (
    DEFAULT_MAX_DIGITS,
    ComparisonReport,
    TraceOptions,
    build_comparison,
    build_trace,
    comparison_to_jsonable,
    describe_method,
    descriptor_to_jsonable,
    list_methods,
)
from .errors import ApplicabilityError, ParseError, UnknownMethodError
from .model import Trace
from .render import final_grids, remainder_token
from .serialize import (
    canonical_bytes,
    canonical_serialize,
    digits_to_text,
    metrics_to_jsonable,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BLOCKED = 3
EXIT_UNKNOWN = 4

MAX_TEXT_WIDTH = 120


def _max_digits() -> int | None:
    raw = os.environ.get("SUTRA_MAX_DIGITS")
    if raw is None:
        return DEFAULT_MAX_DIGITS
    return int(raw)


def _parse_operands(raw: str) -> list[DigitString]:
    return [parse_operand(part) for part in raw.split(",")]


def _emit_json(payload_bytes: bytes) -> None:
    sys.stdout.buffer.write(payload_bytes)
    sys.stdout.buffer.flush()


def _clip(line: str) -> str:
    if len(line) <= MAX_TEXT_WIDTH:
        return line
    return line[: MAX_TEXT_WIDTH - 1] + "…"


def _grid_lines(trace: Trace) -> list[str]:
    lines: list[str] = []
    grids = final_grids(trace)
    for pane, spec in trace.layouts.items():
        lines.append(f"{pane} pane:")
        labels = {}
        for block in spec.blocks:
            for r in range(block.row_start, block.row_end + 1):
                labels[r] = block.label if r == block.row_start else ""
        label_width = max(len(v) for v in labels.values())
        cell_width = max(
            [1] + [len(t) for row in grids[pane] for t in row if t is not None]
        )
        for r, row in enumerate(grids[pane]):
            rendered = " ".join(
                (t if t is not None else "").rjust(cell_width) for t in row
            )
            lines.append(_clip(f"  {labels.get(r, '').rjust(label_width)} | {rendered}"))
        lines.append("")
    return lines


def _step_lines(trace: Trace) -> list[str]:
    show_latent = trace.latent_display == "both" or (
        trace.latent_display == "vedic-only" and "vedic" in trace.layouts
    )
    lines = ["steps:"]
    for step in trace.steps:
        lines.append(_clip(f"  {step.index + 1:>3}. {step.description}"))
        if show_latent:
            for op in step.sub_ops:
                lines.append(f"         {op.expression} = {op.result}")
    return lines


def _render_trace_text(trace: Trace) -> str:
    operand_text = ", ".join(digits_to_text(d) for d in trace.operands)
    header = f"{trace.method_id}: operands {operand_text} -> {digits_to_text(trace.result)}"
    remainder = remainder_token(trace)
    if remainder is not None:
        header += f" (remainder {remainder})"
    lines = [header, ""]
    lines += _grid_lines(trace)
    lines += _step_lines(trace)
    return "\n".join(lines)


def _result_line(label: str, trace: Trace) -> str:
    line = f"{label} {trace.method_id}: result {digits_to_text(trace.result)}"
    remainder = remainder_token(trace)
    if remainder is not None:
        line += f" (remainder {remainder})"
    return line


def _render_comparison_text(report: ComparisonReport) -> str:
    v, t = report.vedic, report.traditional
    lines = [
        f"operands: {', '.join(digits_to_text(d) for d in v.operands)}",
        _result_line("vedic      ", v),
        _result_line("traditional", t),
        "",
        f"{'metric':<22}{'vedic':>8}{'traditional':>13}{'delta':>8}",
    ]
    vm, tm = metrics_to_jsonable(v.metrics), metrics_to_jsonable(t.metrics)
    for key in sorted(vm):
        lines.append(
            f"{key:<22}{vm[key]:>8}{tm[key]:>13}{report.deltas[key]:>+8}"
        )
    return "\n".join(lines)


def _cmd_list(args: argparse.Namespace) -> int:
    methods = list_methods()
    if args.json:
        _emit_json(canonical_bytes([descriptor_to_jsonable(d) for d in methods]))
        return EXIT_OK
    print(f"{'id':<34}{'operation':<10}{'family':<13}{'level':<5}")
    for d in methods:
        print(f"{d.id:<34}{d.operation:<10}{d.family:<13}{d.level:<5}")
    return EXIT_OK


def _cmd_info(args: argparse.Namespace) -> int:
    descriptor = describe_method(args.id)
    if args.json:
        _emit_json(canonical_bytes(descriptor_to_jsonable(descriptor)))
        return EXIT_OK
    print(f"{descriptor.display_name} ({descriptor.id})")
    print(f"operation: {descriptor.operation}  family: {descriptor.family}  level: {descriptor.level}")
    print(f"operands: {descriptor.arity_min}"
          + (f"..{descriptor.arity_max}" if descriptor.arity_max != descriptor.arity_min else ""))
    print()
    print(descriptor.info_text)
    if descriptor.constraints:
        print()
        print("constraints:")
        for c in descriptor.constraints:
            print(f"  - {c}")
    return EXIT_OK


def _cmd_trace(args: argparse.Namespace) -> int:
    operands = _parse_operands(args.operands)
    latent = "vedic-only" if args.latent == "vedic" else args.latent
    options = TraceOptions(max_digits=_max_digits(), latent_display=latent)
    trace = build_trace(args.method, operands, options)
    if args.format == "json":
        _emit_json(canonical_serialize(trace))
    else:
        print(_render_trace_text(trace))
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    operands = _parse_operands(args.operands)
    options = TraceOptions(max_digits=_max_digits())
    report = build_comparison(args.operation, operands, options)
    if args.format == "json":
        _emit_json(canonical_bytes(comparison_to_jsonable(report)))
    else:
        print(_render_comparison_text(report))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sutratrace",
        description=(
            "Step traces for mental-arithmetic methods and their schoolbook "
            "counterparts."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list registered methods")
    p_list.add_argument("--json", action="store_true")
    p_list.set_defaults(func=_cmd_list)

    p_info = sub.add_parser("info", help="describe one method")
    p_info.add_argument("id")
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=_cmd_info)

    p_trace = sub.add_parser("trace", help="run a method and print its trace")
    p_trace.add_argument("--method", required=True)
    p_trace.add_argument("--operands", required=True, help="comma-separated digits")
    p_trace.add_argument("--format", choices=("text", "json"), default="text")
    p_trace.add_argument(
        "--latent",
        choices=("vedic", "vedic-only", "both", "none"),
        default="vedic-only",
    )
    p_trace.set_defaults(func=_cmd_trace)

    p_cmp = sub.add_parser("compare", help="run both families side by side")
    p_cmp.add_argument(
        "--operation", required=True, choices=("add", "subtract", "multiply", "sqrt")
    )
    p_cmp.add_argument("--operands", required=True, help="comma-separated digits")
    p_cmp.add_argument("--format", choices=("text", "json"), default="text")
    p_cmp.set_defaults(func=_cmd_compare)

    p_serve = sub.add_parser("serve", help="run the HTTP trace service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except ApplicabilityError as err:
        for warning in err.report.warnings:
            if warning.blocking:
                print(f"blocked: {warning.message}", file=sys.stderr)
                if warning.suggestion:
                    print(f"  hint: {warning.suggestion}", file=sys.stderr)
        return EXIT_BLOCKED
    except UnknownMethodError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
