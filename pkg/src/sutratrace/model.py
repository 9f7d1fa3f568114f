"""Step-event data model: grids, writes, latent basic operations, traces.

Every visualized action is a MainStep; its elementary background
calculations are BasicOps whose expression strings re-evaluate exactly to
their stored results.  Grid cells are write-once, which is what makes a
trace replayable as a total validity check.

Coordinate conventions: CellRef rows/cols are display coordinates (col 0 is
the leftmost rendered column).  CarryNote.target_col is also a display
column.  Digit place k of an operand or result sits at display column
cols - 1 - k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .digits import DigitString

__all__ = [
    "TIMES",
    "PLUS",
    "MINUS",
    "display_col",
    "Pane",
    "CellRef",
    "GridBlock",
    "GridSpec",
    "BasicOp",
    "CellWrite",
    "CarryNote",
    "MainStep",
    "Metrics",
    "Trace",
    "MethodRun",
    "evaluate_expression",
    "expression_literals",
    "recompute_metrics",
    "flatten_basic_ops",
]

TIMES = "×"  # ×
PLUS = "+"
MINUS = "−"  # −


def display_col(place: int, cols: int) -> int:
    """Display column of place-value exponent `place` on a grid `cols` wide."""
    return cols - 1 - place

Pane = Literal["traditional", "vedic"]
BlockKind = Literal["operand-row", "work-row", "result-row", "guide"]
LatentDisplay = Literal["vedic-only", "both", "none"]


@dataclass(frozen=True, slots=True)
class CellRef:
    pane: Pane
    row: int
    col: int

    def __post_init__(self) -> None:
        if self.row < 0 or self.col < 0:
            raise ValueError("cell indices must be non-negative")


@dataclass(frozen=True, slots=True)
class GridBlock:
    """A labeled horizontal band of the grid (inclusive row range)."""

    kind: BlockKind
    row_start: int
    row_end: int
    label: str

    def __post_init__(self) -> None:
        if self.row_start < 0 or self.row_end < self.row_start:
            raise ValueError("invalid block row range")


@dataclass(frozen=True, slots=True)
class GridSpec:
    rows: int
    cols: int
    blocks: tuple[GridBlock, ...]

    def __post_init__(self) -> None:
        occupied: set[int] = set()
        for block in self.blocks:
            if block.row_end >= self.rows:
                raise ValueError(f"block {block.label!r} exceeds {self.rows} rows")
            rows = set(range(block.row_start, block.row_end + 1))
            if rows & occupied:
                raise ValueError(f"block {block.label!r} overlaps another block")
            occupied |= rows

    def result_row(self) -> int:
        """Row index of the single result-row block."""
        rows = [b.row_start for b in self.blocks if b.kind == "result-row"]
        if len(rows) != 1:
            raise ValueError("grid must have exactly one result-row block")
        return rows[0]


def _tokenize(expression: str) -> list[int | str]:
    tokens: list[int | str] = []
    number = ""
    for ch in expression:
        if ch.isascii() and ch.isdigit():
            number += ch
            continue
        if number:
            tokens.append(int(number))
            number = ""
        if ch in (TIMES, PLUS, MINUS):
            tokens.append(ch)
        else:
            raise ValueError(f"bad character in expression: {ch!r}")
    if number:
        tokens.append(int(number))
    if not tokens:
        raise ValueError("empty expression")
    return tokens


def evaluate_expression(expression: str) -> int:
    """Evaluate an infix +/−/× expression; × binds tighter, all left-assoc."""
    tokens = _tokenize(expression)
    if not isinstance(tokens[0], int) or not isinstance(tokens[-1], int):
        raise ValueError(f"malformed expression: {expression!r}")
    # Collapse products first, then fold the +/− chain.
    terms: list[int | str] = [tokens[0]]
    for op, operand in zip(tokens[1::2], tokens[2::2]):
        if not isinstance(op, str) or not isinstance(operand, int):
            raise ValueError(f"malformed expression: {expression!r}")
        if op == TIMES:
            terms[-1] = terms[-1] * operand  # type: ignore[operator]
        else:
            terms.append(op)
            terms.append(operand)
    total = terms[0]
    for op, term in zip(terms[1::2], terms[2::2]):
        total = total + term if op == PLUS else total - term  # type: ignore[operator]
    return total  # type: ignore[return-value]


def expression_literals(expression: str) -> tuple[int, ...]:
    """The number literals of an expression, in reading order."""
    return tuple(t for t in _tokenize(expression) if isinstance(t, int))


@dataclass(frozen=True, slots=True)
class BasicOp:
    """One latent-space entry: an elementary calculation shown to the learner."""

    expression: str
    operands: tuple[int, ...]
    result: int

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.operands) or self.result < 0:
            raise ValueError("basic-op values must be non-negative")
        if expression_literals(self.expression) != self.operands:
            raise ValueError(
                f"operands {self.operands} do not match expression {self.expression!r}"
            )
        if evaluate_expression(self.expression) != self.result:
            raise ValueError(
                f"expression {self.expression!r} does not evaluate to {self.result}"
            )

    @classmethod
    def of(cls, expression: str) -> BasicOp:
        """Build from the expression alone, computing operands and result."""
        return cls(
            expression=expression,
            operands=expression_literals(expression),
            result=evaluate_expression(expression),
        )


@dataclass(frozen=True, slots=True)
class CellWrite:
    cell: CellRef
    token: str

    def __post_init__(self) -> None:
        if not self.token or any(ch not in "0123456789" for ch in self.token):
            raise ValueError(f"write token must be a digit string: {self.token!r}")


@dataclass(frozen=True, slots=True)
class CarryNote:
    value: int
    target_col: int

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("carry notes record positive carried values only")


@dataclass(frozen=True, slots=True)
class MainStep:
    index: int
    description: str
    highlights: tuple[CellRef, ...] = ()
    writes: tuple[CellWrite, ...] = ()
    sub_ops: tuple[BasicOp, ...] = ()
    carry_note: CarryNote | None = None


@dataclass(frozen=True, slots=True)
class Metrics:
    digit_multiplications: int
    digit_additions: int
    carries: int
    main_steps: int
    basic_ops: int


def recompute_metrics(steps: tuple[MainStep, ...]) -> Metrics:
    """Derive Metrics purely from the step stream.

    Multiplications and additions are operator occurrences inside sub-op
    expressions; carries are the explicit carry notes.  This is the single
    counting rule the engine holds every method implementation to.
    """
    return Metrics(
        digit_multiplications=sum(
            op.expression.count(TIMES) for s in steps for op in s.sub_ops
        ),
        digit_additions=sum(
            op.expression.count(PLUS) for s in steps for op in s.sub_ops
        ),
        carries=sum(1 for s in steps if s.carry_note is not None),
        main_steps=len(steps),
        basic_ops=sum(len(s.sub_ops) for s in steps),
    )


@dataclass(frozen=True, eq=True)
class Trace:
    """Complete replayable record of one method run."""

    method_id: str
    operands: tuple[DigitString, ...]
    layouts: dict[Pane, GridSpec]
    steps: tuple[MainStep, ...]
    result: DigitString
    metrics: Metrics
    latent_display: LatentDisplay = "vedic-only"


@dataclass(frozen=True, slots=True)
class MethodRun:
    """A method implementation's raw output, before engine assembly."""

    pane: Pane
    steps: tuple[MainStep, ...]
    result: DigitString
    metrics: Metrics
    layout: GridSpec
    remainder: int | None = None  # square-root methods only


def flatten_basic_ops(trace: Trace) -> list[BasicOp]:
    """All sub-ops in step order: the stream a rolling latent window slides over."""
    return [op for step in trace.steps for op in step.sub_ops]
