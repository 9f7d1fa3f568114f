"""Shared text-free rendering conventions for grid consumers.

Operand digits are not writes: renderers seed them from the trace operands,
right-aligned on the operand-row block rows, one operand per row in order.
"""

from __future__ import annotations

from .model import Pane, Trace
from .replay import Grid, replay
from .serialize import digits_to_text

__all__ = ["operand_cells", "final_grids", "remainder_token"]


def operand_cells(trace: Trace) -> dict[Pane, dict[tuple[int, int], str]]:
    """Cells implied by the operands, per pane: {(row, col): digit token}."""
    seeded: dict[Pane, dict[tuple[int, int], str]] = {}
    for pane, spec in trace.layouts.items():
        rows = [
            r
            for block in spec.blocks
            if block.kind == "operand-row"
            for r in range(block.row_start, block.row_end + 1)
        ]
        cells: dict[tuple[int, int], str] = {}
        for row, operand in zip(rows, trace.operands):
            text = digits_to_text(operand)
            start = spec.cols - len(text)
            for offset, ch in enumerate(text):
                cells[(row, start + offset)] = ch
        seeded[pane] = cells
    return seeded


def final_grids(trace: Trace) -> dict[Pane, Grid]:
    """Replayed grids with the operand digits seeded in."""
    grids = replay(trace)
    for pane, cells in operand_cells(trace).items():
        for (row, col), token in cells.items():
            if grids[pane][row][col] is None:
                grids[pane][row][col] = token
    return grids


def remainder_token(trace: Trace) -> str | None:
    """Token written on the work row labeled "remainder", if the layout has one."""
    for pane, spec in trace.layouts.items():
        for block in spec.blocks:
            if block.kind == "work-row" and block.label == "remainder":
                row = replay(trace)[pane][block.row_start]
                tokens = [t for t in row if t is not None]
                return tokens[-1] if tokens else None
    return None
