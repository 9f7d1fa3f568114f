"""Trace replay: re-execute all writes on empty grids and check the outcome.

Replay is the machine-checkable meaning of "step-wise": a trace is valid
iff every write lands in bounds on a never-written cell and the result row
finally spells the stored result.
"""

from __future__ import annotations

from .digits import value_of
from .errors import ReplayError
from .model import Pane, Trace

__all__ = ["replay"]

Grid = list[list[str | None]]


def replay(trace: Trace) -> dict[Pane, Grid]:
    """Apply writes in step order; return the final grid per pane.

    Raises ReplayError on an out-of-bounds cell, a double write, a step
    ordering violation, or a result-row mismatch.  The result row is read
    left to right (most significant first) and compared by value, so padded
    leading zeros are legal.
    """
    grids: dict[Pane, Grid] = {
        pane: [[None] * spec.cols for _ in range(spec.rows)]
        for pane, spec in trace.layouts.items()
    }
    last_index = -1
    for step in trace.steps:
        if step.index <= last_index:
            raise ReplayError(step.index, "step indices must be strictly increasing")
        last_index = step.index
        for write in step.writes:
            cell = write.cell
            if cell.pane not in grids:
                raise ReplayError(step.index, f"no layout for pane {cell.pane!r}")
            grid = grids[cell.pane]
            spec = trace.layouts[cell.pane]
            if cell.row >= spec.rows or cell.col >= spec.cols:
                raise ReplayError(
                    step.index, f"cell ({cell.row},{cell.col}) outside {cell.pane} grid"
                )
            if grid[cell.row][cell.col] is not None:
                raise ReplayError(
                    step.index, f"cell ({cell.row},{cell.col}) written twice"
                )
            grid[cell.row][cell.col] = write.token

    expected = value_of(trace.result)
    final_index = trace.steps[-1].index if trace.steps else -1
    for pane, spec in trace.layouts.items():
        row = grids[pane][spec.result_row()]
        spelled = "".join(token for token in row if token is not None)
        if not spelled:
            raise ReplayError(final_index, f"{pane} result row is empty")
        if int(spelled) != expected:
            raise ReplayError(
                final_index,
                f"{pane} result row spells {spelled}, expected value {expected}",
            )
    return grids
