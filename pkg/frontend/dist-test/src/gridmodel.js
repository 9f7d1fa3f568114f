/**
 * Pure grid data model: the replay oracle the rendered DOM must agree with.
 *
 * The client never computes digits. Every token comes from the trace:
 * operand digits are seeded right-aligned onto the operand-row block rows
 * (one operand per row, in order), and everything else arrives as writes.
 * Cells are write-once; violations throw rather than silently diverge.
 */
export function emptyGrid(spec) {
    return Array.from({ length: spec.rows }, () => Array(spec.cols).fill(null));
}
export function operandRows(spec) {
    const rows = [];
    for (const block of spec.blocks) {
        if (block.kind !== "operand-row")
            continue;
        for (let r = block.rowRange[0]; r <= block.rowRange[1]; r++)
            rows.push(r);
    }
    return rows;
}
/** Seed the as-typed operand digits; not writes, purely presentation. */
export function seedOperands(grid, spec, operands) {
    const rows = operandRows(spec);
    operands.forEach((text, i) => {
        if (i >= rows.length)
            return;
        const start = spec.cols - text.length;
        for (let k = 0; k < text.length; k++) {
            grid[rows[i]][start + k] = text[k];
        }
    });
}
/** Apply one step's writes for one pane; throws on any replay violation. */
export function applyStep(grid, spec, step, pane) {
    for (const write of step.writes) {
        if (write.cell.pane !== pane)
            continue;
        const { row, col } = write.cell;
        if (row < 0 || row >= spec.rows || col < 0 || col >= spec.cols) {
            throw new Error(`step ${step.index}: cell (${row},${col}) out of bounds`);
        }
        if (grid[row][col] !== null) {
            throw new Error(`step ${step.index}: cell (${row},${col}) written twice`);
        }
        grid[row][col] = write.token;
    }
}
/** Pure-data replay of the first `upTo` steps (all when omitted). */
export function replayTrace(trace, upTo) {
    const panes = Object.keys(trace.layouts);
    if (panes.length !== 1) {
        throw new Error("single-method traces carry exactly one pane layout");
    }
    const pane = panes[0];
    const spec = trace.layouts[pane];
    const grid = emptyGrid(spec);
    seedOperands(grid, spec, trace.operands);
    const limit = upTo ?? trace.steps.length;
    for (const step of trace.steps.slice(0, limit)) {
        applyStep(grid, spec, step, pane);
    }
    return grid;
}
/** Result-row tokens left to right; spells the trace result when complete. */
export function resultRowText(trace) {
    const panes = Object.keys(trace.layouts);
    const spec = trace.layouts[panes[0]];
    const block = spec.blocks.find((b) => b.kind === "result-row");
    if (!block)
        throw new Error("trace layout has no result row");
    const grid = replayTrace(trace);
    return grid[block.rowRange[0]]
        .filter((t) => t !== null)
        .join("");
}
