import assert from "node:assert/strict";
import { test } from "node:test";

import {
  applyStep,
  emptyGrid,
  replayTrace,
  resultRowText,
  seedOperands,
} from "../src/gridmodel.js";
import { multiplyReport } from "./fixtures.js";

test("operands seed right-aligned onto operand rows", () => {
  const report = multiplyReport();
  const spec = report.vedic.layouts.vedic!;
  const grid = emptyGrid(spec);
  seedOperands(grid, spec, report.vedic.operands);
  const cols = spec.cols;
  assert.equal(grid[0][cols - 1], "2");
  assert.equal(grid[0][cols - 2], "1");
  assert.equal(grid[1][cols - 1], "4");
  assert.equal(grid[1][cols - 2], "3");
  assert.equal(grid[0][0], null);
});

test("replaying every step spells the stored result", () => {
  const report = multiplyReport();
  assert.equal(Number(resultRowText(report.vedic)), Number(report.vedic.result));
  assert.equal(
    Number(resultRowText(report.traditional)),
    Number(report.traditional.result),
  );
});

test("double writes throw instead of silently diverging", () => {
  const report = multiplyReport();
  const spec = report.vedic.layouts.vedic!;
  const grid = emptyGrid(spec);
  const step = report.vedic.steps[0];
  applyStep(grid, spec, step, "vedic");
  assert.throws(() => applyStep(grid, spec, step, "vedic"), /written twice/);
});

test("partial replay applies exactly the first n steps' writes", () => {
  const report = multiplyReport();
  const full = replayTrace(report.vedic);
  const partial = replayTrace(report.vedic, 1);
  const fullCount = full.flat().filter((t) => t !== null).length;
  const partialCount = partial.flat().filter((t) => t !== null).length;
  assert.ok(partialCount < fullCount);
});
