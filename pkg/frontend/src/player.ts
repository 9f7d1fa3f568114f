/**
 * Playback state machine over a loaded comparison report.
 *
 * One tick applies the next MainStep of each pane that still has steps, so
 * the two panes advance together until the longer one finishes.  The
 * latent window keeps the current and past two basic operations of
 * whichever panes the latentDisplay flag admits.  All state is plain data;
 * the DOM layer renders snapshots and owns the timer.
 */

import { applyStep, emptyGrid, seedOperands, type Grid } from "./gridmodel.js";
import type {
  BasicOpJson,
  ComparisonReportJson,
  MainStepJson,
  Pane,
  TraceJson,
} from "./types.js";

export const LATENT_WINDOW = 3;

export interface AppliedStep {
  pane: Pane;
  step: MainStepJson;
}

const PANES: Pane[] = ["traditional", "vedic"];

export class Player {
  readonly report: ComparisonReportJson;
  readonly grids: Record<Pane, Grid>;
  readonly totalTicks: number;
  speed = 1.0; // steps per second; the DOM timer divides by this
  private ticks = 0;
  private playingFlag = false;
  private historyExpanded = false;
  private applied: AppliedStep[] = [];
  private latent: BasicOpJson[] = [];

  constructor(report: ComparisonReportJson) {
    this.report = report;
    this.grids = {
      traditional: this.freshGrid("traditional"),
      vedic: this.freshGrid("vedic"),
    };
    this.totalTicks = Math.max(
      report.vedic.steps.length,
      report.traditional.steps.length,
    );
  }

  private freshGrid(pane: Pane): Grid {
    const trace = this.trace(pane);
    const spec = trace.layouts[pane]!;
    const grid = emptyGrid(spec);
    seedOperands(grid, spec, trace.operands);
    return grid;
  }

  trace(pane: Pane): TraceJson {
    return pane === "vedic" ? this.report.vedic : this.report.traditional;
  }

  get cursor(): number {
    return this.ticks;
  }

  get playing(): boolean {
    return this.playingFlag;
  }

  get finished(): boolean {
    return this.ticks >= this.totalTicks;
  }

  get latentWindow(): readonly BasicOpJson[] {
    return this.latent;
  }

  get history(): readonly AppliedStep[] {
    return this.applied;
  }

  get historyIsExpanded(): boolean {
    return this.historyExpanded;
  }

  /** Most recent applied step per pane, for highlight rendering. */
  currentSteps(): Partial<Record<Pane, MainStepJson>> {
    const out: Partial<Record<Pane, MainStepJson>> = {};
    for (let i = this.applied.length - 1; i >= 0; i--) {
      const entry = this.applied[i];
      if (!(entry.pane in out)) out[entry.pane] = entry.step;
      if (Object.keys(out).length === PANES.length) break;
    }
    return out;
  }

  private latentAdmits(pane: Pane): boolean {
    const flag = this.trace(pane).latentDisplay;
    if (flag === "none") return false;
    if (flag === "both") return true;
    return pane === "vedic";
  }

  /** Apply exactly one tick; returns false when already finished. */
  stepOnce(): boolean {
    if (this.finished) return false;
    for (const pane of PANES) {
      const trace = this.trace(pane);
      const step = trace.steps[this.ticks];
      if (!step) continue;
      applyStep(this.grids[pane], trace.layouts[pane]!, step, pane);
      this.applied.push({ pane, step });
      if (this.latentAdmits(pane)) {
        for (const op of step.subOps) {
          this.latent.push(op);
          if (this.latent.length > LATENT_WINDOW) this.latent.shift();
        }
      }
    }
    this.ticks += 1;
    if (this.finished) this.playingFlag = false;
    return true;
  }

  /** Timer callback: advances only while playing. */
  tick(): boolean {
    if (!this.playingFlag) return false;
    return this.stepOnce();
  }

  play(): void {
    if (!this.finished) this.playingFlag = true;
  }

  pause(): void {
    this.playingFlag = false;
  }

  toggleHistory(): void {
    this.historyExpanded = !this.historyExpanded;
  }

  /** Descriptions shown in the rolling list (last one) or full history. */
  visibleHistory(): string[] {
    const lines = this.applied.map((e) => `[${e.pane}] ${e.step.description}`);
    return this.historyExpanded ? lines : lines.slice(-1);
  }
}
