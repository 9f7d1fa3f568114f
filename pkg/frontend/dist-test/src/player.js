/**
 * Playback state machine over a loaded comparison report.
 *
 * One tick applies the next MainStep of each pane that still has steps, so
 * the two panes advance together until the longer one finishes.  The
 * latent window keeps the current and past two basic operations of
 * whichever panes the latentDisplay flag admits.  All state is plain data;
 * the DOM layer renders snapshots and owns the timer.
 */
import { applyStep, emptyGrid, seedOperands } from "./gridmodel.js";
export const LATENT_WINDOW = 3;
const PANES = ["traditional", "vedic"];
export class Player {
    constructor(report) {
        this.speed = 1.0; // steps per second; the DOM timer divides by this
        this.ticks = 0;
        this.playingFlag = false;
        this.historyExpanded = false;
        this.applied = [];
        this.latent = [];
        this.report = report;
        this.grids = {
            traditional: this.freshGrid("traditional"),
            vedic: this.freshGrid("vedic"),
        };
        this.totalTicks = Math.max(report.vedic.steps.length, report.traditional.steps.length);
    }
    freshGrid(pane) {
        const trace = this.trace(pane);
        const spec = trace.layouts[pane];
        const grid = emptyGrid(spec);
        seedOperands(grid, spec, trace.operands);
        return grid;
    }
    trace(pane) {
        return pane === "vedic" ? this.report.vedic : this.report.traditional;
    }
    get cursor() {
        return this.ticks;
    }
    get playing() {
        return this.playingFlag;
    }
    get finished() {
        return this.ticks >= this.totalTicks;
    }
    get latentWindow() {
        return this.latent;
    }
    get history() {
        return this.applied;
    }
    get historyIsExpanded() {
        return this.historyExpanded;
    }
    /** Most recent applied step per pane, for highlight rendering. */
    currentSteps() {
        const out = {};
        for (let i = this.applied.length - 1; i >= 0; i--) {
            const entry = this.applied[i];
            if (!(entry.pane in out))
                out[entry.pane] = entry.step;
            if (Object.keys(out).length === PANES.length)
                break;
        }
        return out;
    }
    latentAdmits(pane) {
        const flag = this.trace(pane).latentDisplay;
        if (flag === "none")
            return false;
        if (flag === "both")
            return true;
        return pane === "vedic";
    }
    /** Apply exactly one tick; returns false when already finished. */
    stepOnce() {
        if (this.finished)
            return false;
        for (const pane of PANES) {
            const trace = this.trace(pane);
            const step = trace.steps[this.ticks];
            if (!step)
                continue;
            applyStep(this.grids[pane], trace.layouts[pane], step, pane);
            this.applied.push({ pane, step });
            if (this.latentAdmits(pane)) {
                for (const op of step.subOps) {
                    this.latent.push(op);
                    if (this.latent.length > LATENT_WINDOW)
                        this.latent.shift();
                }
            }
        }
        this.ticks += 1;
        if (this.finished)
            this.playingFlag = false;
        return true;
    }
    /** Timer callback: advances only while playing. */
    tick() {
        if (!this.playingFlag)
            return false;
        return this.stepOnce();
    }
    play() {
        if (!this.finished)
            this.playingFlag = true;
    }
    pause() {
        this.playingFlag = false;
    }
    toggleHistory() {
        this.historyExpanded = !this.historyExpanded;
    }
    /** Descriptions shown in the rolling list (last one) or full history. */
    visibleHistory() {
        const lines = this.applied.map((e) => `[${e.pane}] ${e.step.description}`);
        return this.historyExpanded ? lines : lines.slice(-1);
    }
}
