/**
 * DOM renderer: a thin projection of the player's data model.
 *
 * Every visible token is copied from the grid model (which itself only
 * contains trace-supplied strings); the renderer never derives a digit.
 * Functions take the document explicitly so tests can drive them headless.
 */

import type { Grid } from "./gridmodel.js";
import { Player } from "./player.js";
import type { GridSpecJson, MainStepJson, Pane } from "./types.js";

export function renderGrid(
  doc: Document,
  spec: GridSpecJson,
  grid: Grid,
  currentStep: MainStepJson | undefined,
  pane: Pane,
): HTMLTableElement {
  const rowKind = new Map<number, string>();
  const rowLabel = new Map<number, string>();
  for (const block of spec.blocks) {
    for (let r = block.rowRange[0]; r <= block.rowRange[1]; r++) {
      rowKind.set(r, block.kind);
      if (r === block.rowRange[0]) rowLabel.set(r, block.label);
    }
  }
  const highlighted = new Set(
    (currentStep?.highlights ?? [])
      .filter((c) => c.pane === pane)
      .map((c) => `${c.row}:${c.col}`),
  );
  const written = new Set(
    (currentStep?.writes ?? [])
      .filter((w) => w.cell.pane === pane)
      .map((w) => `${w.cell.row}:${w.cell.col}`),
  );

  const table = doc.createElement("table");
  table.className = "pane-grid";
  grid.forEach((cells, r) => {
    const tr = doc.createElement("tr");
    tr.className = `block-${rowKind.get(r) ?? "plain"}`;
    const label = doc.createElement("th");
    label.textContent = rowLabel.get(r) ?? "";
    tr.appendChild(label);
    cells.forEach((token, c) => {
      const td = doc.createElement("td");
      td.textContent = token ?? "";
      const key = `${r}:${c}`;
      if (highlighted.has(key)) td.classList.add("visited");
      if (written.has(key)) td.classList.add("fresh");
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  return table;
}

/** Grid cell text as the model sees it (for render-replay agreement). */
export function gridText(table: HTMLTableElement): (string | null)[][] {
  return Array.from(table.querySelectorAll("tr")).map((tr) =>
    Array.from(tr.querySelectorAll("td")).map((td) =>
      td.textContent === "" ? null : td.textContent,
    ),
  );
}

export function renderPanes(doc: Document, root: HTMLElement, player: Player): void {
  root.textContent = "";
  const current = player.currentSteps();
  for (const pane of ["traditional", "vedic"] as Pane[]) {
    const trace = player.trace(pane);
    const spec = trace.layouts[pane]!;
    const section = doc.createElement("section");
    section.className = `pane pane-${pane}`;
    const title = doc.createElement("h3");
    title.textContent = `${pane}: ${trace.methodId}`;
    section.appendChild(title);
    section.appendChild(
      renderGrid(doc, spec, player.grids[pane], current[pane], pane),
    );
    root.appendChild(section);
  }
}

export function renderLatent(doc: Document, box: HTMLElement, player: Player): void {
  box.textContent = "";
  for (const op of player.latentWindow) {
    const line = doc.createElement("div");
    line.className = "latent-op";
    line.textContent = `${op.expression} = ${op.result}`;
    box.appendChild(line);
  }
  if (player.latentWindow.length > 0) {
    box.lastElementChild?.classList.add("flash");
  }
}

export function renderStepList(doc: Document, list: HTMLElement, player: Player): void {
  list.textContent = "";
  for (const line of player.visibleHistory()) {
    const item = doc.createElement("li");
    item.textContent = line;
    list.appendChild(item);
  }
  list.classList.toggle("expanded", player.historyIsExpanded);
}
