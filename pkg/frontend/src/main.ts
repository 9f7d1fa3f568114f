/** Application wiring: controls, service client, player, and render loop. */

import { TraceClient } from "./api.js";
import { renderLatent, renderPanes, renderStepList } from "./dom.js";
import { Player } from "./player.js";
import type { MethodDescriptorJson } from "./types.js";

const SERVICE_URL = (window as { SUTRATRACE_URL?: string }).SUTRATRACE_URL ?? "";

const el = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const client = new TraceClient(SERVICE_URL);
let methods: MethodDescriptorJson[] = [];
let player: Player | null = null;
let timer: number | null = null;

function banner(message: string, visible = true): void {
  const box = el<HTMLDivElement>("warning-banner");
  box.textContent = message;
  box.classList.toggle("hidden", !visible);
}

function selectedOperation(): string {
  return el<HTMLSelectElement>("method-select").value;
}

function vedicDescriptor(operation: string): MethodDescriptorJson | undefined {
  return methods.find((m) => m.operation === operation && m.family === "vedic");
}

function refreshInfoPanel(): void {
  const descriptor = vedicDescriptor(selectedOperation());
  el<HTMLDivElement>("info-panel").textContent = descriptor
    ? `${descriptor.displayName} (level ${descriptor.level})\n\n${descriptor.infoText}`
    : "";
}

function refreshMethodOptions(): void {
  const level = el<HTMLSelectElement>("level-select").value;
  const select = el<HTMLSelectElement>("method-select");
  select.textContent = "";
  const seen = new Set<string>();
  for (const m of methods) {
    if (m.family !== "vedic") continue;
    if (level !== "all" && m.level !== Number(level)) continue;
    if (seen.has(m.operation)) continue;
    seen.add(m.operation);
    const option = document.createElement("option");
    option.value = m.operation;
    option.textContent = `${m.displayName} (${m.operation})`;
    select.appendChild(option);
  }
  refreshInfoPanel();
}

function renderAll(): void {
  if (!player) return;
  renderPanes(document, el("panes"), player);
  renderLatent(document, el("latent-box"), player);
  renderStepList(document, el("step-list"), player);
  el<HTMLButtonElement>("play-btn").textContent = player.playing
    ? "pause"
    : "play";
  el<HTMLSpanElement>("cursor-label").textContent =
    `${player.cursor}/${player.totalTicks}`;
}

function setTimer(): void {
  if (timer !== null) window.clearInterval(timer);
  const speed = Number(el<HTMLSelectElement>("speed-select").value);
  timer = window.setInterval(() => {
    if (player?.tick()) renderAll();
  }, 1000 / speed);
}

async function calculate(): Promise<void> {
  const texts = el<HTMLInputElement>("operand-input").value
    .split(",")
    .map((t) => t.trim())
    .filter((t) => t.length > 0);
  if (texts.length === 0 || texts.some((t) => !/^[0-9]+$/.test(t))) {
    banner("Operands must be comma-separated non-negative whole numbers.");
    return;
  }
  const outcome = await client.requestTrace(selectedOperation(), texts);
  if (outcome.kind === "stale") return;
  if (outcome.kind === "error") {
    banner(`Service unavailable: ${outcome.message}`);
    return;
  }
  if (outcome.kind === "blocked") {
    banner(outcome.blocked.warnings.map((w) => w.message).join("; "));
    return;
  }
  banner("", false);
  player = new Player(outcome.report);
  renderAll();
}

async function boot(): Promise<void> {
  try {
    methods = await client.loadMethods();
  } catch (err) {
    banner(`Cannot reach the trace service: ${err}`);
    el<HTMLButtonElement>("calc-btn").disabled = true;
    return;
  }
  methods.sort((a, b) =>
    a.level === b.level
      ? a.displayName.localeCompare(b.displayName)
      : a.level - b.level,
  );
  refreshMethodOptions();

  el("level-select").addEventListener("change", refreshMethodOptions);
  el("method-select").addEventListener("change", refreshInfoPanel);
  el("calc-btn").addEventListener("click", () => void calculate());
  el("play-btn").addEventListener("click", () => {
    if (!player) return;
    player.playing ? player.pause() : player.play();
    renderAll();
  });
  el("step-btn").addEventListener("click", () => {
    player?.pause();
    player?.stepOnce();
    renderAll();
  });
  el("speed-select").addEventListener("change", setTimer);
  el("step-list").addEventListener("click", () => {
    player?.toggleHistory();
    renderAll();
  });
  setTimer();
}

void boot();
