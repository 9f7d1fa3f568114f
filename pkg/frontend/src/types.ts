/** Wire-format types, mirroring the canonical trace JSON exactly. */

export type Pane = "traditional" | "vedic";
export type BlockKind = "operand-row" | "work-row" | "result-row" | "guide";
export type LatentDisplay = "vedic-only" | "both" | "none";

export interface CellRefJson {
  pane: Pane;
  row: number;
  col: number;
}

export interface GridBlockJson {
  kind: BlockKind;
  rowRange: [number, number];
  label: string;
}

export interface GridSpecJson {
  rows: number;
  cols: number;
  blocks: GridBlockJson[];
}

export interface BasicOpJson {
  expression: string;
  operands: string[];
  result: string;
}

export interface CellWriteJson {
  cell: CellRefJson;
  token: string;
}

export interface CarryNoteJson {
  value: string;
  targetCol: number;
}

export interface MainStepJson {
  index: number;
  description: string;
  highlights: CellRefJson[];
  writes: CellWriteJson[];
  subOps: BasicOpJson[];
  carryNote: CarryNoteJson | null;
}

export interface MetricsJson {
  digitMultiplications: number;
  digitAdditions: number;
  carries: number;
  mainSteps: number;
  basicOps: number;
}

export interface TraceJson {
  methodId: string;
  operands: string[];
  layouts: Partial<Record<Pane, GridSpecJson>>;
  steps: MainStepJson[];
  result: string;
  metrics: MetricsJson;
  latentDisplay: LatentDisplay;
}

export interface ComparisonReportJson {
  vedic: TraceJson;
  traditional: TraceJson;
  deltas: Record<string, number>;
}

export interface MethodDescriptorJson {
  id: string;
  operation: string;
  family: string;
  displayName: string;
  infoText: string;
  level: number;
  operandArity: [number, number];
  constraints: string[];
}

export interface WarningJson {
  code: string;
  message: string;
  suggestion: string;
  blocking: boolean;
}

export interface BlockedResponseJson {
  code: string;
  warnings: WarningJson[];
  family?: string;
}
