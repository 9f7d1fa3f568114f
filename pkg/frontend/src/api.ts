/**
 * Trace-service client.  At most one trace request is in flight; stale
 * responses are discarded by a request token so a slow early answer can
 * never clobber a later one.
 */

import type {
  BlockedResponseJson,
  ComparisonReportJson,
  MethodDescriptorJson,
} from "./types.js";

export type TraceOutcome =
  | { kind: "ok"; report: ComparisonReportJson }
  | { kind: "blocked"; blocked: BlockedResponseJson }
  | { kind: "error"; message: string }
  | { kind: "stale" };

export class TraceClient {
  private seq = 0;

  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async loadMethods(): Promise<MethodDescriptorJson[]> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/methods`);
    if (!resp.ok) throw new Error(`service returned ${resp.status}`);
    return (await resp.json()) as MethodDescriptorJson[];
  }

  async requestTrace(
    operation: string,
    operands: string[],
  ): Promise<TraceOutcome> {
    const token = ++this.seq;
    let resp: Response;
    try {
      resp = await this.fetchFn(`${this.baseUrl}/api/trace`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ operation, operands }),
      });
    } catch (err) {
      if (token !== this.seq) return { kind: "stale" };
      return { kind: "error", message: String(err) };
    }
    if (token !== this.seq) return { kind: "stale" };
    if (resp.status === 200) {
      return { kind: "ok", report: (await resp.json()) as ComparisonReportJson };
    }
    if (resp.status === 422) {
      return {
        kind: "blocked",
        blocked: (await resp.json()) as BlockedResponseJson,
      };
    }
    const body = await resp.text();
    return { kind: "error", message: `service returned ${resp.status}: ${body}` };
  }
}
