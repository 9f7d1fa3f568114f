/**
 * Trace-service client.  At most one trace request is in flight; stale
 * responses are discarded by a request token so a slow early answer can
 * never clobber a later one.
 */
export class TraceClient {
    constructor(baseUrl, fetchFn = fetch) {
        this.baseUrl = baseUrl;
        this.fetchFn = fetchFn;
        this.seq = 0;
    }
    async loadMethods() {
        const resp = await this.fetchFn(`${this.baseUrl}/api/methods`);
        if (!resp.ok)
            throw new Error(`service returned ${resp.status}`);
        return (await resp.json());
    }
    async requestTrace(operation, operands) {
        const token = ++this.seq;
        let resp;
        try {
            resp = await this.fetchFn(`${this.baseUrl}/api/trace`, {
                method: "POST",
                headers: { "Content-Type": "application/json" },
                body: JSON.stringify({ operation, operands }),
            });
        }
        catch (err) {
            if (token !== this.seq)
                return { kind: "stale" };
            return { kind: "error", message: String(err) };
        }
        if (token !== this.seq)
            return { kind: "stale" };
        if (resp.status === 200) {
            return { kind: "ok", report: (await resp.json()) };
        }
        if (resp.status === 422) {
            return {
                kind: "blocked",
                blocked: (await resp.json()),
            };
        }
        const body = await resp.text();
        return { kind: "error", message: `service returned ${resp.status}: ${body}` };
    }
}
