"""Stateless HTTP/JSON facade over the engine for the browser step player.

Endpoints:
  GET  /api/health        -> {"status": "ok"}
  GET  /api/methods       -> array of method descriptors
  GET  /api/methods/{id}  -> one descriptor, 404 if unknown
  POST /api/trace         -> {operation, operands, options?} -> comparison
                             report; 400 on malformed input, 422 when the
                             operands are blocked by validation

All responses are canonical JSON with CORS enabled, byte-identical to the
CLI's --format json output for the same inputs.  No state is kept between
requests; the threading server handles concurrent callers because every
engine call is a pure function.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any

from .digits import parse_operand
from .engine import (
    DEFAULT_MAX_DIGITS,
    TraceOptions,
    build_comparison,
    comparison_to_jsonable,
    describe_method,
    descriptor_to_jsonable,
    list_methods,
    report_to_jsonable,
)
from .errors import ApplicabilityError, ParseError, UnknownMethodError
from .serialize import canonical_bytes

__all__ = ["create_server", "serve"]

_OPERATIONS = ("add", "subtract", "multiply", "sqrt")


class _Handler(BaseHTTPRequestHandler):
    server_version = "sutratrace"
    cors_origin = "*"

    def log_message(self, format: str, *args: Any) -> None:  # noqa: A002
        pass  # deterministic tests; wire a logger here if needed

    def _send(self, status: int, payload: Any) -> None:
        body = canonical_bytes(payload)
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", self.cors_origin)
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:  # CORS preflight
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", self.cors_origin)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self) -> None:
        path = self.path.rstrip("/") or "/"
        if path == "/api/health":
            self._send(200, {"status": "ok"})
        elif path == "/api/methods":
            self._send(200, [descriptor_to_jsonable(d) for d in list_methods()])
        elif path.startswith("/api/methods/"):
            method_id = path[len("/api/methods/") :]
            try:
                self._send(200, descriptor_to_jsonable(describe_method(method_id)))
            except UnknownMethodError:
                self._send(404, {"code": "UNKNOWN_METHOD", "message": method_id})
        else:
            self._send(404, {"code": "NOT_FOUND", "message": self.path})

    def do_POST(self) -> None:
        if self.path.rstrip("/") != "/api/trace":
            self._send(404, {"code": "NOT_FOUND", "message": self.path})
            return
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as err:
            self._send(400, {"code": "BAD_REQUEST", "message": f"invalid JSON: {err}"})
            return
        if not isinstance(body, dict):
            self._send(400, {"code": "BAD_REQUEST", "message": "body must be an object"})
            return
        operation = body.get("operation")
        raw_operands = body.get("operands")
        if operation not in _OPERATIONS:
            self._send(
                400,
                {
                    "code": "UNKNOWN_OPERATION",
                    "message": f"operation must be one of {list(_OPERATIONS)}",
                },
            )
            return
        if not isinstance(raw_operands, list) or not all(
            isinstance(o, str) for o in raw_operands
        ):
            self._send(
                400,
                {"code": "BAD_REQUEST", "message": "operands must be an array of strings"},
            )
            return
        options = body.get("options") or {}
        if not isinstance(options, dict):
            self._send(400, {"code": "BAD_REQUEST", "message": "options must be an object"})
            return
        try:
            operands = [parse_operand(text) for text in raw_operands]
        except ParseError as err:
            self._send(
                400,
                {"code": "PARSE_ERROR", "message": str(err), "position": err.position},
            )
            return
        trace_options = TraceOptions(
            max_digits=options.get("maxDigits", DEFAULT_MAX_DIGITS),
            latent_display=options.get("latentDisplay", "vedic-only"),
        )
        try:
            report = build_comparison(operation, operands, trace_options)
        except ApplicabilityError as err:
            blocking = [w for w in err.report.warnings if w.blocking]
            payload: dict[str, Any] = {
                "code": blocking[0].code if blocking else "NOT_APPLICABLE",
                "warnings": report_to_jsonable(err.report)["warnings"],
            }
            if err.family:
                payload["family"] = err.family
            self._send(422, payload)
            return
        self._send(200, comparison_to_jsonable(report))


def create_server(
    host: str = "127.0.0.1", port: int = 8080, cors_origin: str = "*"
) -> ThreadingHTTPServer:
    """Build (but do not start) the threading HTTP server; port 0 picks a free one."""
    handler = type("Handler", (_Handler,), {"cors_origin": cors_origin})
    return ThreadingHTTPServer((host, port), handler)


def serve(host: str = "127.0.0.1", port: int = 8080, cors_origin: str = "*") -> None:
    server = create_server(host, port, cors_origin)
    address = f"http://{server.server_address[0]}:{server.server_address[1]}"
    print(f"sutratrace service listening on {address}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
