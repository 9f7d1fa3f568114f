from __future__ import annotations

import json
import subprocess
import sys
import threading
import urllib.error
import urllib.request

import pytest

from sutratrace.service import create_server


@pytest.fixture(scope="module")
def server_url():
    server = create_server(host="127.0.0.1", port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()


def get(url: str):
    try:
        with urllib.request.urlopen(url, timeout=10) as resp:
            return resp.status, dict(resp.headers), resp.read()
    except urllib.error.HTTPError as err:
        return err.code, dict(err.headers), err.read()


def post(url: str, payload) -> tuple[int, dict, bytes]:
    body = payload if isinstance(payload, bytes) else json.dumps(payload).encode()
    req = urllib.request.Request(
        url, data=body, headers={"Content-Type": "application/json"}, method="POST"
    )
    try:
        with urllib.request.urlopen(req, timeout=10) as resp:
            return resp.status, dict(resp.headers), resp.read()
    except urllib.error.HTTPError as err:
        return err.code, dict(err.headers), err.read()


def test_health(server_url):
    status, headers, body = get(f"{server_url}/api/health")
    assert status == 200
    assert json.loads(body) == {"status": "ok"}


def test_methods_count_and_content_type(server_url):
    status, headers, body = get(f"{server_url}/api/methods")
    assert status == 200
    assert headers["Content-Type"] == "application/json"
    assert len(json.loads(body)) == 8


def test_methods_stable_across_requests(server_url):
    first = get(f"{server_url}/api/methods")[2]
    second = get(f"{server_url}/api/methods")[2]
    assert first == second


def test_describe_valid_and_unknown(server_url):
    status, _, body = get(f"{server_url}/api/methods/vedic.sqrt.duplex")
    assert status == 200
    payload = json.loads(body)
    assert payload["id"] == "vedic.sqrt.duplex"
    assert payload["infoText"]
    status, _, body = get(f"{server_url}/api/methods/nosuch")
    assert status == 404
    assert json.loads(body)["code"] == "UNKNOWN_METHOD"


def test_all_descriptors_have_info_text(server_url):
    _, _, body = get(f"{server_url}/api/methods")
    assert all(d["infoText"] for d in json.loads(body))


def test_trace_multiply(server_url):
    status, _, body = post(
        f"{server_url}/api/trace",
        {"operation": "multiply", "operands": ["12", "34"]},
    )
    assert status == 200
    payload = json.loads(body)
    assert payload["vedic"]["result"] == "408"
    assert payload["traditional"]["result"] == "408"
    assert "deltas" in payload


def test_trace_blocked_subtraction_422(server_url):
    status, _, body = post(
        f"{server_url}/api/trace",
        {"operation": "subtract", "operands": ["123", "456"]},
    )
    assert status == 422
    payload = json.loads(body)
    assert payload["code"] == "NEGATIVE_RESULT"
    assert payload["warnings"][0]["code"] == "NEGATIVE_RESULT"


def test_trace_parse_error_400(server_url):
    status, _, body = post(
        f"{server_url}/api/trace", {"operation": "sqrt", "operands": ["-4"]}
    )
    assert status == 400
    assert json.loads(body)["code"] == "PARSE_ERROR"


def test_trace_arity_422(server_url):
    status, _, body = post(
        f"{server_url}/api/trace", {"operation": "add", "operands": ["1"]}
    )
    assert status == 422
    assert json.loads(body)["code"] == "ARITY"


def test_trace_over_digit_limit_422(server_url):
    status, _, body = post(
        f"{server_url}/api/trace", {"operation": "sqrt", "operands": ["1" * 51]}
    )
    assert status == 422
    assert json.loads(body)["code"] == "MAX_DIGITS"


def test_malformed_body_400(server_url):
    status, _, body = post(f"{server_url}/api/trace", b"{not json")
    assert status == 400
    assert json.loads(body)["code"] == "BAD_REQUEST"


def test_unknown_operation_400(server_url):
    status, _, body = post(
        f"{server_url}/api/trace", {"operation": "modulo", "operands": ["1"]}
    )
    assert status == 400
    assert json.loads(body)["code"] == "UNKNOWN_OPERATION"


def test_unknown_path_404(server_url):
    status, _, _ = get(f"{server_url}/api/nothing")
    assert status == 404


def test_cors_header_present(server_url):
    _, headers, _ = get(f"{server_url}/api/health")
    assert headers["Access-Control-Allow-Origin"] == "*"


def test_statelessness_interleaved(server_url):
    before = post(
        f"{server_url}/api/trace", {"operation": "multiply", "operands": ["12", "34"]}
    )[2]
    post(f"{server_url}/api/trace", {"operation": "subtract", "operands": ["9", "99"]})
    post(f"{server_url}/api/trace", {"operation": "add", "operands": ["1", "2", "3"]})
    after = post(
        f"{server_url}/api/trace", {"operation": "multiply", "operands": ["12", "34"]}
    )[2]
    assert before == after


def test_concurrent_requests(server_url):
    results: list[bytes] = []

    def hit():
        results.append(
            post(
                f"{server_url}/api/trace",
                {"operation": "multiply", "operands": ["987", "654"]},
            )[2]
        )

    threads = [threading.Thread(target=hit) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_response_matches_cli_compare_bytes(server_url):
    body = post(
        f"{server_url}/api/trace", {"operation": "multiply", "operands": ["12", "34"]}
    )[2]
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "sutratrace",
            "compare",
            "--operation",
            "multiply",
            "--operands",
            "12,34",
            "--format",
            "json",
        ],
        capture_output=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == body
