"""Stateless JSON-over-HTTP service.

Every endpoint takes the category parameters as query arguments (e, w)
and echoes them back, so responses are cacheable and handlers stay pure.
Errors come back as the structured error object with HTTP 400 for domain
errors, 404 for unknown routes, and 422 for malformed bodies.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from . import render, wire
from .arquiver import build_ar_quiver, enumerate_indecomposables
from .errors import ParameterError, WorkbenchError
from .polygon import make_category
from .sms import enumerate_sms, extension_closure, torsion_pair
from .tilting import left_tilt, right_tilt, tilting_graph
from .verify import run_suite


class _MalformedBody(Exception):
    pass


def _require_params(query: dict) -> "CategoryParams":
    try:
        rank = int(query["e"][0])
        weight = int(query["w"][0])
    except (KeyError, ValueError):
        raise ParameterError("query parameters e and w are required integers")
    return make_category(rank, weight)


def _json_response(params, payload: dict) -> tuple[str, str]:
    body = dict(payload)
    body["requested"] = wire.params_to_wire(params)
    return wire.dumps(body), "application/json"


def handle_get(path: str, query: dict) -> tuple[int, str, str]:
    fmt = query.get("format", ["json"])[0]
    if path == "/category":
        params = _require_params(query)
        payload = wire.params_to_wire(params)
        payload["indecomposables"] = len(enumerate_indecomposables(params))
        return (200, *_json_response(params, payload))
    if path == "/diagonals":
        params = _require_params(query)
        diagonals = enumerate_indecomposables(params)
        if fmt == "svg":
            return 200, render.export_svg_polygon(params, solid=diagonals), "image/svg+xml"
        return (200, *_json_response(params, {"diagonals": wire.system_to_wire(diagonals)}))
    if path == "/ar-quiver":
        params = _require_params(query)
        quiver = build_ar_quiver(params)
        if fmt == "dot":
            return 200, render.export_dot_ar_quiver(quiver), "text/plain"
        if fmt == "svg":
            return 200, render.export_svg_polygon(params, solid=quiver.vertices), "image/svg+xml"
        payload = {
            "vertices": wire.system_to_wire(quiver.vertices),
            "arrows": [
                [wire.diagonal_to_wire(a), wire.diagonal_to_wire(b)]
                for a, b in quiver.arrows
            ],
        }
        return (200, *_json_response(params, payload))
    if path == "/sms":
        params = _require_params(query)
        systems = [wire.system_to_wire(s.simples) for s in enumerate_sms(params)]
        return (200, *_json_response(params, {"systems": systems}))
    if path == "/tilting-graph":
        params = _require_params(query)
        graph = tilting_graph(params)
        if fmt == "dot":
            return 200, render.export_dot_tilting_graph(graph), "text/plain"
        return (200, *_json_response(params, wire.tilting_graph_to_wire(graph)))
    if path == "/verify":
        params = _require_params(query)
        suite = query.get("suite", ["all"])[0]
        results = run_suite(params, suite)
        payload = {
            "suite": suite,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "passed": all(r.passed for r in results),
        }
        return (200, *_json_response(params, payload))
    raise LookupError(path)


def handle_post(path: str, query: dict, body: dict) -> tuple[int, str, str]:
    fmt = query.get("format", ["json"])[0]
    if path == "/closure":
        params = _require_params(query)
        system = wire.system_from_wire(body.get("system"), params)
        closure = extension_closure(system)
        if fmt == "svg":
            return 200, render.export_svg_closure(closure), "image/svg+xml"
        payload = wire.closure_to_wire(closure)
        if "torsion" in body:
            subset = wire.diagonals_from_wire(body["torsion"], params)
            payload["torsion_pair"] = wire.torsion_to_wire(
                torsion_pair(closure, subset)
            )
        return (200, *_json_response(params, payload))
    if path == "/tilt":
        params = _require_params(query)
        system = wire.system_from_wire(body.get("system"), params)
        pivot = wire.diagonals_from_wire(body.get("pivot"), params)
        direction = body.get("direction")
        if direction not in ("left", "right"):
            raise ParameterError('direction must be "left" or "right"')
        move = (left_tilt if direction == "left" else right_tilt)(system, pivot)
        if fmt == "svg":
            return 200, render.export_svg_system(params, move.result.simples), "image/svg+xml"
        return (200, *_json_response(params, wire.tilt_to_wire(move)))
    raise LookupError(path)


class WorkbenchHandler(BaseHTTPRequestHandler):
    def log_message(self, *args):  # keep test output quiet
        pass

    def _send(self, status: int, body: str, content_type: str) -> None:
        data = body.encode()
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _dispatch(self, method: str) -> None:
        parsed = urlparse(self.path)
        query = parse_qs(parsed.query)
        try:
            if method == "GET":
                status, body, content_type = handle_get(parsed.path, query)
            else:
                length = int(self.headers.get("Content-Length") or 0)
                raw = self.rfile.read(length) if length else b""
                try:
                    payload = json.loads(raw) if raw else {}
                except json.JSONDecodeError as exc:
                    raise _MalformedBody(str(exc))
                if not isinstance(payload, dict):
                    raise _MalformedBody("request body must be a JSON object")
                status, body, content_type = handle_post(parsed.path, query, payload)
        except LookupError:
            error = {"code": "parameter_error", "message": "unknown route", "details": {}}
            status, body, content_type = 404, wire.dumps(error), "application/json"
        except _MalformedBody as exc:
            error = {"code": "parameter_error", "message": str(exc), "details": {}}
            status, body, content_type = 422, wire.dumps(error), "application/json"
        except WorkbenchError as exc:
            status, body, content_type = 400, wire.dumps(exc.to_wire()), "application/json"
        self._send(status, body, content_type)

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")


def make_server(port: int) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), WorkbenchHandler)


def serve(port: int) -> None:
    server = make_server(port)
    print(f"serving on http://127.0.0.1:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
