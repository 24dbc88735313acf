#!/usr/bin/env python3
"""HTTP bridge between the browser UI and the core toolkit.

Serves the static UI from this directory and exposes one endpoint:

    POST /api/compute   {"points": [[x, y], ...], "mode": "...",
                         "s": ..., "t": ..., "k": ...}        -> Scene JSON

The scene comes from the same pipeline the CLI uses, so the browser shows
exactly what `wellsep <mode>` would emit for the same inputs.
"""

from __future__ import annotations

import argparse
import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from wellsep.errors import WellsepError
from wellsep.geometry import PointSet
from wellsep.pipeline import compute_scene

UI_ROOT = Path(__file__).resolve().parent

CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".map": "application/json",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
}


class BridgeHandler(BaseHTTPRequestHandler):
    quiet = False

    def log_message(self, fmt, *args):
        if not self.quiet:
            super().log_message(fmt, *args)

    def _send(self, code: int, body: bytes, content_type: str) -> None:
        self.send_response(code)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, code: int, obj) -> None:
        self._send(code, json.dumps(obj).encode(), "application/json")

    def do_GET(self):
        path = self.path.split("?", 1)[0]
        if path == "/healthz":
            self._send_json(200, {"ok": True})
            return
        if path == "/":
            path = "/index.html"
        target = (UI_ROOT / path.lstrip("/")).resolve()
        if not str(target).startswith(str(UI_ROOT)) or not target.is_file():
            self._send_json(404, {"error": f"not found: {path}"})
            return
        ctype = CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), ctype)

    def do_POST(self):
        if self.path != "/api/compute":
            self._send_json(404, {"error": f"not found: {self.path}"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            request = json.loads(self.rfile.read(length))
            ps = PointSet.from_xy(request["points"])
            scene = compute_scene(
                ps,
                request["mode"],
                s=request.get("s"),
                t=request.get("t"),
                k=request.get("k"),
            )
        except (WellsepError, ValueError, KeyError, TypeError) as exc:
            self._send_json(400, {"error": str(exc)})
            return
        self._send(200, scene.to_json().encode(), "application/json")


def main() -> None:
    parser = argparse.ArgumentParser(description="wellsep UI bridge")
    parser.add_argument("--port", type=int, default=8787)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--quiet", action="store_true")
    args = parser.parse_args()
    BridgeHandler.quiet = args.quiet
    server = ThreadingHTTPServer((args.host, args.port), BridgeHandler)
    print(f"wellsep UI on http://{args.host}:{args.port}/ (ctrl-c to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass


if __name__ == "__main__":
    main()
