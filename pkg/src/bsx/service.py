"""Stateless JSON-over-HTTP service.

Every endpoint deserializes the whole object from the request body,
runs one library operation, and returns JSON; no session state exists,
so the builder client re-sends its working graph on each call.  Bad or
invalid input is 400 with the validation report; precondition failures
(label, phenotype, degree, coprimality...) are 422.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .arith import BSParams, is_inf, phenotype
from .errors import BsxError, InvalidGraph, InvalidInput, InvalidPreAction
from .mn_graph import (
    MnGraph,
    admissible_neighbor_labels,
    connect_path,
    forest_saturate,
    graph_from_json_obj,
    graph_phenotype,
    graph_to_json_obj,
    merge_graphs,
    saturation_report,
    validate,
    weld,
)
from .preaction import (
    PointedAction,
    evaluate,
    preaction_from_json_obj,
    preaction_to_json_obj,
    realize,
)
from .subgroups import classify_kernel, mcq_member, quotient_action
from .words import parse_word

log = logging.getLogger("bsx.service")


def dumps(obj) -> str:
    """The one serializer shared by the CLI and the service."""
    return json.dumps(obj, separators=(",", ":"))


def _card_from_json(value):
    from .mn_graph import label_from_json

    return label_from_json(value)


def _require(body: dict, *fields):
    for f in fields:
        if f not in body:
            raise InvalidInput(f"missing field {f!r}")
    return [body[f] for f in fields]


def _params(body: dict) -> BSParams:
    m, n = _require(body, "m", "n")
    if not isinstance(m, int) or not isinstance(n, int) or isinstance(m, bool) or isinstance(n, bool):
        raise InvalidInput("m and n must be integers")
    try:
        return BSParams(m, n)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def validation_payload(g: MnGraph) -> dict:
    """Shared by the CLI and the /validate endpoint: the report plus the
    live-status extras the builder client renders (deficits, phenotypes)."""
    report = validate(g)
    payload = report.as_json()
    if not report.ok:
        payload["saturated"] = False
        return payload
    sat = saturation_report(g)
    payload["saturated"] = sat.saturated
    payload["deficits"] = {v: list(sat.deficits[v]) for v in sorted(sat.deficits)}
    payload["phenotypes"] = [
        {"vertices": list(comp), "phenotype": "inf" if is_inf(q) else q}
        for comp, q in sorted(graph_phenotype(g).items())
    ]
    return payload


def handle_validate(body):
    return validation_payload(graph_from_json_obj(body.get("graph", body)))


def handle_admissible_targets(body):
    params = _params(body)
    label, direction = _require(body, "label", "dir")
    direction = {"out": "outgoing", "in": "incoming"}.get(direction)
    if direction is None:
        raise InvalidInput("dir must be 'out' or 'in'")
    labels = admissible_neighbor_labels(params, _card_from_json(label), direction)
    return {"labels": ["inf" if is_inf(l) else l for l in labels]}


def handle_weld(body):
    graph, v, w = _require(body, "graph", "v", "w")
    g = weld(graph_from_json_obj(graph), v, w)
    return graph_to_json_obj(g)


def handle_connect(body):
    params = _params(body)
    src, dst = _require(body, "from", "to")
    ok = body.get("from_orient", "+")
    ol = body.get("to_orient", "+")
    res = connect_path(params, src, dst, ok, ol)
    return {"graph": graph_to_json_obj(res.graph), "start": res.start, "end": res.end}


def handle_saturate(body):
    (graph,) = _require(body, "graph")
    rounds = body.get("rounds", 1)
    if not isinstance(rounds, int) or isinstance(rounds, bool) or rounds < 0:
        raise InvalidInput("rounds must be a non-negative integer")
    g, frontier = forest_saturate(graph_from_json_obj(graph), rounds)
    return {"graph": graph_to_json_obj(g), "frontier": sorted(frontier)}


def handle_merge(body):
    g1, g2 = _require(body, "graph1", "graph2")
    rounds = body.get("rounds", 1)
    result = merge_graphs(graph_from_json_obj(g1), graph_from_json_obj(g2), rounds)
    return {
        "graph": graph_to_json_obj(result.graph),
        "embed1": result.embed1,
        "embed2": result.embed2,
        "frontier": sorted(result.frontier),
    }


def handle_phenotype(body):
    params = _params(body)
    (k,) = _require(body, "k")
    q = phenotype(params, _card_from_json(k))
    return {"phenotype": "inf" if is_inf(q) else q}


def handle_realize(body):
    (graph,) = _require(body, "graph")
    pa = realize(graph_from_json_obj(graph))
    return preaction_to_json_obj(pa)


def handle_classify(body):
    payload = body.get("graph") or body.get("preaction") or body
    if isinstance(payload, dict) and "beta" in payload:
        pa, _ = preaction_from_json_obj(payload)
        return classify_kernel(pa).as_json()
    return classify_kernel(graph_from_json_obj(payload)).as_json()


def handle_mcq(body):
    (payload,) = _require(body, "preaction")
    pa, basepoint = preaction_from_json_obj(payload)
    if basepoint is None:
        raise InvalidInput("mcq needs a basepoint")
    return {"verdict": mcq_member(PointedAction(pa, basepoint))}


def handle_eval(body):
    payload, point, word = _require(body, "preaction", "point", "word")
    pa, _ = preaction_from_json_obj(payload)
    if not isinstance(point, int) or isinstance(point, bool):
        raise InvalidInput("point must be an integer")
    result = evaluate(pa, point, parse_word(word))
    return {"result": result}


def handle_quotient(body):
    params = _params(body)
    (q,) = _require(body, "q")
    window = body.get("window", 3)
    pointed = quotient_action(params, q, window)
    return preaction_to_json_obj(pointed.pre, pointed.basepoint)


ROUTES = {
    "/validate": handle_validate,
    "/admissible-targets": handle_admissible_targets,
    "/weld": handle_weld,
    "/connect": handle_connect,
    "/saturate": handle_saturate,
    "/merge": handle_merge,
    "/phenotype": handle_phenotype,
    "/realize": handle_realize,
    "/classify": handle_classify,
    "/mcq": handle_mcq,
    "/eval": handle_eval,
    "/quotient": handle_quotient,
}


class Handler(BaseHTTPRequestHandler):
    server_version = "bsx"

    def log_message(self, fmt, *args):
        log.debug("%s " + fmt, self.address_string(), *args)

    def _send(self, status: int, obj):
        data = dumps(obj).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self):
        handler = ROUTES.get(self.path)
        if handler is None:
            self._send(404, {"error": "NoSuchEndpoint", "detail": self.path})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            body = json.loads(raw) if raw else {}
            if not isinstance(body, dict):
                raise InvalidInput("request body must be a JSON object")
        except (ValueError, InvalidInput) as exc:
            self._send(400, {"error": "BadRequest", "detail": str(exc)})
            return
        try:
            self._send(200, handler(body))
        except (InvalidGraph, InvalidPreAction) as exc:
            payload = exc.report.as_json() if exc.report is not None else {}
            self._send(400, {"error": type(exc).__name__, **payload})
        except InvalidInput as exc:
            self._send(400, {"error": "InvalidInput", "detail": str(exc)})
        except BsxError as exc:
            self._send(422, {"error": type(exc).__name__, "detail": str(exc)})
        except Exception as exc:  # pragma: no cover - defensive
            log.exception("internal error")
            self._send(500, {"error": "Internal", "detail": str(exc)})


def make_server(port: int) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), Handler)


def serve(port: int) -> None:
    httpd = make_server(port)
    log.info("listening on 127.0.0.1:%d", port)
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()
