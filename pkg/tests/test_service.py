"""The local HTTP service: endpoint payloads, status codes, and byte
equality with the CLI output."""

import http.client
import json
import threading

import pytest

from bsx.cli import run
from bsx.mn_graph import graph_to_json_obj
from bsx.service import dumps, make_server
from tests.conftest import make_fig_graph


@pytest.fixture(scope="module")
def server():
    httpd = make_server(0)
    port = httpd.server_address[1]
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield port
    httpd.shutdown()
    httpd.server_close()


def post(port, path, body):
    conn = http.client.HTTPConnection("127.0.0.1", port, timeout=10)
    payload = dumps(body)
    conn.request("POST", path, payload, {"Content-Type": "application/json"})
    resp = conn.getresponse()
    raw = resp.read()
    conn.close()
    return resp.status, raw


def test_admissible_targets(server):
    status, raw = post(server, "/admissible-targets", {"m": 2, "n": 3, "label": 3, "dir": "out"})
    assert status == 200
    assert json.loads(raw) == {"labels": [1, 2]}
    status, raw = post(server, "/admissible-targets", {"m": 2, "n": 3, "label": 6, "dir": "out"})
    assert json.loads(raw) == {"labels": [4]}


def test_validate_fig(server):
    body = {"graph": graph_to_json_obj(make_fig_graph())}
    status, raw = post(server, "/validate", body)
    assert status == 200
    payload = json.loads(raw)
    assert payload["ok"] is True and payload["saturated"] is False


def test_connect_mismatch_is_422(server):
    status, raw = post(
        server, "/connect",
        {"m": 2, "n": 3, "from": 5, "to": 7, "from_orient": "+", "to_orient": "+"},
    )
    assert status == 422
    assert json.loads(raw)["error"] == "PhenotypeMismatch"


def test_phenotype_endpoint(server):
    status, raw = post(server, "/phenotype", {"m": 180, "n": 12, "k": 42})
    assert (status, json.loads(raw)) == (200, {"phenotype": 7})
    status, raw = post(server, "/phenotype", {"m": 2, "n": 3, "k": "inf"})
    assert json.loads(raw) == {"phenotype": "inf"}


def test_weld_and_saturate_and_merge(server):
    fig = graph_to_json_obj(make_fig_graph())
    status, raw = post(server, "/saturate", {"graph": fig, "rounds": 1})
    assert status == 200
    assert json.loads(raw)["frontier"]
    status, raw = post(server, "/merge", {"graph1": fig, "graph2": fig, "rounds": 1})
    assert status == 200
    out = json.loads(raw)
    assert set(out) == {"graph", "embed1", "embed2", "frontier"}
    two = {
        "m": 2, "n": 3,
        "vertices": [{"id": "u", "label": 5}, {"id": "v", "label": 5}],
        "edges": [],
    }
    status, raw = post(server, "/weld", {"graph": two, "v": "u", "w": "v"})
    assert status == 200
    assert len(json.loads(raw)["vertices"]) == 1


def test_realize_classify_eval_mcq(server):
    fig = graph_to_json_obj(make_fig_graph())
    status, raw = post(server, "/realize", {"graph": fig})
    assert status == 200
    pa = json.loads(raw)
    assert pa["points"] == 31
    status, raw = post(server, "/classify", {"graph": fig})
    assert status == 200
    status, raw = post(server, "/eval", {"preaction": pa, "point": 0, "word": "b^8"})
    assert json.loads(raw) == {"result": 0}
    status, raw = post(server, "/quotient", {"m": 2, "n": 3, "q": 5, "window": 2})
    assert status == 200
    qa = json.loads(raw)
    status, raw = post(server, "/mcq", {"preaction": qa})
    assert status == 200
    assert json.loads(raw)["verdict"] in ("yes", "unknown")


def test_bad_json_is_400(server):
    conn = http.client.HTTPConnection("127.0.0.1", server, timeout=10)
    conn.request("POST", "/validate", "{not json", {"Content-Type": "application/json"})
    resp = conn.getresponse()
    assert resp.status == 400
    conn.close()


def test_unknown_field_is_400(server):
    fig = graph_to_json_obj(make_fig_graph())
    fig["color"] = "red"
    status, raw = post(server, "/validate", {"graph": fig})
    assert status == 400


def test_unknown_endpoint_is_404(server):
    status, _ = post(server, "/nope", {})
    assert status == 404


def test_cli_and_service_agree_byte_for_byte(server, tmp_path, capsys):
    fig = graph_to_json_obj(make_fig_graph())
    path = tmp_path / "fig.json"
    path.write_text(dumps(fig))

    run(["validate", str(path)])
    cli_out = capsys.readouterr().out.strip().encode()
    _, service_out = post(server, "/validate", {"graph": fig})
    assert cli_out == service_out

    run(["admissible", "-m", "2", "-n", "3", "--label", "3", "--dir", "out"])
    cli_out = capsys.readouterr().out.strip().encode()
    _, service_out = post(server, "/admissible-targets", {"m": 2, "n": 3, "label": 3, "dir": "out"})
    assert cli_out == service_out

    run(["merge", str(path), str(path), "--rounds", "1"])
    cli_out = capsys.readouterr().out.strip().encode()
    _, service_out = post(server, "/merge", {"graph1": fig, "graph2": fig, "rounds": 1})
    assert cli_out == service_out
