"""Command line adapter: payloads, exit codes, and file handling."""

import json

import pytest

from bsx.cli import run
from bsx.mn_graph import graph_from_json_obj, graph_to_json_obj
from bsx.service import dumps
from tests.conftest import make_fig_graph


@pytest.fixture
def fig_file(tmp_path):
    path = tmp_path / "fig.json"
    path.write_text(dumps(graph_to_json_obj(make_fig_graph())))
    return str(path)


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_phenotype_command(capsys):
    code, out = invoke(capsys, "phenotype", "-m", "180", "-n", "12", "42")
    assert code == 0
    assert out == "7\n"
    code, out = invoke(capsys, "phenotype", "-m", "2", "-n", "3", "inf")
    assert (code, out) == (0, "inf\n")


def test_validate_command(capsys, fig_file):
    code, out = invoke(capsys, "validate", fig_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["saturated"] is False


def test_validate_bad_graph_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(dumps({
        "m": 2, "n": 3,
        "vertices": [{"id": "v", "label": 6}],
        "edges": [{"id": "e", "src": "v", "dst": "v"}],
    }))
    code, out = invoke(capsys, "validate", str(path))
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["violations"][0]["kind"] == "TransferMismatch"


def test_admissible_command(capsys):
    code, out = invoke(capsys, "admissible", "-m", "2", "-n", "3", "--label", "3", "--dir", "out")
    assert code == 0
    assert json.loads(out) == {"labels": [1, 2]}


def test_connect_command(capsys):
    code, out = invoke(
        capsys, "connect", "-m", "2", "-n", "3",
        "--from", "1", "--to", "1", "--from-orient", "+", "--to-orient", "+",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["graph"]["edges"]) == 1
    graph_from_json_obj(payload["graph"])  # parses back


def test_connect_mismatch_exits_1(capsys):
    code, out = invoke(
        capsys, "connect", "-m", "2", "-n", "3",
        "--from", "5", "--to", "7", "--from-orient", "+", "--to-orient", "+",
    )
    assert code == 1
    assert json.loads(out)["error"] == "PhenotypeMismatch"


def test_weld_saturate_merge_flip_pipeline(capsys, fig_file, tmp_path):
    code, out = invoke(capsys, "saturate", fig_file, "--rounds", "1")
    assert code == 0
    saturated = json.loads(out)
    assert saturated["frontier"]
    code, out = invoke(capsys, "flip", fig_file)
    assert code == 0
    assert json.loads(out)["m"] == 3
    code, out = invoke(capsys, "merge", fig_file, fig_file, "--rounds", "1")
    assert code == 0
    merged = json.loads(out)
    assert set(merged) == {"graph", "embed1", "embed2", "frontier"}


def test_realize_bass_serre_round_trip(capsys, fig_file, tmp_path):
    code, out = invoke(capsys, "realize", fig_file)
    assert code == 0
    pa_path = tmp_path / "pa.json"
    pa_path.write_text(out)
    code, out2 = invoke(capsys, "bass-serre", str(pa_path))
    assert code == 0
    back = json.loads(out2)
    assert {v["label"] for v in back["vertices"]} == {8, 4, 6, 9}


def test_eval_and_schreier(capsys, fig_file, tmp_path):
    code, out = invoke(capsys, "realize", fig_file)
    pa_path = tmp_path / "pa.json"
    pa_path.write_text(out)
    code, out = invoke(capsys, "eval", str(pa_path), "--point", "0", "--word", "b^8")
    assert code == 0
    assert json.loads(out) == {"result": 0}
    code, out = invoke(capsys, "schreier", str(pa_path), "--dot")
    assert code == 0
    assert out.startswith("digraph")
    code, out = invoke(capsys, "schreier", str(pa_path))
    assert code == 0
    assert json.loads(out)["points"] == 31


def test_classify_and_mcq_and_quotient(capsys, tmp_path):
    code, out = invoke(capsys, "quotient", "-m", "2", "-n", "3", "-q", "5", "--window", "2")
    assert code == 0
    qa_path = tmp_path / "qa.json"
    qa_path.write_text(out)
    code, out = invoke(capsys, "mcq", str(qa_path))
    assert code == 0
    assert json.loads(out)["verdict"] in ("yes", "unknown")
    code, out = invoke(capsys, "classify", str(qa_path))
    assert code == 0
    assert "verdict" in json.loads(out)


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        run(["phenotype", "-m", "2"])
    assert e.value.code == 2


def test_missing_file_exits_1(capsys):
    code, out = invoke(capsys, "validate", "/nonexistent/g.json")
    assert code == 1
    assert json.loads(out)["error"] == "InvalidInput"
