import io
import json

import pytest

from sftmix.cli import SCHEMA, VERSION, run_command
from sftmix.core import serialize_basic_set
from sftmix.examples import EXAMPLES


@pytest.fixture
def gm_path(tmp_path):
    path = tmp_path / "gm.json"
    path.write_text(serialize_basic_set(EXAMPLES["golden_mean"]()))
    return str(path)


@pytest.fixture
def sv_path(tmp_path):
    path = tmp_path / "sv.json"
    path.write_text(serialize_basic_set(EXAMPLES["six_vertex"]()))
    return str(path)


def _run(argv):
    buf = io.StringIO()
    rc = run_command(argv, buf)
    return rc, buf.getvalue()


def test_report_golden_mean(gm_path):
    rc, out = _run(["report", "--input", gm_path])
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA and doc["version"] == VERSION
    assert [(v["property"], v["status"]) for v in doc["verdicts"]] == [
        ("primitivity-all-n", "proved"),
        ("primitivity-all-n", "proved"),
        ("mixing", "proved"),
        ("block-gluing", "evidence"),
        ("strong-specification", "proved"),
    ]
    assert doc["input"]["mode"] == "vertex"
    assert doc["input"]["p"] == 2 and doc["input"]["patterns"] == 7
    assert len(doc["input"]["digest"]) == 64


def test_report_bytes_are_stable(gm_path):
    rc1, out1 = _run(["report", "--input", gm_path])
    rc2, out2 = _run(["report", "--input", gm_path])
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_report_edge_set(sv_path):
    rc, out = _run(["report", "--input", sv_path])
    assert rc == 0
    doc = json.loads(out)
    assert [(v["property"], v["status"]) for v in doc["verdicts"]] == [
        ("primitivity-all-n", "proved"),
        ("primitivity-all-n", "proved"),
        ("mixing", "proved"),
    ]
    assert doc["input"]["mode"] == "edge" and doc["input"]["patterns"] == 6


def test_replay_round_trip(gm_path, tmp_path):
    rc, out = _run(["report", "--input", gm_path])
    stored = tmp_path / "report.json"
    stored.write_text(out)
    rc, replayed = _run(["report", "--input", gm_path, "--replay", str(stored)])
    assert rc == 0
    doc = json.loads(replayed)
    statuses = [(v["property"], v["status"]) for v in doc["verdicts"]]
    assert statuses == [(v["property"], v["status"]) for v in json.loads(out)["verdicts"]]
    assert all(v["caps"]["replayed"] is True for v in doc["verdicts"])


def test_replay_degrades_tampered_report(gm_path, tmp_path):
    _, out = _run(["report", "--input", gm_path])
    doc = json.loads(out)
    doc["verdicts"][2]["certificate"]["h"]["K"] = [2]
    stored = tmp_path / "tampered.json"
    stored.write_text(json.dumps(doc))
    rc, replayed = _run(["report", "--input", gm_path, "--replay", str(stored)])
    assert rc == 0
    verdicts = json.loads(replayed)["verdicts"]
    assert verdicts[2]["property"] == "mixing" and verdicts[2]["status"] == "unknown"
    # untouched verdicts still replay as proved
    assert verdicts[0]["status"] == "proved"


def test_usage_errors_exit_one(gm_path, sv_path, tmp_path, capsys):
    rc, _ = _run(["report", "--input", str(tmp_path / "missing.json")])
    assert rc == 1
    assert "error:" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert _run(["report", "--input", str(bad)])[0] == 1
    assert _run(["edge", "--input", gm_path])[0] == 1
    assert _run(["hfc", "--input", gm_path, "--k", "1"])[0] == 1
    noschema = tmp_path / "noschema.json"
    noschema.write_text(json.dumps({"verdicts": []}))
    assert _run(["report", "--input", gm_path, "--replay", str(noschema)])[0] == 1
    assert _run(["unknown-command", "--input", gm_path])[0] == 1


def test_resource_cap_exits_two(gm_path, capsys):
    rc, _ = _run(["hfc", "--input", gm_path, "--m", "12", "--n", "1"])
    assert rc == 2
    assert "cap exceeded" in capsys.readouterr().err


def test_text_format(gm_path):
    rc, out = _run(["mixing", "--input", gm_path, "--format", "text"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "report schema sftmix-report/1 version 0.1.0"
    assert lines[1].startswith("input: mode=vertex p=2 patterns=7 digest=")
    assert "mixing: proved via equivalence-corners" in lines
    assert lines[-1].startswith("timing:")


def test_inspect_structure(gm_path):
    rc, out = _run(["inspect", "--input", gm_path])
    assert rc == 0
    st = json.loads(out)["structure"]
    assert st["corners"] == [True, True, True, True]
    assert st["crisscross"] is True
    assert st["rectangle_extendability"]["status"] == "proved"


def test_oracle_subcommand(gm_path):
    rc, out = _run(["oracle", "--input", gm_path, "--m", "3", "--n", "3"])
    assert rc == 0
    cc = json.loads(out)["crosscheck"]
    assert cc["ok"] is True
    assert {"m": 2, "n": 2, "matrix": 7, "oracle": 7, "ok": True} in cc["rows"]


def test_hfc_subcommand(gm_path):
    rc, out = _run(["hfc", "--input", gm_path])
    assert rc == 0
    v = json.loads(out)["verdicts"][0]
    assert v["property"] == "hole-filling" and v["status"] == "proved"
    assert v["certificate"]["checked"] == 171
