import json
from pathlib import Path

import jsonschema
import pytest

from metdim.cli import main
from metdim.constructions import ck_q, grid
from metdim.graph import load_graph, save_json, to_edgelist

from conftest import complete, path

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in {"p5": path(5), "k3": complete(3), "grid52": grid(5, 2)}.items():
        out[name] = tmp_path / f"{name}.txt"
        out[name].write_text(to_edgelist(g))
    return out


def test_gen_grid(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert run(capsys, "gen", "grid", "--n", 3, "--d", 2, "--out", out)[0] == 0
    assert load_graph(out).n == 9


def test_gen_ck_landmarks(tmp_path, capsys):
    out = tmp_path / "c.json"
    run(capsys, "gen", "ck", "--k", 2, "--q", 2, "--out", out, "--dot", tmp_path / "c.dot")
    g = load_graph(out)
    assert g == ck_q(2, 2) and g.landmarks == ck_q(2, 2).landmarks
    assert "fillcolor" in (tmp_path / "c.dot").read_text()


def test_gen_clique_gadget(capsys):
    code, out, _ = run(capsys, "gen", "clique-gadget", "--k", 3, "--seed", 7)
    d = json.loads(out)
    assert code == 0 and d["meta"]["strings"] == ["101", "110"] and d["meta"]["landmarks"]


@pytest.mark.parametrize("argv", [
    ["dk-window", "--k", "2", "--lo", "0,1", "--hi", "2"],
    ["mk", "--k", "2"], ["hypercube", "--n", "3"], ["knn", "--k", "3"], ["wheel-host", "--k", "2"],
    ["clique-gadget", "--k", "2", "--strings", "00,01,10"],
])
def test_gen_every_family_round_trips(tmp_path, capsys, argv):
    out = tmp_path / "g.json"
    assert run(capsys, "gen", *argv, "--out", out)[0] == 0
    g = load_graph(out)
    save_json(g, tmp_path / "again.json")
    assert load_graph(tmp_path / "again.json") == g


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "ck", "--k", 2)
    assert code == 2 and "--q" in err
    assert run(capsys, "gen", "grid", "--n", 1, "--d", 2)[0] == 2


def test_dim(files, capsys):
    assert json.loads(run(capsys, "dim", files["p5"])[1])["value"] == 1
    assert json.loads(run(capsys, "dim", files["grid52"])[1])["value"] == 2
    assert json.loads(run(capsys, "dim", files["grid52"], "--edge")[1])["value"] == 2


def test_dim_cap_and_verbose(files, capsys):
    d = json.loads(run(capsys, "dim", files["k3"], "--max-k", 1)[1])
    assert d["value"] == 2 and d["complete"] is False
    d = json.loads(run(capsys, "dim", files["k3"], "--verbose", "--method", "lex")[1])
    assert d["value"] == 2 and d["refutations"][0] == {"set": [0], "pair": [1, 2]}


def test_verify(tmp_path, files, capsys):
    c = tmp_path / "c.json"
    save_json(ck_q(2, 2), c)
    assert run(capsys, "verify", c)[0] == 0
    code, out, _ = run(capsys, "verify", files["k3"], "--set", "0")
    assert code == 1 and json.loads(out)["counterexample"] == [1, 2]


def test_verify_mk2_edge_set_below_dominant_bound(tmp_path, capsys):
    m = tmp_path / "m.json"
    assert run(capsys, "gen", "mk", "--k", 2, "--out", m)[0] == 0
    code, out, _ = run(capsys, "verify", m, "--set", "1,3,5", "--edge")
    assert code == 1 and json.loads(out)["resolving"] is False


def test_report_and_dot(files, capsys):
    code, out, _ = run(capsys, "report", files["k3"])
    assert code == 0 and json.loads(out)["chromatic_number"] == 3
    code, out, _ = run(capsys, "export-dot", files["p5"], "--highlight", "0")
    assert code == 0 and out.startswith("graph G {")


def test_missing_file(capsys):
    assert run(capsys, "dim", "/nonexistent.json")[0] == 2


def test_suite_subset_and_schema(tmp_path, capsys):
    rep = tmp_path / "r.json"
    code, out, _ = run(capsys, "suite", "--k-max", 2, "--only", "1,2,3,8", "--report", rep)
    assert code == 0 and "all claims pass" in out
    data = json.loads(rep.read_text())
    jsonschema.validate(data, SCHEMA)
    assert set(data["summary"]) == {"1", "2", "3", "8"}


def _strip_timing(text):
    data = json.loads(text)
    for r in data["results"]:
        r.pop("elapsed_ms")
    return data


def test_suite_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["suite", "--k-max", 3, "--only", "11,12", "--random-graphs", 30, "--seed", 5]
    run(capsys, *args, "--report", a)
    run(capsys, *args, "--report", b, "--jobs", 2)
    assert _strip_timing(a.read_text()) == _strip_timing(b.read_text())
