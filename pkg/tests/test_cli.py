import io
import json
import subprocess
import sys

import pytest

from gadgetlab.cli import asymptotic_schedule, run
from gadgetlab.families import Family, dumps_family, loads_family
from gadgetlab.hypergraph import loads_coloring, loads_hgr, loads_vertex_set
from gadgetlab.labelcover import loads_instance


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bounds_ft(capsys):
    code, out, _ = call(capsys, "bounds", "ft", "--n", "7", "--t", "2")
    assert code == 0 and json.loads(out)["bound"] == 99


def test_bounds_range_gives_rows(capsys):
    code, out, _ = call(capsys, "bounds", "golden", "--n", "3:4", "--t", "1")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["n"] for r in rows] == [3, 4]


def test_family_search_exact(capsys):
    code, out, _ = call(capsys, "family", "search", "--q", "2", "--n", "3", "--k", "3", "--t", "1", "--method", "exact")
    rep = json.loads(out)
    assert code == 0 and rep["max_size"] == 4 and rep["exhaustive"] is True


def test_pipeline_completeness(capsys):
    code, out, _ = call(capsys, "pipeline", "completeness", "--q", "3", "--k", "2", "--L", "3", "--seed", "7")
    assert code == 0 and json.loads(out)["monochromatic"] == 0


def test_tsv_output(capsys):
    code, out, _ = call(capsys, "bounds", "ft", "--n", "7", "--t", "2", "--tsv")
    assert code == 0
    assert "bound\t99" in out.splitlines()


def test_report_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = call(capsys, "bounds", "ft", "--n", "7", "--t", "2", "--report", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["bound"] == 99


def test_family_check_failure_exits_one(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text(dumps_family(Family.from_digits(["00", "11"], 2)))
    code, out, _ = call(capsys, "family", "check", "--family", str(path), "--k", "2", "--t", "1")
    assert code == 1 and json.loads(out)["holds"] is False


def test_family_monotonize_from_stdin(capsys, monkeypatch):
    text = dumps_family(Family.from_digits(["00", "01"], 2))
    code, out, _ = call(capsys, "family", "monotonize", "--family", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    assert sorted(loads_family(out).digits()) == ["10", "11"]


def test_usage_error_is_json_on_stderr(capsys):
    code, out, err = call(capsys, "bounds", "ft", "--n", "seven", "--t", "2")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "UsageError"
    code, _, err = call(capsys, "nosuch")
    assert code == 2 and json.loads(err)["exit_code"] == 2


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = call(capsys, "lc", "eval", "--instance", str(tmp_path / "x"), "--assignment", str(tmp_path / "y"))
    assert code == 2 and "error" in json.loads(err)


def test_infeasible_exits_three(capsys):
    code, _, err = call(capsys, "family", "search", "--q", "3", "--n", "4", "--k", "2", "--t", "1", "--method", "exact")
    assert code == 3 and json.loads(err)["error"] == "Infeasible"


def test_bad_thread_count(capsys, monkeypatch):
    monkeypatch.setenv("GADGETLAB_THREADS", "zero")
    code, _, _ = call(capsys, "bounds", "ft", "--n", "7", "--t", "2")
    assert code == 2


def test_gadget_file_chain(capsys, tmp_path):
    inst, A = tmp_path / "inst.json", tmp_path / "a.json"
    code, _, _ = call(
        capsys, "lc", "gen", "--n-left", "2", "--n-right", "1", "--L", "2", "--R", "2",
        "--seed", "1", "--out", str(inst), "--assignment-out", str(A),
    )
    assert code == 0 and loads_instance(inst.read_text()).n_left == 2
    code, out, _ = call(capsys, "lc", "eval", "--instance", str(inst), "--assignment", str(A))
    assert code == 0 and json.loads(out)["fraction"] == 1.0

    hgr, vmap = tmp_path / "g.hgr", tmp_path / "g.json"
    code, _, _ = call(
        capsys, "reduce", "materialize", "--instance", str(inst), "--q", "3", "--k", "2",
        "--out", str(hgr), "--vertex-map", str(vmap),
    )
    assert code == 0
    h = loads_hgr(hgr.read_text())

    col = tmp_path / "col.json"
    code, out, _ = call(capsys, "solve", "color", "--hgr", str(hgr), "--colors", "3", "--out", str(col))
    assert code == 0 and json.loads(out)["exists"]
    assert len(loads_coloring(col.read_text())) == h.n_vertices
    code, out, _ = call(capsys, "verify", "coloring", "--hgr", str(hgr), "--coloring", str(col))
    assert code == 0 and json.loads(out)["monochromatic"] == 0
    code, out, _ = call(
        capsys, "verify", "coloring", "--instance", str(inst), "--q", "3", "--k", "2", "--assignment", str(A)
    )
    assert code == 0 and json.loads(out)["monochromatic"] == 0

    code, out, _ = call(capsys, "solve", "mis", "--hgr", str(hgr))
    rep = json.loads(out)
    assert code == 0 and rep["exact"]
    S = tmp_path / "s.json"
    S.write_text(json.dumps({"vertices": rep["vertices"]}))
    assert len(loads_vertex_set(S.read_text())) == rep["size"]
    code, out, _ = call(capsys, "verify", "independent", "--hgr", str(hgr), "--set", str(S))
    assert code == 0 and json.loads(out)["independent"]

    S.write_text(json.dumps({"vertices": list(range(1, h.n_vertices + 1))}))
    code, out, _ = call(capsys, "verify", "independent", "--instance", str(inst), "--q", "3", "--k", "2", "--set", str(S))
    assert code == 1 and json.loads(out)["independent"] is False
    code, _, err = call(capsys, "decode", "bipartite", "--instance", str(inst), "--q", "3", "--k", "2", "--set", str(S),
                        "--verify", "exhaustive")
    assert code == 1 and json.loads(err)["error"] == "NotIndependent"


def test_instance_piping_through_stdout_and_stdin():
    gen = subprocess.run(
        [sys.executable, "-m", "gadgetlab.cli", "lc", "gen", "--n-left", "2", "--n-right", "1", "--L", "2", "--R", "2"],
        capture_output=True, check=True,
    )
    summary = subprocess.run(
        [sys.executable, "-m", "gadgetlab.cli", "reduce", "two-k", "--instance", "-", "--q", "3", "--k", "2"],
        input=gen.stdout, capture_output=True, check=True,
    )
    assert json.loads(summary.stdout)["vertices"] == 18


def test_pipeline_soundness_report(capsys):
    code, out, _ = call(capsys, "pipeline", "soundness", "--q", "2", "--k", "2", "--L", "3", "--R", "2", "--seed", "3",
                        "--baseline-trials", "50")
    rep = json.loads(out)
    assert code == 0 and "baseline" in json.dumps(rep)


def test_asymptotic_schedule():
    s = asymptotic_schedule(0.5, 1.0)
    assert s["t"] == 1 and s["ell"] == 8


@pytest.mark.parametrize("group", ["lc", "family", "bounds", "reduce", "verify", "solve", "decode", "pipeline"])
def test_help_exits_cleanly(group, capsys):
    with pytest.raises(SystemExit) as exc:
        run([group, "--help"])
    assert exc.value.code == 0
