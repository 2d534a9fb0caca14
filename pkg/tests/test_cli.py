import json
import subprocess
import sys

import numpy as np
import pytest

from qmycielski import io as qio
from qmycielski import make_graph, mycielskian
from qmycielski.cli import main
from qmycielski.generators import generate


@pytest.fixture
def work(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(*argv):
    return main([str(a) for a in argv])


def test_check_c5(work, capsys):
    assert run("generate", "cn", "5", "-o", "c5.json") == 0
    capsys.readouterr()
    assert run("check", "c5.json") == 0
    out = capsys.readouterr().out
    assert "verdict: pass" in out and "irreflexive" in out


def test_check_failing_graph(work):
    s = generate("kn", 2).space
    qio.write_json("bad.json", qio.graph_to_dict(make_graph(s, 2 * np.ones((2, 2)))))
    assert run("check", "bad.json") == 1


def test_json_and_text_reports_agree(work, capsys):
    run("generate", "petersen", "-o", "p.json")
    capsys.readouterr()
    run("check", "p.json", "--json")
    rep = json.loads(capsys.readouterr().out)
    run("check", "p.json")
    text = capsys.readouterr().out
    assert rep["verdict"] == "pass" and rep["input_digest"] in text
    for c in rep["checks"]:
        assert c["name"] in text
        assert set(c) == {"name", "passed", "residual", "tolerance", "elapsed"}
    for k, v in rep["values"].items():
        assert f"{k} = {v}" in text


def test_chromatic_on_groetzsch(work, capsys):
    run("generate", "mycielski-k2", "[2,2]", "-o", "m.json")
    capsys.readouterr()
    assert run("chromatic", "m.json") == 0
    assert capsys.readouterr().out.splitlines()[0] == "4"


def test_mycielski_then_hom(work, capsys):
    run("generate", "kn", "2", "-o", "k2.txt", "--format", "edges")
    assert run("mycielski", "k2.txt", "-r", "2", "-o", "mu.json", "--iota1", "i1.json") == 0
    assert (work / "mu.report.json").exists()
    assert run("hom", "k2.txt", "mu.json", "--isometry", "i1.json") == 0
    # the embedding of K2 into K2 would need a different shape
    assert run("hom", "k2.txt", "k2.txt", "--isometry", "i1.json") == 2


def test_hom_rejects_non_edge_map(work):
    run("generate", "cn", "5", "-o", "c5.json")
    run("generate", "kn", "2", "-o", "k2.json")
    # C5 → K2 via the map 0,1,0,1,0 is not a homomorphism
    j = np.zeros((2, 5))
    for v, fv in enumerate([0, 1, 0, 1, 0]):
        j[fv, v] = np.sqrt(2 / 5)
    qio.write_json("j.json", {"format_version": "1", "kind": "isometry", "aux_dims": [1, 1],
                              "matrix": qio.encode_matrix(j)})
    assert run("hom", "c5.json", "k2.json", "--isometry", "j.json") == 1


def test_chromatic_quantum_certificate(work, capsys):
    run("generate", "cn", "5", "-o", "c5.json")
    run("chromatic", "c5.json", "--certificate-out", "cert.json")
    assert run("chromatic", "c5.json", "--verify", "cert.json", "--compare-mycielski", "2") == 0
    out = capsys.readouterr().out
    assert "3 <= 4 <= 4" in out
    run("generate", "complete-quantum", "2", "-o", "kq.json")
    assert run("chromatic", "kq.json") == 1


def test_clique_and_witness(work, capsys):
    run("generate", "petersen", "-o", "p.json")
    capsys.readouterr()
    assert run("clique", "p.json", "--witness-out", "w.json") == 0
    assert capsys.readouterr().out.splitlines()[0] == "2"
    assert run("clique", "p.json", "--witness", "w.json") == 0
    bad = {"format_version": "1", "kind": "clique-witness",
           "vectors": [qio.encode_vector(np.eye(10)[0]), qio.encode_vector(np.eye(10)[2])]}
    qio.write_json("bad.json", bad)
    assert run("clique", "p.json", "--witness", "bad.json") == 1


def test_motzkin_straus(work, capsys):
    run("generate", "cn", "5", "-o", "c5.json")
    capsys.readouterr()
    assert run("motzkin-straus", "c5.json", "--cone", "simplex", "--restarts", "10", "--json") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["values"]["value"] == pytest.approx(0.5)
    run("generate", "complete-quantum", "2", "-o", "kq.json")
    assert run("motzkin-straus", "kq.json", "--cone", "psd", "--restarts", "4") == 0
    assert run("motzkin-straus", "kq.json", "--cone", "simplex") == 1


def test_report_is_deterministic(work, capsys):
    run("generate", "cn", "5", "-o", "c5.json")
    assert run("report", "c5.json", "-o", "r1.json") == 0
    assert run("report", "c5.json", "-o", "r2.json") == 0
    a, b = qio.read_json("r1.json"), qio.read_json("r2.json")
    assert a["input_digest"] == b["input_digest"]
    strip = lambda r: [(c["name"], c["passed"], c["residual"]) for c in r["checks"]]
    assert strip(a) == strip(b)
    assert a["values"]["chi_loc_mycielski"] == {"r1": 4, "r2": 4, "r3": 4}


def test_malformed_inputs(work):
    (work / "bad.json").write_text("{oops")
    assert run("check", "bad.json") == 2
    assert run("check", "missing.json") == 2
    assert run("generate", "nope", "-o", "x.json") == 2
    assert run("frobnicate") == 2
    (work / "loop.txt").write_text("2\n1 1\n")
    assert run("check", "loop.txt") == 2
    (work / "ns.json").write_text(json.dumps({
        "format_version": "1", "kind": "quantum-graph", "blocks": [1, 1],
        "state_weights": [[0.3], [0.3]], "adjacency": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}))
    assert run("check", "ns.json") == 2


def test_formula_mismatch_exit_code(work, monkeypatch):
    import qmycielski.mycielski as m

    run("generate", "cn", "5", "-o", "c5.json")
    real = m.componentwise_adjacency
    monkeypatch.setattr(m, "componentwise_adjacency", lambda g, r: 1.01 * real(g, r))
    assert run("mycielski", "c5.json", "-r", "2", "-o", "mu.json") == 3


def test_console_script(work):
    out = subprocess.run([sys.executable, "-m", "qmycielski.cli", "generate", "cn", "5", "-o", "c5.json"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    out = subprocess.run([sys.executable, "-m", "qmycielski.cli", "check", "c5.json"], capture_output=True, text=True)
    assert out.returncode == 0 and "verdict: pass" in out.stdout
