import json

import numpy as np
import pytest

from qmycielski import chi_loc_exact, generate, mycielskian, omega_exact_classical
from qmycielski import io as qio
from qmycielski.clique import HomomorphismWitness
from qmycielski.errors import AxiomViolation, MalformedInput, NotAState

from conftest import BASES


@pytest.mark.parametrize("name", sorted(BASES))
def test_graph_round_trip(name, tmp_path):
    g = mycielskian(BASES[name](), 2).graph
    p = tmp_path / "g.json"
    qio.write_graph(p, g)
    back = qio.read_graph(p)
    assert np.array_equal(back.adjacency, g.adjacency)
    assert back.space.blocks == g.space.blocks
    for a, b in zip(back.space.state_weights, g.space.state_weights):
        assert np.array_equal(a, b)
    first = p.read_bytes()
    qio.write_graph(p, back)
    assert p.read_bytes() == first


def test_odd_floats_survive(tmp_path):
    a = np.array([[0.1 + 1e-17j, np.pi], [np.pi, 1 / 3]])
    d = json.loads(qio.dumps({"m": qio.encode_matrix(a)}))
    assert np.array_equal(qio.decode_matrix(d["m"]), a)


def test_edge_list(tmp_path):
    p = tmp_path / "c5.txt"
    qio.write_edge_list(p, 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert p.read_text().splitlines()[:2] == ["5", "1 2"]
    g = qio.read_graph(p)
    assert np.array_equal(g.adjacency, generate("cn", 5).adjacency)
    n, edges = qio.read_edge_list("3 # triangle\n1 2\n2 3\n\n1 3\n")
    assert n == 3 and edges == [(0, 1), (1, 2), (0, 2)]


def test_certificate_and_witness_round_trip(tmp_path):
    g = generate("groetzsch")
    cert = chi_loc_exact(g).certificate
    d = qio.certificate_to_dict(cert)
    back = qio.certificate_from_dict(json.loads(qio.dumps(d)))
    assert back.colors == cert.colors
    assert all(np.array_equal(a, b) for a, b in zip(back.projections, cert.projections))
    w = omega_exact_classical(g).witness
    wb = qio.witness_from_dict(json.loads(qio.dumps(qio.witness_to_dict(w))))
    assert np.array_equal(wb.vectors, w.vectors)


def test_isometry_round_trip():
    res = mycielskian(generate("cn", 5), 2)
    w = HomomorphismWitness(res.embeddings[1], (1, 1), np.eye(1))
    back = qio.isometry_from_dict(json.loads(qio.dumps(qio.isometry_to_dict(w))))
    assert np.array_equal(back.isometry, w.isometry)
    assert np.array_equal(back.lam, w.lam)
    m = qio.matrix_to_dict(np.eye(2))
    assert m["kind"] == "matrix"


def test_digest_stable(tmp_path):
    g = generate("petersen")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    qio.write_graph(a, g)
    qio.write_graph(b, generate("petersen"))
    assert qio.digest(a) == qio.digest(b)


@pytest.mark.parametrize("payload, exc", [
    ({"format_version": "2", "kind": "quantum-graph"}, MalformedInput),
    ({"format_version": "1", "kind": "clique-witness"}, MalformedInput),
    ({"format_version": "1", "kind": "quantum-graph", "blocks": [1]}, MalformedInput),
    ({"format_version": "1", "kind": "quantum-graph", "blocks": [1, 1], "state_weights": [[0.5], [0.6]],
      "adjacency": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}, NotAState),
    ({"format_version": "1", "kind": "quantum-graph", "blocks": [1, 1], "state_weights": [[0.5], [0.5]],
      "adjacency": [[[0, 0], [2, 0]], [[2, 0], [0, 0]]]}, AxiomViolation),
    ({"format_version": "1", "kind": "quantum-graph", "blocks": [1], "state_weights": [[1]],
      "adjacency": [["a"]]}, MalformedInput),
])
def test_malformed(payload, exc):
    with pytest.raises(exc):
        qio.graph_from_dict(payload)


def test_unchecked_load():
    payload = {"format_version": "1", "kind": "quantum-graph", "blocks": [1, 1],
               "state_weights": [[0.5], [0.5]], "adjacency": [[[0, 0], [2, 0]], [[2, 0], [0, 0]]]}
    g = qio.graph_from_dict(payload, unchecked=True)
    assert g.adjacency[0, 1] == 2


def test_bad_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{nope")
    with pytest.raises(MalformedInput):
        qio.read_graph(p)
    p.write_text("3\n1 x\n")
    with pytest.raises(MalformedInput):
        qio.read_graph(p)
