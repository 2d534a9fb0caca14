"""File formats (version "1").

All complex scalars are written as ``[re, im]`` pairs of JSON numbers using
Python's shortest round-trip float repr, so reading a file back gives
bit-identical arrays and rewriting it gives a byte-identical file.

Graph files::

    {"format_version": "1", "kind": "quantum-graph",
     "blocks": [...], "state_weights": [[...], ...],
     "adjacency": [[[re, im], ...], ...], "metadata": {...}}

Classical graphs may also be given as edge-list text: the vertex count on
the first line, then one ``u v`` pair (1-indexed) per line.
"""

import hashlib
import json
from pathlib import Path

import numpy as np

from . import config
from .chromatic import ColoringCertificate
from .clique import CliqueWitness, HomomorphismWitness
from .errors import AxiomViolation, MalformedInput
from .qgraph import check_axioms, classical_to_quantum, make_graph, quantum_to_classical
from .qspace import build_space

FORMAT_VERSION = "1"

__all__ = [
    "FORMAT_VERSION",
    "dumps",
    "encode_matrix",
    "decode_matrix",
    "graph_to_dict",
    "graph_from_dict",
    "write_graph",
    "read_graph",
    "write_edge_list",
    "read_edge_list",
    "certificate_to_dict",
    "certificate_from_dict",
    "witness_to_dict",
    "witness_from_dict",
    "isometry_to_dict",
    "isometry_from_dict",
    "matrix_from_file",
    "matrix_to_dict",
    "read_json",
    "write_json",
    "digest",
]


def encode_matrix(a):
    a = np.asarray(a, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.atleast_2d(a)]


def encode_vector(v):
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex).reshape(-1)]


def decode_matrix(data):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"not a numeric [re, im] array: {exc}") from exc
    if arr.ndim < 1 or arr.shape[-1] != 2:
        raise MalformedInput("complex entries must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def _is_scalar(x):
    return isinstance(x, (int, float, str, bool)) or x is None


def _flat(x):
    return isinstance(x, list) and all(_is_scalar(e) or (isinstance(e, list) and all(_is_scalar(t) for t in e)) for e in x)


def dumps(obj, indent=0):
    """Deterministic JSON: one key per line, numeric rows on a single line."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if _flat(obj):
            return json.dumps(obj, separators=(", ", ": "), allow_nan=False)
        items = [inner + dumps(v, indent + 2) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, allow_nan=False)


def write_json(path, obj):
    Path(path).write_text(dumps(obj) + "\n")


def read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from exc


def digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _expect(data, kind):
    if not isinstance(data, dict):
        raise MalformedInput("top-level JSON value must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise MalformedInput(f"unsupported format_version {data.get('format_version')!r}")
    if data.get("kind") != kind:
        raise MalformedInput(f"expected kind {kind!r}, found {data.get('kind')!r}")


def graph_to_dict(g):
    meta = {"name": g.name} if g.name else {}
    meta.update({k: v for k, v in g.metadata.items() if _is_scalar(v)})
    return {
        "format_version": FORMAT_VERSION,
        "kind": "quantum-graph",
        "blocks": list(g.space.blocks),
        "state_weights": [[float(x) for x in q] for q in g.space.state_weights],
        "adjacency": encode_matrix(g.adjacency),
        "metadata": meta,
    }


def graph_from_dict(data, unchecked=False, tol=None):
    _expect(data, "quantum-graph")
    try:
        blocks = [int(b) for b in data["blocks"]]
        weights = [[float(x) for x in q] for q in data["state_weights"]]
        adjacency = decode_matrix(data["adjacency"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"graph file is missing or has a malformed field: {exc}") from exc
    space = build_space(blocks, weights, tol)
    meta = dict(data.get("metadata") or {})
    g = make_graph(space, adjacency, meta.pop("name", ""), meta)
    if not unchecked:
        report = check_axioms(g, tol)
        if not report.passed:
            raise AxiomViolation(f"graph fails the axioms: {report}")
    return g


def write_graph(path, g):
    write_json(path, graph_to_dict(g))


def read_edge_list(text):
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u) - 1, int(v) - 1))
    except (IndexError, ValueError) as exc:
        raise MalformedInput(f"malformed edge list: {exc}") from exc
    return n, edges


def write_edge_list(path, n, edges):
    body = "".join(f"{u + 1} {v + 1}\n" for u, v in edges)
    Path(path).write_text(f"{n}\n{body}")


def read_graph(path, unchecked=False, tol=None):
    """Read a JSON graph file or an edge-list text file."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"{path}: invalid JSON ({exc})") from exc
        return graph_from_dict(data, unchecked, tol)
    n, edges = read_edge_list(text)
    return classical_to_quantum(edges, n, name=Path(path).stem)


def certificate_to_dict(cert):
    return {
        "format_version": FORMAT_VERSION,
        "kind": "coloring-certificate",
        "colors": cert.colors,
        "aux_dim": cert.aux_dim,
        "projections": [encode_matrix(p) for p in cert.projections],
    }


def certificate_from_dict(data):
    _expect(data, "coloring-certificate")
    try:
        projs = tuple(decode_matrix(p) for p in data["projections"])
        return ColoringCertificate(int(data["colors"]), int(data["aux_dim"]), projs)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"malformed certificate: {exc}") from exc


def witness_to_dict(w):
    return {
        "format_version": FORMAT_VERSION,
        "kind": "clique-witness",
        "vectors": [encode_vector(v) for v in w.vectors],
    }


def witness_from_dict(data):
    _expect(data, "clique-witness")
    try:
        vecs = decode_matrix(data["vectors"])
    except KeyError as exc:
        raise MalformedInput("witness has no 'vectors'") from exc
    return CliqueWitness(np.atleast_2d(vecs))


def isometry_to_dict(w):
    out = {
        "format_version": FORMAT_VERSION,
        "kind": "isometry",
        "aux_dims": [int(x) for x in w.aux_dims],
        "matrix": encode_matrix(w.isometry),
    }
    if w.lam is not None:
        out["lambda"] = encode_matrix(w.lam)
    return out


def isometry_from_dict(data, lam=None):
    _expect(data, "isometry")
    try:
        j = decode_matrix(data["matrix"])
        dims = tuple(int(x) for x in data.get("aux_dims", (1, 1)))
        if lam is None and "lambda" in data:
            lam = decode_matrix(data["lambda"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"malformed isometry: {exc}") from exc
    return HomomorphismWitness(j, dims, lam)


def matrix_from_file(path):
    """A bare matrix file: ``{"format_version": "1", "kind": "matrix", "matrix": ...}``."""
    data = read_json(path)
    _expect(data, "matrix")
    return decode_matrix(data["matrix"])


def matrix_to_dict(a):
    return {"format_version": FORMAT_VERSION, "kind": "matrix", "matrix": encode_matrix(a)}


def edge_list_of(g, tol=None):
    return quantum_to_classical(g, config.resolve(tol))
