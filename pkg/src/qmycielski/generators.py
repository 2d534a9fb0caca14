"""Named test graphs, including the classical generalized Mycielskian."""

import itertools

import numpy as np

from .errors import UnknownGenerator
from .qgraph import classical_to_quantum, complete_quantum_graph
from .qspace import build_space, tracial_weights

__all__ = [
    "complete_edges",
    "cycle_edges",
    "path_edges",
    "petersen_edges",
    "delete_vertex",
    "classical_mycielskian",
    "groetzsch_edges",
    "g13_vectors",
    "g13_edges",
    "g14_edges",
    "generate",
    "GENERATORS",
]


def complete_edges(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def cycle_edges(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return [tuple(sorted((i, (i + 1) % n))) for i in range(n)]


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return sorted(tuple(sorted(e)) for e in outer + spokes + inner)


def delete_vertex(n, edges, v):
    keep = [u for u in range(n) if u != v]
    relabel = {u: k for k, u in enumerate(keep)}
    return n - 1, [(relabel[a], relabel[b]) for a, b in edges if v not in (a, b)]


def classical_mycielskian(n, edges, r):
    """Generalized Mycielskian with ``r`` copies of the vertex set.

    Vertex order: apex ``0``, then copy ``k`` (``k = 0..r−1``) at
    ``1 + k n .. (k+1) n − 1``.  Copy 0 keeps the original edges, copy ``k``
    is joined to copy ``k + 1`` along the edges, and the last copy is joined
    to the apex.
    """
    if r < 1:
        raise ValueError("r must be ≥ 1")

    def vid(k, v):
        return 1 + k * n + v

    out = set()
    for u, v in edges:
        out.add((vid(0, u), vid(0, v)))
        for k in range(r - 1):
            out.add((vid(k, u), vid(k + 1, v)))
            out.add((vid(k, v), vid(k + 1, u)))
    for v in range(n):
        out.add((0, vid(r - 1, v)))
    return 1 + r * n, sorted(tuple(sorted(e)) for e in out)


def groetzsch_edges():
    return classical_mycielskian(5, cycle_edges(5), 2)


def g13_vectors():
    """Representatives (up to sign) of face centres, edge midpoints and corners of a cube."""
    faces = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    edges = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)]
    corners = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)]
    return np.array(faces + edges + corners)


def g13_edges():
    vecs = g13_vectors()
    return [(i, j) for i, j in itertools.combinations(range(len(vecs)), 2) if vecs[i] @ vecs[j] == 0]


def g14_edges():
    return g13_edges() + [(v, 13) for v in range(13)]


def _mycielski_k2(*rs):
    from .mycielski import iterated_mycielskian

    g = iterated_mycielskian(classical_to_quantum([(0, 1)], 2, name="K2"), [int(r) for r in rs])
    return g


def generate(name, *params):
    """Build a named graph.  ``params`` are the generator's integer arguments."""
    p = [int(x) for tok in params for x in str(tok).strip("[]() ").replace(",", " ").split()]
    if name in ("kn", "complete-classical"):
        (n,) = p
        g = classical_to_quantum(complete_edges(n), n, name=f"K{n}")
        if name == "complete-classical":
            g = complete_quantum_graph(g.space, name=f"K{n}")
        return g
    if name == "cn":
        (n,) = p
        return classical_to_quantum(cycle_edges(n), n, name=f"C{n}")
    if name == "pn":
        (n,) = p
        return classical_to_quantum(path_edges(n), n, name=f"P{n}")
    if name == "petersen":
        return classical_to_quantum(petersen_edges(), 10, name="petersen")
    if name == "groetzsch":
        n, e = groetzsch_edges()
        return classical_to_quantum(e, n, name="groetzsch")
    if name == "g13":
        return classical_to_quantum(g13_edges(), 13, name="G13")
    if name == "g14":
        return classical_to_quantum(g14_edges(), 14, name="G14")
    if name == "complete-quantum":
        blocks = p or [2]
        space = build_space(blocks, tracial_weights(blocks))
        return complete_quantum_graph(space, name=f"K_{'+'.join(f'Mat{b}' for b in blocks)}")
    if name == "mycielski-k2":
        g = _mycielski_k2(*p)
        return g
    raise UnknownGenerator(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")


GENERATORS = (
    "kn", "cn", "pn", "petersen", "groetzsch", "g13", "g14",
    "complete-classical", "complete-quantum", "mycielski-k2",
)
