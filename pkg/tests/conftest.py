import itertools

import numpy as np
import pytest

from qmycielski import build_space, classical_to_quantum, complete_quantum_graph, tracial_weights
from qmycielski.generators import complete_edges, cycle_edges, path_edges, petersen_edges


# -- brute-force oracles, deliberately naive ------------------------------------

def brute_chromatic(n, edges):
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def brute_k_colorable(n, edges, k):
    return any(all(c[u] != c[v] for u, v in edges) for c in itertools.product(range(k), repeat=n))


def brute_clique(n, edges):
    es = {frozenset(e) for e in edges}
    best = 1 if n else 0
    for size in range(2, n + 1):
        if any(all(frozenset(p) in es for p in itertools.combinations(s, 2))
               for s in itertools.combinations(range(n), size)):
            best = size
        else:
            break
    return best


def dense_mm(g, left, right):
    """m (left ⊗ right) m* from explicit Kronecker products."""
    gns = g.gns
    return gns.mult @ np.kron(left, right) @ gns.comult


def random_edges(rng, n, p=0.5):
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


# -- graphs ---------------------------------------------------------------------

def k2():
    return classical_to_quantum([(0, 1)], 2, name="K2")


def c5():
    return classical_to_quantum(cycle_edges(5), 5, name="C5")


def petersen():
    return classical_to_quantum(petersen_edges(), 10, name="petersen")


def k_mat2():
    return complete_quantum_graph(build_space([2], tracial_weights([2])), name="K_Mat2")


def k_c5():
    return complete_quantum_graph(build_space([1] * 5, [[0.2]] * 5), name="K_C5")


BASES = {"K2": k2, "C5": c5, "petersen": petersen, "K_Mat2": k_mat2, "K_C5": k_c5}


@pytest.fixture(params=sorted(BASES))
def base_graph(request):
    return BASES[request.param]()


def small_family():
    """Paths, cycles and complete graphs up to 9 vertices, plus Petersen minus a vertex."""
    out = []
    for n in range(2, 10):
        out.append((f"P{n}", n, path_edges(n)))
        out.append((f"K{n}", n, complete_edges(n)))
        if n >= 3:
            out.append((f"C{n}", n, cycle_edges(n)))
    keep = [v for v in range(10) if v != 0]
    relabel = {v: k for k, v in enumerate(keep)}
    pm = [(relabel[a], relabel[b]) for a, b in petersen_edges() if 0 not in (a, b)]
    out.append(("petersen-v", 9, pm))
    return out


# -- acceptance summary -----------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
