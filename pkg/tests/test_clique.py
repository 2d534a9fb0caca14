import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmycielski import (
    CliqueWitness,
    HomomorphismWitness,
    build_space,
    classical_homomorphism_witness,
    classical_to_quantum,
    compose_homomorphisms,
    make_graph,
    motzkin_straus,
    mycielskian,
    omega_exact_classical,
    omega_q_lower_bound_verify,
    verify_clique_witness,
    verify_homomorphism,
)
from qmycielski.errors import (
    DimensionMismatch,
    LambdaNotPSD,
    NotClassical,
    NotIsometry,
    ValueAtLeastOne,
    ZeroVector,
)
from qmycielski.generators import complete_edges, cycle_edges, groetzsch_edges, petersen_edges

from conftest import BASES, brute_clique, c5, k2, k_mat2, random_edges


def basis_vectors(n, verts):
    out = np.zeros((len(verts), n), dtype=complex)
    for k, v in enumerate(verts):
        out[k, v] = 1
    return CliqueWitness(out)


def test_witness_examples():
    g = classical_to_quantum([(0, 1), (1, 2), (0, 2), (2, 3)], 4)
    assert verify_clique_witness(g, basis_vectors(4, [3])).valid
    assert verify_clique_witness(g, basis_vectors(4, [0, 1, 2])).valid
    assert not verify_clique_witness(c5(), basis_vectors(5, [0, 2])).valid
    with pytest.raises(ZeroVector):
        verify_clique_witness(c5(), CliqueWitness(np.zeros((2, 5))))
    with pytest.raises(DimensionMismatch):
        verify_clique_witness(c5(), CliqueWitness(np.ones((2, 4))))


@pytest.mark.parametrize("n, seed", [(5, 0), (6, 1), (7, 2), (8, 3)])
def test_witness_accepts_exactly_cliques(n, seed):
    edges = random_edges(np.random.default_rng(seed), n, 0.6)
    es = {frozenset(e) for e in edges}
    g = classical_to_quantum(edges, n)
    for size in (2, 3, 4):
        for verts in itertools.combinations(range(n), size):
            is_clique = all(frozenset(p) in es for p in itertools.combinations(verts, 2))
            assert verify_clique_witness(g, basis_vectors(n, verts)).valid == is_clique


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31 - 1), st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3))
def test_witness_scaling_invariance(seed, z):
    g = classical_to_quantum(petersen_edges(), 10)
    rng = np.random.default_rng(seed)
    verts = sorted(rng.choice(10, 2, replace=False).tolist())
    w = basis_vectors(10, verts)
    scaled = CliqueWitness(w.vectors * np.array([[z], [1]]))
    assert verify_clique_witness(g, w).valid == verify_clique_witness(g, scaled).valid


@pytest.mark.parametrize("n, edges, omega", [
    (5, complete_edges(5), 5),
    (*groetzsch_edges(), 2),
    (5, cycle_edges(5), 2),
    (10, petersen_edges(), 2),
    (1, [], 1),
])
def test_exact_omega(n, edges, omega):
    res = omega_exact_classical(classical_to_quantum(edges, n))
    assert res.omega == omega == brute_clique(n, edges)
    assert verify_clique_witness(classical_to_quantum(edges, n), res.witness).valid


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 2**31 - 1), st.floats(0.2, 0.9))
def test_exact_omega_against_brute_force(n, seed, p):
    edges = random_edges(np.random.default_rng(seed), n, p)
    assert omega_exact_classical(classical_to_quantum(edges, n)).omega == brute_clique(n, edges)


@pytest.mark.parametrize("edges, n", [([(0, 1)], 2), (complete_edges(3), 3), (cycle_edges(5), 5), (petersen_edges(), 10)])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_omega_preserved(edges, n, r):
    g = classical_to_quantum(edges, n)
    mu = mycielskian(g, r).graph
    want = omega_exact_classical(g).omega
    if r == 1:
        # a single copy makes a cone, and the apex joins every clique
        want += 1
    assert omega_exact_classical(mu).omega == want


def test_exact_requires_classical():
    with pytest.raises(NotClassical):
        omega_exact_classical(k_mat2())


@pytest.mark.parametrize("name", sorted(BASES))
@pytest.mark.parametrize("r", [1, 2, 3])
def test_iota1_is_a_homomorphism(name, r):
    g = BASES[name]()
    res = mycielskian(g, r)
    out = verify_homomorphism(g, res.graph, HomomorphismWitness(res.embeddings[1]))
    assert out.valid and out.worst_residual < 1e-9


def test_iota1_maps_witnesses():
    g = classical_to_quantum(complete_edges(3) + [(2, 3)], 4)
    w = omega_exact_classical(g).witness
    res = mycielskian(g, 2)
    mapped = CliqueWitness(np.array([res.embeddings[1] @ v for v in w.vectors]))
    assert verify_clique_witness(res.graph, mapped).valid


def test_identity_homomorphism():
    for g in (c5(), k_mat2()):
        assert verify_homomorphism(g, g, HomomorphismWitness(np.eye(g.dim))).valid


def test_non_isometry():
    rng = np.random.default_rng(0)
    with pytest.raises(NotIsometry):
        verify_homomorphism(c5(), c5(), HomomorphismWitness(rng.standard_normal((5, 5))))
    with pytest.raises(DimensionMismatch):
        verify_homomorphism(c5(), c5(), HomomorphismWitness(np.eye(4)))


def test_lambda():
    g = k2()
    w = classical_homomorphism_witness([0, 1], 2, 2)
    j = np.kron(w.isometry, np.eye(2))
    ok = HomomorphismWitness(j, (2, 2), np.diag([1.0, 0.5]))
    assert verify_homomorphism(g, g, ok).valid
    with pytest.raises(LambdaNotPSD):
        verify_homomorphism(g, g, HomomorphismWitness(j, (2, 2), np.diag([1.0, -1.0])))


def test_classical_maps():
    # K2 → C5 as an edge, C5 → K3 by a proper colouring, C5 → K2 is impossible
    assert verify_homomorphism(k2(), c5(), classical_homomorphism_witness([0, 1], 2, 5)).valid
    k3 = classical_to_quantum(complete_edges(3), 3)
    col = [0, 1, 0, 1, 2]
    assert verify_homomorphism(c5(), k3, classical_homomorphism_witness(col, 5, 3)).valid
    for col in itertools.product(range(2), repeat=5):
        assert not verify_homomorphism(c5(), k2(), classical_homomorphism_witness(col, 5, 2)).valid


def test_composition_chain():
    a = classical_homomorphism_witness([0, 1], 2, 5)
    res = mycielskian(c5(), 2)
    b = HomomorphismWitness(res.embeddings[1])
    assert verify_homomorphism(k2(), c5(), a).valid
    assert verify_homomorphism(c5(), res.graph, b).valid
    assert verify_homomorphism(k2(), res.graph, compose_homomorphisms(a, b)).valid
    # non-injective first leg keeps an auxiliary factor
    k3 = classical_to_quantum(complete_edges(3), 3)
    c = classical_homomorphism_witness([0, 1, 0, 1, 2], 5, 3)
    d = classical_homomorphism_witness([0, 1, 2], 3, 3)
    comp = compose_homomorphisms(c, d)
    assert comp.aux_dims == (1, 5)
    assert verify_homomorphism(c5(), k3, comp).valid


def test_omega_q_lower_bounds():
    pts2 = build_space([1, 1], [[0.5], [0.5]])
    valid, size = omega_q_lower_bound_verify(k2(), pts2, HomomorphismWitness(np.eye(2)))
    assert valid and size == 2
    pts3 = build_space([1] * 3, [[1 / 3]] * 3)
    tri = classical_to_quantum(complete_edges(3) + [(2, 3)], 4)
    valid, size = omega_q_lower_bound_verify(tri, pts3, classical_homomorphism_witness([0, 1, 2], 3, 4))
    assert valid and size == 3
    # no injective vertex map K3 → C5 is a homomorphism
    for m in itertools.permutations(range(5), 3):
        valid, _ = omega_q_lower_bound_verify(c5(), pts3, classical_homomorphism_witness(list(m), 3, 5))
        assert not valid


def grid_max(a, steps=24):
    n = a.shape[0]
    best = 0.0
    for c in itertools.product(range(steps + 1), repeat=n - 1):
        if sum(c) <= steps:
            v = np.array(list(c) + [steps - sum(c)]) / steps
            best = max(best, v @ a @ v)
    return best


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ms_complete_vs_grid(n):
    g = classical_to_quantum(complete_edges(n), n)
    res = motzkin_straus(g)
    assert res.value == pytest.approx(1 - 1 / n, abs=1e-9)
    assert res.value == pytest.approx(grid_max(g.adjacency.real), abs=1e-9)
    assert res.certified
    assert np.allclose(res.argmax, 1 / n)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_ms_complete(n):
    res = motzkin_straus(classical_to_quantum(complete_edges(n), n))
    assert res.value == pytest.approx(1 - 1 / n, abs=1e-9)
    assert res.omega_ms == pytest.approx(n)


def test_ms_empty_and_c5():
    res = motzkin_straus(classical_to_quantum([], 4))
    assert res.value == 0 and res.omega_ms == 1
    res = motzkin_straus(c5())
    assert res.value == pytest.approx(0.5, abs=1e-9) and res.certified


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**31 - 1), st.floats(0.2, 0.8))
def test_ms_random_classical(n, seed, p):
    g = classical_to_quantum(random_edges(np.random.default_rng(seed), n, p), n)
    res = motzkin_straus(g)
    assert res.certified
    assert abs(res.value - (1 - 1 / res.exact_omega)) < 1e-6


def test_ms_deterministic_in_seed():
    g = classical_to_quantum(petersen_edges(), 10)
    a = motzkin_straus(g, seed=7)
    b = motzkin_straus(g, seed=7)
    assert a.value == b.value and np.array_equal(a.argmax, b.argmax)


def test_ms_psd_cone():
    res = motzkin_straus(c5(), cone="psd", restarts=10)
    assert res.value == pytest.approx(0.5, abs=1e-6)
    assert res.certified is None
    res = motzkin_straus(k_mat2(), cone="psd", restarts=10)
    assert res.value == pytest.approx(0.75, abs=1e-6)
    assert res.omega_ms == pytest.approx(4, abs=1e-4)


def test_ms_simplex_on_matrix_block_is_rejected():
    # canonical coordinates on Mat_2 do not form a cone on which the program is bounded by 1
    with pytest.raises(ValueAtLeastOne):
        motzkin_straus(k_mat2(), cone="simplex", restarts=5)


def test_ms_reflexive_rejected():
    s = build_space([1, 1], [[0.5], [0.5]])
    with pytest.raises(ValueAtLeastOne):
        motzkin_straus(make_graph(s, np.ones((2, 2))))


def test_ms_unknown_cone():
    with pytest.raises(ValueError):
        motzkin_straus(c5(), cone="ball")
