"""Clique witnesses, homomorphism isometries, and the Motzkin-Straus program."""

import numpy as np

from qmycielski import (
    CliqueWitness,
    HomomorphismWitness,
    build_space,
    classical_homomorphism_witness,
    classical_to_quantum,
    complete_quantum_graph,
    compose_homomorphisms,
    motzkin_straus,
    mycielskian,
    omega_exact_classical,
    verify_clique_witness,
    verify_homomorphism,
)

c5 = classical_to_quantum([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], 5, name="C5")
e = np.eye(5)
print("{0,1} is a clique of C5:", verify_clique_witness(c5, CliqueWitness(e[[0, 1]])).valid)
print("{0,2} is a clique of C5:", verify_clique_witness(c5, CliqueWitness(e[[0, 2]])).valid)
print("omega(C5) =", omega_exact_classical(c5).omega)

# The first copy embeds G in its Mycielskian; the isometry is a homomorphism.
res = mycielskian(c5, 2)
iota1 = HomomorphismWitness(res.embeddings[1])
print("\niota_1: C5 -> mu(C5):", verify_homomorphism(c5, res.graph, iota1).valid)
print("omega(mu(C5)) =", omega_exact_classical(res.graph).omega)

# Homomorphisms compose: K2 -> C5 -> mu(C5)
k2 = classical_to_quantum([(0, 1)], 2)
edge = classical_homomorphism_witness([0, 1], 2, 5)
print("K2 -> mu(C5) by composition:", verify_homomorphism(k2, res.graph, compose_homomorphisms(edge, iota1)).valid)

# The same works for quantum graphs
kq = complete_quantum_graph(build_space([2]), name="K_Mat2")
resq = mycielskian(kq, 3)
print("iota_1: K_Mat2 -> mu_2(K_Mat2):", verify_homomorphism(kq, resq.graph, HomomorphismWitness(resq.embeddings[1])).valid)

# Motzkin-Straus: max v^T A v on the simplex equals 1 - 1/omega
print("\n graph        value   omega_MS  certified")
for name, g in [("C5", c5), ("mu(C5)", res.graph), ("K6", classical_to_quantum([(i, j) for i in range(6) for j in range(i + 1, 6)], 6))]:
    ms = motzkin_straus(g)
    print(f" {name:<10} {ms.value:7.4f}  {ms.omega_ms:8.4f}  {ms.certified}")

# Over positive elements with psi(v) = 1 the program also makes sense on Mat_2;
# the best value found for K_Mat2 is 3/4, i.e. omega_S = 4 = delta^2.
ms = motzkin_straus(kq, cone="psd", restarts=10)
print(f"\nK_Mat2 (psd cone): value {ms.value:.6f}, omega_S {ms.omega_ms:.4f} (best found, not certified)")
