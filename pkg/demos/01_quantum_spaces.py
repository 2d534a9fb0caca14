"""Finite quantum spaces, their GNS spaces, and the three quantum graph axioms."""

import numpy as np

from qmycielski import build_space, check_axioms, classical_to_quantum, complete_quantum_graph, operator_space

# Five classical points with the uniform state. δ² is the number of points.
pts = build_space([1] * 5, [[0.2]] * 5)
print("5 points: dim", pts.dim, "delta^2", pts.delta_squared)

# One 2x2 matrix block with the normalized trace. The GNS basis is the four
# matrix units e11, e12, e21, e22, and every one of them has norm^2 = 1/2.
mat2 = build_space([2], [[0.5, 0.5]])
print("Mat_2: delta^2", mat2.delta_squared)
print("gram diagonal", mat2.gns.gram_diag)

# A direct sum needs the same Tr(Q^-1) on every block; the tracial weights
# n_b / sum n^2 always satisfy this.
mixed = build_space([1, 2])
print("C + Mat_2: weights", [w.tolist() for w in mixed.state_weights], "delta^2", mixed.delta_squared)

# Multiplication really is the matrix product inside each block
x = np.arange(1, 6, dtype=complex)
y = np.arange(5, 0, -1, dtype=complex)
xy = mixed.gns.mult @ np.kron(x, y)
print("block product ok:", np.allclose(xy[1:].reshape(2, 2), x[1:].reshape(2, 2) @ y[1:].reshape(2, 2)))

# The pentagon as a quantum graph
c5 = classical_to_quantum([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], 5, name="C5")
rep = check_axioms(c5)
for name, res in rep.items():
    print(f"  {name:<18} residual {res.residual:.1e}  {'ok' if res.passed else 'FAIL'}")
print("  reflexivity:", rep.reflexivity.kind)

# For a classical graph the operator space is spanned by the matrix units of
# the (directed) edges, so it has dimension 2|E|.
print("dim S_C5 =", operator_space(c5).dim)

# The complete quantum graph on Mat_2: A x = delta^2 psi(x) 1 - x
k = complete_quantum_graph(mat2, name="K_Mat2")
print("K_Mat2 adjacency:\n", np.real_if_close(k.adjacency))
print("K_Mat2 axioms pass:", check_axioms(k).passed, " dim S =", operator_space(k).dim)
