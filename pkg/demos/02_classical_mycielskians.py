"""The Mycielski transformation on classical graphs: pentagon, Grötzsch, and cones."""

import numpy as np

from qmycielski import chi_loc_exact, classical_to_quantum, iterated_mycielskian, mycielskian, omega_exact_classical
from qmycielski import quantum_to_classical

k2 = classical_to_quantum([(0, 1)], 2, name="K2")

# Two copies of K2 plus an apex: the 5-cycle. Vertex 0 is the apex, 1-2 the
# original copy, 3-4 the copy attached to the apex.
mu = mycielskian(k2, 2).graph
print(mu.name, "edges:", quantum_to_classical(mu))
print("degrees:", np.real(mu.adjacency).sum(axis=0).astype(int))

# Doing it twice gives the Grötzsch graph: triangle-free with chromatic number 4.
g = iterated_mycielskian(k2, [2, 2])
print(g.name, "vertices", g.dim, "edges", len(quantum_to_classical(g)))
print("chi =", chi_loc_exact(g).chi, " omega =", omega_exact_classical(g).omega)

# More copies: each extra copy lengthens the path from the original graph to
# the apex. With r = 3 copies of K2 the result has 7 vertices.
for r in (1, 2, 3, 4):
    m = mycielskian(k2, r).graph
    print(f"r={r}: n={m.dim:2d}  chi={chi_loc_exact(m).chi}  omega={omega_exact_classical(m).omega}")
# r = 1 is just a cone, which adds the apex to every clique: omega goes up too.

# The Stiebitz-style tower: chromatic number climbs by one per step while
# the graphs stay triangle-free.
g = k2
for step in range(3):
    g = mycielskian(g, 2).graph
    print(f"step {step + 1}: n={g.dim:2d}  chi={chi_loc_exact(g).chi}  omega={omega_exact_classical(g).omega}")
