"""Colouring certificates: verify, lift through the Mycielskian, and reduce back."""

import numpy as np

from qmycielski import (
    amplify,
    certificate_from_classes,
    certificate_from_elements,
    chi_loc_exact,
    classical_to_quantum,
    lift_coloring,
    monotonicity_harness,
    mycielskian,
    reduce_coloring,
    verify_coloring,
)
from qmycielski.errors import CommutativityFailure

c5 = classical_to_quantum([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], 5, name="C5")

# A colouring is a partition of unity by projections that each kill S_G.
good = certificate_from_classes(c5, [0, 1, 0, 1, 2])
bad = certificate_from_classes(c5, [0, 1, 0, 1, 0])
print("3-colouring:", verify_coloring(c5, good).valid)
res = verify_coloring(c5, bad)
print("2-colouring:", res.valid, res.failures)

# Lift: the apex gets a new colour and every old colour is spread over all copies
res = mycielskian(c5, 2)
lifted = lift_coloring(c5, 2, good, mu=res)
print("\nlifted to", res.graph.name, "with", lifted.colors, "colours:", verify_coloring(res.graph, lifted).valid)
print("exact chi of the Grötzsch graph:", chi_loc_exact(res.graph).chi)

# Projections may carry an auxiliary matrix factor; tensoring with 1 keeps validity
print("amplified (d=3):", verify_coloring(c5, amplify(good, 3)).valid)

# Reduce: from a colouring of mu(G), drop the apex colour
red = reduce_coloring(res, chi_loc_exact(res.graph).certificate)
print("\nreduced to", red.certificate.colors, "colours; apex colour was", red.apex_color,
      f"; P02 residual {red.p02_residual:.1e}")
print("reduced certificate valid on C5:", verify_coloring(c5, red.certificate).valid)

# Bounds table
print("\n r  chi(G)  chi(mu)  tight")
for row in monotonicity_harness(c5, [1, 2, 3]):
    print(f" {row.r}  {row.chi_g:6d}  {row.chi_mu:7d}  {row.tight}")

# The reduction needs P01 to commute with the other colours on the last copy.
# On mu(K_Mat2) two non-commuting projections break that.
from qmycielski import build_space, complete_quantum_graph

kq = mycielskian(complete_quantum_graph(build_space([2])), 2)
p = np.array([[1, 0], [0, 0]])
q = np.array([[1, 1], [1, 1]]) / 2
zero, one = np.zeros((2, 2)), np.eye(2)


def elem(apex, x1, x2):
    return np.concatenate([[apex], x1.reshape(-1), x2.reshape(-1)])


cert = certificate_from_elements(kq.graph, [elem(1, p, zero), elem(0, one - p, q), elem(0, zero, one - q)])
try:
    reduce_coloring(kq, cert)
except CommutativityFailure as exc:
    print("\nnon-commuting certificate:", exc)
