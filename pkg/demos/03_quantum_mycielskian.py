"""The Mycielskian of a genuinely quantum graph, checked two independent ways."""

import numpy as np

from qmycielski import build_space, check_axioms, complete_quantum_graph, mycielskian, operator_space
from qmycielski.mycielski import componentwise_adjacency, embedding_adjacency, embedding_residuals
from qmycielski.qspace import rel_residual

base = complete_quantum_graph(build_space([2]), name="K_Mat2")
print(base, "dim S =", operator_space(base).dim)

for r in (1, 2, 3):
    res = mycielskian(base, r)
    mu = res.graph
    print(f"\nr={r}: blocks {list(mu.space.blocks)}  delta^2 = {mu.delta_squared:g} (1 + r*4 = {1 + 4 * r})")
    # the adjacency is assembled block by block and again from the embeddings
    a = componentwise_adjacency(base, r)
    b = embedding_adjacency(base, r, res.embeddings, mu.gns.gram)
    print("  componentwise vs embedding form:", f"{rel_residual(a, b):.1e}")
    iso, total = embedding_residuals(res)
    print(f"  iota_k* iota_l = delta_kl: {iso:.1e}   sum iota iota* = 1: {total:.1e}")
    rep = check_axioms(mu)
    print("  axioms:", "pass" if rep.passed else "FAIL", "/", rep.reflexivity.kind, "/ dim S =", operator_space(mu).dim)

# The state on the new space puts weight 1/(1 + r delta^2) on the apex
mu = mycielskian(base, 2).graph
print("\nstate weights:", [np.round(w, 4).tolist() for w in mu.space.state_weights])

# Reflexive inputs: the loops survive only on the first copy.
loops = build_space([1, 1], [[0.5], [0.5]])
from qmycielski import make_graph

g = make_graph(loops, np.ones((2, 2)), name="K2 with loops")
print("\n", g.name, "->", check_axioms(g).reflexivity.kind)
m = mycielskian(g, 2).graph
print(" after one step:", check_axioms(m).reflexivity.kind, " diagonal:", np.real(np.diag(m.adjacency)))
