"""Generalized Mycielski transformations of quantum graphs.

``mycielskian(g, r)`` builds the transformation with ``r`` copies of the base
space, written μ_{r−1}(G): the algebra is ``ℂ ⊕ C(G)^{⊕r}`` (apex first, then
the copies in order) with state ``(1 ⊕ δ²ψ ⊕ … ⊕ δ²ψ) / (1 + rδ²)``.

The adjacency operator is assembled block by block from its componentwise
description and then rebuilt from the isometric embeddings ``ι_k``; the two
must agree or :class:`FormulaMismatch` is raised.
"""

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import (
    AxiomViolation,
    CommutativityFailure,
    DimensionMismatch,
    FormulaMismatch,
    InvalidCertificate,
    LemmaViolation,
)
from .qgraph import IRREFLEXIVE, check_axioms, classical_to_quantum, complete_quantum_graph, make_graph
from .qspace import build_space, gns_adjoint, rel_residual, tracial_weights

__all__ = [
    "MycielskiResult",
    "mycielskian",
    "componentwise_adjacency",
    "embedding_adjacency",
    "embedding_residuals",
    "iterated_mycielskian",
    "lift_coloring",
    "ReductionResult",
    "reduce_coloring",
    "stiebitz_family",
]


@dataclass(frozen=True, eq=False)
class MycielskiResult:
    graph: object
    base: object
    r: int
    embeddings: tuple
    """``ι_0, …, ι_r`` as matrices; ``ι_0`` has a one-dimensional domain."""

    @property
    def iota_adjoints(self):
        return tuple(_embedding_adjoint(self, k) for k in range(self.r + 1))

    def copy_slice(self, k):
        """Coordinates of copy ``k`` (1-based) inside the Mycielskian's GNS space."""
        n = self.base.dim
        return slice(1 + (k - 1) * n, 1 + k * n)


def _mycielski_space(g, r):
    d2 = g.delta_squared
    z = 1.0 + r * d2
    weights = [[1.0 / z]] + [np.asarray(q) * (d2 / z) for q in g.space.state_weights] * r
    return build_space((1,) + tuple(g.space.blocks) * r, weights)


def componentwise_adjacency(g, r):
    """Adjacency of μ_{r−1}(g) assembled copy by copy.

    For r ≥ 2 copy 1 sees ``A(x_1 + x_2)``, copy k sees ``A(x_{k−1} + x_{k+1})``,
    the last copy sees ``λ𝟙 + A x_{r−1}`` and the apex sees ``δ² ψ(x_r)``.
    For r = 1 the single copy sees ``λ𝟙 + A x_1`` (a cone over g).
    """
    n = g.dim
    a = g.adjacency
    d2 = g.delta_squared
    gns = g.gns
    out = np.zeros((1 + r * n, 1 + r * n), dtype=complex)

    def sl(k):
        return slice(1 + (k - 1) * n, 1 + k * n)

    out[0, sl(r)] = d2 * gns.co_unit[0]
    out[sl(r), 0] = gns.unit_vec
    if r == 1:
        out[sl(1), sl(1)] += a
        return out
    out[sl(1), sl(1)] += a
    out[sl(1), sl(2)] += a
    for k in range(2, r):
        out[sl(k), sl(k - 1)] += a
        out[sl(k), sl(k + 1)] += a
    out[sl(r), sl(r - 1)] += a
    return out


def _embeddings(g, r):
    n = g.dim
    d2 = g.delta_squared
    z = 1.0 + r * d2
    big = 1 + r * n
    iota0 = np.zeros((big, 1), dtype=complex)
    iota0[0, 0] = np.sqrt(z)
    out = [iota0]
    scale = np.sqrt(z / d2)
    for k in range(1, r + 1):
        e = np.zeros((big, n), dtype=complex)
        e[1 + (k - 1) * n : 1 + k * n, :] = scale * np.eye(n)
        out.append(e)
    for e in out:
        e.setflags(write=False)
    return tuple(out)


def _embedding_adjoint(res, k):
    dom_gram = np.eye(1) if k == 0 else res.base.gns.gram
    return gns_adjoint(res.embeddings[k], dom_gram, res.graph.gns.gram)


def embedding_adjacency(g, r, embeddings, big_gram):
    """The same adjacency rebuilt from ``ι_k`` and the base ``A``, ``η``, ``η*``."""
    delta = np.sqrt(g.delta_squared)
    gns = g.gns
    adj = [gns_adjoint(embeddings[0], np.eye(1), big_gram)]
    adj += [gns_adjoint(e, gns.gram, big_gram) for e in embeddings[1:]]
    eta = gns.unit_vec.reshape(-1, 1)
    eta_star = gns.co_unit
    i = embeddings
    a = g.adjacency
    out = delta * i[r] @ eta @ adj[0] + delta * i[0] @ eta_star @ adj[r]
    out = out + i[1] @ a @ adj[1]
    for k in range(1, r):
        out = out + i[k] @ a @ adj[k + 1] + i[k + 1] @ a @ adj[k]
    return out


def embedding_residuals(res):
    """Worst deviations from ``ι_l* ι_k = δ_kl id`` and ``Σ ι_j ι_j* = id``."""
    adj = res.iota_adjoints
    worst = 0.0
    for l in range(res.r + 1):
        for k in range(res.r + 1):
            prod = adj[l] @ res.embeddings[k]
            target = np.eye(prod.shape[0]) if k == l else np.zeros_like(prod)
            worst = max(worst, rel_residual(prod, target))
    total = sum(e @ a for e, a in zip(res.embeddings, adj))
    return worst, rel_residual(total, np.eye(total.shape[0]))


def mycielskian(g, r, tol=None, check_input=True):
    tol = config.resolve(tol)
    r = int(r)
    if r < 1:
        raise ValueError(f"the number of copies r must be ≥ 1, got {r}")
    in_report = check_axioms(g, tol)
    if check_input and not in_report.passed:
        raise AxiomViolation(f"input is not a quantum graph: {in_report}")
    space = _mycielski_space(g, r)
    a_comp = componentwise_adjacency(g, r)
    emb = _embeddings(g, r)
    a_iota = embedding_adjacency(g, r, emb, space.gns.gram)
    mismatch = rel_residual(a_iota, a_comp)
    if mismatch > tol:
        raise FormulaMismatch(f"componentwise and ι-form adjacency differ by {mismatch:.3e}")
    name = f"mu_{r - 1}({g.name})" if g.name else ""
    graph = make_graph(space, a_comp, name, {"mycielski_r": r, "formula_residual": mismatch})
    out_report = check_axioms(graph, tol)
    if check_input and not out_report.passed:
        raise FormulaMismatch(f"Mycielskian of a quantum graph fails the axioms: {out_report}")
    if in_report.reflexivity.kind == IRREFLEXIVE and out_report.reflexivity.kind != IRREFLEXIVE:
        raise FormulaMismatch("irreflexivity was not preserved")
    return MycielskiResult(graph, g, r, emb)


def iterated_mycielskian(g, rs, tol=None):
    """Apply ``mycielskian`` with ``rs[0]``, then ``rs[1]``, ...; ``[]`` returns g."""
    for r in rs:
        g = mycielskian(g, r, tol).graph
    return g


def stiebitz_family(k, rs, quantum=False, tol=None):
    """Member of the family obtained from K2 by ``k − 2`` transformations.

    With ``quantum=True`` the base is the complete quantum graph on Mat_2
    with its tracial δ-form instead of the classical K2.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    rs = list(rs)
    if len(rs) != k - 2:
        raise ValueError(f"need exactly k − 2 = {k - 2} values of r, got {len(rs)}")
    if quantum:
        base = complete_quantum_graph(build_space([2], tracial_weights([2])), name="K_Mat2")
    else:
        base = classical_to_quantum([(0, 1)], 2, name="K2")
    return iterated_mycielskian(base, rs, tol)


def lift_coloring(g, r, cert, tol=None, mu=None):
    """Extend a c-coloring of g to a (c+1)-coloring of μ_{r−1}(g).

    The apex gets its own colour ``ι_0 ι_0*`` (returned first); colour ``i``
    becomes ``Σ_j ι_j P_i ι_j*``.  The auxiliary factor is carried along.
    """
    from .chromatic import ColoringCertificate, verify_coloring

    tol = config.resolve(tol)
    check = verify_coloring(g, cert, tol)
    if not check.valid:
        raise InvalidCertificate(f"input certificate is not a coloring (residual {check.worst_residual:.3e})")
    if mu is None:
        mu = mycielskian(g, r, tol)
    elif mu.r != r or mu.base is not g:
        raise DimensionMismatch("supplied Mycielskian does not match (g, r)")
    d = cert.aux_dim
    eye = np.eye(d)
    adj = mu.iota_adjoints
    big = [np.kron(e, eye) for e in mu.embeddings]
    big_adj = [np.kron(a, eye) for a in adj]
    q0 = big[0] @ big_adj[0]
    qs = [q0]
    for p in cert.projections:
        qs.append(sum(big[j] @ p @ big_adj[j] for j in range(1, r + 1)))
    return ColoringCertificate(len(qs), d, tuple(qs))


@dataclass(frozen=True)
class ReductionResult:
    certificate: object
    apex_color: int
    p02_residual: float
    commutator_residual: float


def reduce_coloring(mu, cert, tol=None):
    """Turn a loc colouring of μ(g) (r = 2) into a colouring of g with one colour fewer.

    The colour containing the apex is put first, ``P_0 = (1, P_01, P_02)``;
    ``P_02 = 0`` is asserted and, provided ``P_01`` commutes with every
    ``P_l2``, the colours ``Q_l = P_l1 + P_01 P_l2`` are returned.
    """
    from .chromatic import ColoringCertificate, check_certificate_structure, verify_coloring

    tol = config.resolve(tol)
    if mu.r != 2:
        raise ValueError("reduction is only defined for the Mycielskian with r = 2")
    if cert.aux_dim != 1:
        raise InvalidCertificate("reduction needs a loc certificate (aux_dim = 1)")
    struct = check_certificate_structure(mu.graph, cert, tol)
    if not struct.valid:
        raise InvalidCertificate(f"not a partition of unity in the algebra: {struct.worst_residual:.3e}")
    tol_idem = np.sqrt(tol)
    apex = [k for k, p in enumerate(cert.projections) if abs(p[0, 0] - 1.0) < tol_idem]
    if len(apex) != 1:
        raise InvalidCertificate("no unique colour with apex component 1")
    a0 = apex[0]
    s1, s2 = mu.copy_slice(1), mu.copy_slice(2)
    p0 = cert.projections[a0]
    p01, p02 = p0[s1, s1], p0[s2, s2]
    scale = np.sqrt(mu.base.dim)
    p02_res = rel_residual(p02, 0.0, scale=scale)
    if p02_res > tol:
        raise LemmaViolation(f"apex colour meets the last copy: ‖P_02‖ = {p02_res:.3e}")
    others = [p for k, p in enumerate(cert.projections) if k != a0]
    comm = 0.0
    for p in others:
        pl2 = p[s2, s2]
        comm = max(comm, rel_residual(p01 @ pl2, pl2 @ p01, scale=scale))
    if comm > tol:
        raise CommutativityFailure(f"P_01 does not commute with some P_l2 (residual {comm:.3e})")
    full = verify_coloring(mu.graph, cert, tol)
    if not full.valid:
        raise InvalidCertificate(f"input is not a coloring of μ(G) (residual {full.worst_residual:.3e})")
    qs = tuple(p[s1, s1] + p01 @ p[s2, s2] for p in others)
    out = ColoringCertificate(len(qs), 1, qs)
    if not verify_coloring(mu.base, out, tol).valid:
        raise InvalidCertificate("reduced family is not a coloring of the base graph")
    return ReductionResult(out, a0, p02_res, comm)
