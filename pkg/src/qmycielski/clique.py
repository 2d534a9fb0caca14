"""Clique witnesses, homomorphisms and Motzkin–Straus optimization."""

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import config
from ._combinatorics import max_clique, neighbour_masks
from .errors import (
    AxiomViolation,
    DimensionMismatch,
    FormulaMismatch,
    LambdaNotPSD,
    NotClassical,
    NotIsometry,
    ValueAtLeastOne,
    ZeroVector,
)
from .qgraph import check_axioms, complete_quantum_graph, is_classical, quantum_to_classical
from .qspace import gns_adjoint, rel_residual

__all__ = [
    "CliqueWitness",
    "HomomorphismWitness",
    "VerifyResult",
    "rank_one",
    "verify_clique_witness",
    "CliqueResult",
    "omega_exact_classical",
    "verify_homomorphism",
    "compose_homomorphisms",
    "classical_homomorphism_witness",
    "omega_q_lower_bound_verify",
    "MotzkinStrausResult",
    "motzkin_straus",
    "SIMPLEX",
    "PSD",
]

SIMPLEX = "simplex"
PSD = "psd"


@dataclass(frozen=True, eq=False)
class CliqueWitness:
    vectors: np.ndarray  # (K, N)

    def __len__(self):
        return len(self.vectors)


@dataclass(frozen=True, eq=False)
class HomomorphismWitness:
    isometry: np.ndarray
    aux_dims: tuple = (1, 1)
    lam: np.ndarray = None


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    worst_residual: float


def rank_one(g, x, y):
    """``|x⟩⟨y|`` on ``L²(G)``; the bra uses the GNS inner product."""
    return np.outer(x, np.conj(y) * g.gns.gram_diag)


def verify_clique_witness(g, w, tol=None):
    tol = config.resolve(tol)
    if not check_axioms(g, tol).passed:
        raise AxiomViolation("graph fails the quantum graph axioms")
    vecs = np.asarray(w.vectors, dtype=complex)
    if vecs.ndim != 2 or vecs.shape[1] != g.dim:
        raise DimensionMismatch(f"witness vectors must have length {g.dim}")
    for k, v in enumerate(vecs):
        if g.gns.norm(v) <= tol:
            raise ZeroVector(f"witness vector {k} is zero")
    s = g.operator_space
    worst = 0.0
    for i in range(len(vecs)):
        for j in range(len(vecs)):
            if i != j:
                worst = max(worst, s.residual(rank_one(g, vecs[i], vecs[j])))
    return VerifyResult(worst < tol, worst)


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    vertices: tuple
    witness: CliqueWitness = field(repr=False)


def omega_exact_classical(g):
    if not is_classical(g):
        raise NotClassical("exact ω is only available for classical graphs")
    n = g.dim
    clique = max_clique(n, neighbour_masks(n, quantum_to_classical(g)))
    vecs = np.zeros((len(clique), n), dtype=complex)
    for k, v in enumerate(clique):
        vecs[k, v] = 1.0
    return CliqueResult(len(clique), tuple(clique), CliqueWitness(vecs))


def _aux_gram(g, h):
    return np.kron(g.gns.gram, np.eye(h))


def verify_homomorphism(g, f, w, tol=None):
    """Check ``J (S_g ⊗ Λ) J* ⊆ S_f ⊗ B(ℂ^h')``."""
    tol = config.resolve(tol)
    h, hp = (int(x) for x in w.aux_dims)
    j = np.asarray(w.isometry, dtype=complex)
    if j.shape != (f.dim * hp, g.dim * h):
        raise DimensionMismatch(f"isometry has shape {j.shape}, expected {(f.dim * hp, g.dim * h)}")
    lam = np.eye(1) if w.lam is None else np.asarray(w.lam, dtype=complex)
    if lam.shape != (h, h):
        raise DimensionMismatch(f"Λ must be {h}x{h}, got {lam.shape}")
    lscale = max(np.linalg.norm(lam), 1.0)
    if rel_residual(lam, lam.conj().T, scale=lscale) > tol or np.linalg.eigvalsh(
        (lam + lam.conj().T) / 2
    ).min() < -tol * lscale:
        raise LambdaNotPSD("Λ is not positive semidefinite")
    j_star = gns_adjoint(j, _aux_gram(g, h), _aux_gram(f, hp))
    r_iso = rel_residual(j_star @ j, np.eye(g.dim * h))
    if r_iso > tol:
        raise NotIsometry(f"J*J differs from the identity by {r_iso:.3e}")
    sf = f.operator_space
    worst = 0.0
    for x in g.operator_space.basis:
        y = j @ np.kron(x, lam) @ j_star
        blocks = y.reshape(f.dim, hp, f.dim, hp).transpose(1, 3, 0, 2)
        err = sum(
            np.linalg.norm(blocks[p, q] - sf.project(blocks[p, q])) ** 2
            for p in range(hp) for q in range(hp)
        )
        worst = max(worst, float(np.sqrt(err)) / max(np.linalg.norm(y), 1.0))
    return VerifyResult(worst < tol, worst)


def compose_homomorphisms(w1, w2):
    """Witness for ``G → E`` from witnesses for ``G → F`` and ``F → E``.

    The composite lands in ``L²(E) ⊗ ℂ^{h2'} ⊗ ℂ^{h1'}``.
    """
    if w1.lam is not None or w2.lam is not None or w1.aux_dims[0] != 1 or w2.aux_dims[0] != 1:
        raise ValueError("composition is implemented for plain homomorphisms only")
    hp1, hp2 = w1.aux_dims[1], w2.aux_dims[1]
    j = np.kron(np.asarray(w2.isometry), np.eye(hp1)) @ np.asarray(w1.isometry)
    return HomomorphismWitness(j, (1, hp1 * hp2))


def classical_homomorphism_witness(mapping, n_g, n_f, injective=None):
    """Isometry realising a vertex map between classical graphs.

    ``J e_v = sqrt(n_f / n_g) e_{f(v)} ⊗ e_v``; when the map is injective the
    auxiliary factor is dropped (``h' = 1``).
    """
    mapping = [int(x) for x in mapping]
    if len(mapping) != n_g:
        raise DimensionMismatch("mapping must assign an image to every vertex")
    if injective is None:
        injective = len(set(mapping)) == n_g
    scale = np.sqrt(n_f / n_g)
    hp = 1 if injective else n_g
    j = np.zeros((n_f * hp, n_g), dtype=complex)
    for v, fv in enumerate(mapping):
        j[fv * hp + (0 if injective else v), v] = scale
    return HomomorphismWitness(j, (1, hp))


def omega_q_lower_bound_verify(g, space, w, tol=None):
    """A valid witness certifies ``ω_q(g) ≥ dim C(F)``; returns ``(valid, size)``."""
    k = complete_quantum_graph(space)
    res = verify_homomorphism(k, g, w, tol)
    return res.valid, space.dim


@dataclass(frozen=True)
class MotzkinStrausResult:
    value: float
    omega_ms: float
    argmax: np.ndarray = field(repr=False)
    cone: str = SIMPLEX
    certified: bool = None
    exact_omega: int = None


def _replicator(b, v, iters, tol):
    f = float(v @ b @ v)
    for _ in range(iters):
        bv = b @ v
        if f <= 0:
            break
        new = v * bv / f
        new /= new.sum()
        fn = float(new @ b @ new)
        if fn < f - 1e-12 * max(1.0, abs(f)):
            raise FormulaMismatch("replicator dynamics lost monotonicity")
        v, done = new, fn - f <= tol * 1e-3
        f = fn
        if done:
            break
    return v, f


def _round_to_clique(v, nb, n):
    order = sorted(range(n), key=lambda i: (-v[i], i))
    chosen = 0
    size = 0
    for i in order:
        if nb[i] & chosen == chosen:
            chosen |= 1 << i
            size += 1
    x = np.array([(chosen >> i) & 1 for i in range(n)], dtype=float)
    return x / size


def _simplex(g, restarts, iters, rng, tol):
    a = g.adjacency
    b = np.real(a + a.T) / 2
    n = b.shape[0]
    if not np.any(b):
        return 0.0, np.full(n, 1.0 / n)
    shift = max(0.0, -float(b.min()))
    bp = b + shift
    nb = None
    if is_classical(g, tol):
        nb = neighbour_masks(n, quantum_to_classical(g, tol))
    best_val, best_v = -np.inf, None
    for k in range(restarts):
        v0 = np.ones(n)
        if k:
            v0 = v0 + rng.random(n) * n
        v0 /= v0.sum()
        v, _ = _replicator(bp, v0, iters, tol)
        cands = [v]
        if nb is not None:
            cands.append(_round_to_clique(v, nb, n))
        for c in cands:
            val = float(c @ b @ c)
            if val > best_val:
                best_val, best_v = val, c
    return best_val, best_v


def _psd(g, restarts, iters, rng):
    """Maximise ``δ⁻² ⟨v, A v⟩`` over positive ``v`` with ``ψ(v) = 1``.

    Positive elements are parametrised as ``v = b* b / ψ(b* b)``.
    """
    gns = g.gns
    n = g.dim
    d2 = g.delta_squared
    m = gns.gram @ g.adjacency
    m = (m + m.conj().T) / 2
    blocks = g.space.blocks

    def element(params):
        z = params[:n] + 1j * params[n:]
        out = np.zeros(n, dtype=complex)
        for b, nb in enumerate(blocks):
            sl = g.space.block_slice(b)
            x = z[sl].reshape(nb, nb)
            out[sl] = (x.conj().T @ x).reshape(-1)
        return out / gns.psi(out).real

    def objective(params):
        v = element(params)
        return -float(np.real(v.conj() @ m @ v)) / d2

    best_val, best_v = -np.inf, None
    for _ in range(restarts):
        x0 = rng.standard_normal(2 * n)
        res = minimize(objective, x0, method="L-BFGS-B", options={"maxiter": iters})
        if -res.fun > best_val:
            best_val, best_v = -res.fun, element(res.x)
    return best_val, best_v


def motzkin_straus(g, cone=SIMPLEX, restarts=50, iters=None, seed=0, tol=None):
    """Best value of the Motzkin–Straus program over the chosen cone.

    ``simplex``: ``max vᵀ A v`` over the probability simplex in the canonical
    basis, by replicator dynamics from a uniform start and ``restarts − 1``
    perturbed ones.  For classical graphs each limit is also rounded to the
    maximal clique it supports.  ``psd``: ``max δ⁻²⟨v, A v⟩`` over positive
    ``v`` with ``ψ(v) = 1``.  Only the classical simplex case is certified
    against the exact clique number; everything else is a best-found value.
    """
    tol = config.resolve(tol)
    if iters is None:
        iters = 10 * g.dim
    rng = np.random.default_rng(seed)
    if cone == SIMPLEX:
        value, v = _simplex(g, restarts, iters, rng, tol)
    elif cone == PSD:
        value, v = _psd(g, restarts, iters, rng)
    else:
        raise ValueError(f"unknown cone {cone!r}; use 'simplex' or 'psd'")
    if value >= 1 - tol:
        raise ValueAtLeastOne(f"Motzkin–Straus value {value} ≥ 1: cone or normalisation is wrong")
    certified = exact = None
    if cone == SIMPLEX and is_classical(g, tol):
        exact = omega_exact_classical(g).omega
        certified = abs(value - (1 - 1 / exact)) < 1e-6
    return MotzkinStrausResult(value, 1.0 / (1.0 - value), v, cone, certified, exact)
