"""Quantum adjacency operators, the axiom battery and the operator space S_G.

A quantum graph is a finite quantum space together with a self-adjoint
operator ``A`` on its GNS space satisfying

    A = δ⁻² m (A ⊗ A) m*                                   (Schur idempotent)
    A = (id ⊗ η* m)(id ⊗ A ⊗ id)(m* η ⊗ id)                (self-transpose)

All contractions below are written as tensor contractions on the canonical
basis so that no ``N³ × N³`` matrix is ever formed.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import config
from .errors import (
    AxiomViolation,
    DimensionMismatch,
    NotClassical,
    SelfLoop,
)
from .qspace import build_space, rel_residual

__all__ = [
    "QuantumGraph",
    "CheckResult",
    "ReflexivityStatus",
    "AxiomReport",
    "OperatorSubspace",
    "MembershipResult",
    "make_graph",
    "check_axioms",
    "schur_square",
    "self_transpose",
    "reflexivity_operator",
    "operator_space",
    "projection_superoperator",
    "apply_projection",
    "membership",
    "complete_quantum_graph",
    "classical_to_quantum",
    "quantum_to_classical",
    "is_classical",
]

REFLEXIVE = "reflexive"
IRREFLEXIVE = "irreflexive"
NEITHER = "neither"


@dataclass(frozen=True, eq=False)
class QuantumGraph:
    space: object
    adjacency: np.ndarray
    name: str = ""
    metadata: dict = field(default_factory=dict)

    @property
    def gns(self):
        return self.space.gns

    @property
    def dim(self):
        return self.space.dim

    @property
    def delta_squared(self):
        return self.space.delta_squared

    @cached_property
    def operator_space(self):
        return operator_space(self)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<QuantumGraph{label} blocks={list(self.space.blocks)} δ²={self.delta_squared:g}>"


def make_graph(space, adjacency, name="", metadata=None):
    a = np.array(adjacency, dtype=complex)
    if a.shape != (space.dim, space.dim):
        raise DimensionMismatch(
            f"adjacency of shape {a.shape} does not act on a {space.dim}-dimensional GNS space"
        )
    a.setflags(write=False)
    return QuantumGraph(space, a, name, dict(metadata or {}))


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    residual: float


@dataclass(frozen=True)
class ReflexivityStatus:
    kind: str
    residual: float


@dataclass(frozen=True)
class AxiomReport:
    selfadjoint: CheckResult
    eq1: CheckResult
    eq2: CheckResult
    reflexivity: ReflexivityStatus
    tol: float

    @property
    def passed(self):
        return self.selfadjoint.passed and self.eq1.passed and self.eq2.passed

    def items(self):
        return [
            ("selfadjoint", self.selfadjoint),
            ("schur_idempotent", self.eq1),
            ("self_transpose", self.eq2),
        ]


def _contract_mm(g, left, right):
    """``m (left ⊗ right) m*`` as an ``N × N`` matrix."""
    gns = g.gns
    n = gns.dim
    c3 = gns.comult_tensor
    t = np.tensordot(left, c3, axes=(1, 0))          # [a, b', d]
    t = np.einsum("bB,aBd->abd", right, t)
    return gns.mult @ t.reshape(n * n, n)


def schur_square(g):
    """``δ⁻² m (A ⊗ A) m*``."""
    return _contract_mm(g, g.adjacency, g.adjacency) / g.delta_squared


def self_transpose(g):
    """``(id ⊗ η* m)(id ⊗ A ⊗ id)(m* η ⊗ id)``."""
    gns = g.gns
    n = gns.dim
    cup = (gns.comult @ gns.unit_vec).reshape(n, n)
    cap = (gns.co_unit @ gns.mult).reshape(n, n)
    return cup @ g.adjacency.T @ cap


def reflexivity_operator(g):
    """``m (A ⊗ 𝟙) m*``."""
    return _contract_mm(g, g.adjacency, np.eye(g.dim))


def _reflexivity(g, tol):
    t = reflexivity_operator(g)
    d2 = g.delta_squared
    scale = d2 * np.sqrt(g.dim)
    r_ref = rel_residual(t, d2 * np.eye(g.dim), scale=scale)
    r_irr = rel_residual(t, 0.0, scale=scale)
    if r_irr < tol:
        return ReflexivityStatus(IRREFLEXIVE, r_irr)
    if r_ref < tol:
        return ReflexivityStatus(REFLEXIVE, r_ref)
    return ReflexivityStatus(NEITHER, min(r_ref, r_irr))


def check_axioms(g, tol=None):
    tol = config.resolve(tol)
    a = g.adjacency
    if a.shape != (g.dim, g.dim):
        raise DimensionMismatch(f"adjacency shape {a.shape} vs GNS dimension {g.dim}")
    scale = np.linalg.norm(a)
    r_sa = rel_residual(g.gns.adjoint(a), a, scale=scale)
    r1 = rel_residual(schur_square(g), a, scale=scale)
    r2 = rel_residual(self_transpose(g), a, scale=scale)
    return AxiomReport(
        CheckResult(r_sa < tol, r_sa),
        CheckResult(r1 < tol, r1),
        CheckResult(r2 < tol, r2),
        _reflexivity(g, tol),
        tol,
    )


def projection_superoperator(g):
    """Matrix of ``P: X ↦ δ⁻² m (A ⊗ X) m*`` acting on row-major ``vec(X)``."""
    gns = g.gns
    n = gns.dim
    k = np.einsum("abc,bB->acB", gns.mult_tensor, g.adjacency)
    s = np.tensordot(k, gns.comult_tensor, axes=(2, 0))    # [a, c, c', d]
    s = s.transpose(0, 3, 1, 2).reshape(n * n, n * n)
    return s / g.delta_squared


def apply_projection(g, x):
    return _contract_mm(g, g.adjacency, np.asarray(x)) / g.delta_squared


@dataclass(frozen=True, eq=False)
class OperatorSubspace:
    """Frobenius-orthonormal basis of a subspace of ``N × N`` matrices."""

    ambient_dim: int
    basis: np.ndarray  # shape (k, N, N)

    @property
    def dim(self):
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def project(self, x):
        x = np.asarray(x)
        if self.dim == 0:
            return np.zeros_like(x, dtype=complex)
        coeffs = np.tensordot(self.basis.conj(), x, axes=([1, 2], [0, 1]))
        return np.tensordot(coeffs, self.basis, axes=(0, 0))

    def residual(self, x):
        x = np.asarray(x)
        return rel_residual(x, self.project(x), scale=np.linalg.norm(x))


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    residual: float


def _range_basis(mat, n, tol):
    if not np.any(mat):
        return np.zeros((0, n, n), dtype=complex)
    u, s, _ = np.linalg.svd(mat)
    rank = int(np.sum(s > tol * s[0]))
    return u[:, :rank].T.reshape(rank, n, n).copy()


def operator_space(g, tol=None):
    """The operator space ``S_G = P(B(L²))`` as an orthonormal basis."""
    tol = config.resolve(tol)
    n = g.dim
    p = projection_superoperator(g)
    if rel_residual(p @ p, p) > tol:
        raise AxiomViolation("P is not idempotent; the adjacency fails the Schur idempotency axiom")
    basis = _range_basis(p, n, tol)
    basis.setflags(write=False)
    return OperatorSubspace(n, basis)


def membership(s, x, tol=None):
    tol = config.resolve(tol)
    x = np.asarray(x)
    if x.shape != (s.ambient_dim, s.ambient_dim):
        raise DimensionMismatch(f"expected a {s.ambient_dim}x{s.ambient_dim} operator, got {x.shape}")
    r = s.residual(x)
    return MembershipResult(r < tol, r)


def complete_quantum_graph(space, name=""):
    """``A x = δ² ψ(x) 𝟙 − x``: the quantum analogue of K_n."""
    g = space.gns
    a = space.delta_squared * np.outer(g.unit_vec, g.co_unit[0]) - np.eye(space.dim)
    return make_graph(space, a, name or f"complete{list(space.blocks)}")


def classical_to_quantum(edges, n, name=""):
    """Lift a simple loop-free graph on vertices ``0..n-1``."""
    n = int(n)
    if n < 1:
        raise DimensionMismatch("a graph needs at least one vertex")
    a = np.zeros((n, n))
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise DimensionMismatch(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        a[u, v] = a[v, u] = 1.0
    space = build_space([1] * n, [[1.0 / n]] * n)
    return make_graph(space, a, name)


def is_classical(g, tol=None):
    tol = config.resolve(tol)
    if not g.space.is_commutative:
        return False
    a = g.adjacency
    if np.max(np.abs(a.imag), initial=0.0) > tol:
        return False
    re = a.real
    if np.max(np.abs(re * (re - 1.0)), initial=0.0) > tol:
        return False
    return np.allclose(re, re.T, rtol=0, atol=tol) and np.max(np.abs(np.diag(re)), initial=0.0) <= tol


def quantum_to_classical(g, tol=None):
    """Edge list ``[(u, v), ...]`` with ``u < v`` of a classical quantum graph."""
    if not g.space.is_commutative:
        raise NotClassical("space has a matrix block of size > 1")
    if not is_classical(g, tol):
        raise NotClassical("adjacency is not a symmetric loop-free 0/1 matrix")
    a = np.rint(g.adjacency.real).astype(int)
    n = a.shape[0]
    return [(u, v) for u in range(n) for v in range(u + 1, n) if a[u, v]]
