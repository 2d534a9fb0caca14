"""Finite quantum spaces ``C(G) = ⊕_b Mat_{n_b}`` with faithful δ-form states.

Conventions (our choice, used by every operator and file format):

* The GNS space ``L²(G)`` is identified with ``C(G)`` through the canonical
  basis of matrix units: blocks in declaration order, and inside block ``b``
  the units ``e_ij`` in row-major order.  Its dimension is ``N = Σ n_b²``.
* The state has a diagonal density per block, ``ψ(x) = Σ_b Tr(Q_b x_b)``
  with ``Q_b = diag(q_b)``.
* Inner products are conjugate-linear in the first slot,
  ``⟨x, y⟩ = ψ(x* y) = x^H G y`` where ``G`` is the Gram matrix.
* ``L² ⊗ L²`` uses the Kronecker ordering: ``e_α ⊗ e_β`` has index
  ``α·N + β``.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import config
from .errors import DimensionMismatch, NotAState, NotDeltaForm, NotFaithful, SingularGram

__all__ = [
    "FiniteQuantumSpace",
    "GnsStructure",
    "build_space",
    "tracial_weights",
    "gns",
    "adjoint_in_gns",
    "gns_adjoint",
    "rel_residual",
]


def rel_residual(value, target, scale=None):
    """Relative Frobenius error ``‖value − target‖ / max(scale, 1)``.

    ``scale`` defaults to ``‖target‖_F``.
    """
    diff = np.linalg.norm(np.asarray(value) - np.asarray(target))
    if scale is None:
        scale = np.linalg.norm(target)
    return float(diff / max(float(scale), 1.0))


def _freeze(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteQuantumSpace:
    """A direct sum of full matrix blocks carrying a faithful δ-form state.

    Construct through :func:`build_space`, which validates the state.
    """

    blocks: tuple
    state_weights: tuple
    delta_squared: float
    _offsets: tuple = field(repr=False, default=())

    @property
    def dim(self):
        return sum(n * n for n in self.blocks)

    @property
    def is_commutative(self):
        return all(n == 1 for n in self.blocks)

    def block_slice(self, b):
        start = self._offsets[b]
        return slice(start, start + self.blocks[b] ** 2)

    def index(self, b, i, j):
        """Canonical index of the matrix unit ``e_ij`` in block ``b``."""
        return self._offsets[b] + i * self.blocks[b] + j

    @cached_property
    def gns(self):
        return _build_gns(self)

    def same_as(self, other, tol=None):
        tol = config.resolve(tol)
        if self.blocks != other.blocks:
            return False
        return all(
            np.allclose(a, b, rtol=0, atol=tol)
            for a, b in zip(self.state_weights, other.state_weights)
        )


@dataclass(frozen=True, eq=False)
class GnsStructure:
    """Explicit matrices for ``m``, ``m*``, ``η``, ``η*`` on ``L²(G)``."""

    dim: int
    gram: np.ndarray
    mult: np.ndarray
    comult: np.ndarray
    unit_vec: np.ndarray
    co_unit: np.ndarray
    delta_squared: float

    @cached_property
    def gram_diag(self):
        return np.real(np.diag(self.gram)).copy()

    @cached_property
    def mult_tensor(self):
        """``m`` as a tensor ``T[c, a, b]`` with ``m(e_a ⊗ e_b) = Σ_c T[c,a,b] e_c``."""
        n = self.dim
        return self.mult.reshape(n, n, n)

    @cached_property
    def comult_tensor(self):
        """``m*`` as a tensor ``T[a, b, c]``."""
        n = self.dim
        return self.comult.reshape(n, n, n)

    @cached_property
    def left_regular(self):
        """``L[α]`` is the operator of left multiplication by ``e_α`` on ``L²``."""
        return _freeze(self.mult_tensor.transpose(1, 0, 2))

    @cached_property
    def right_regular(self):
        """``R[β]`` is the operator of right multiplication by ``e_β`` on ``L²``."""
        return _freeze(self.mult_tensor.transpose(2, 0, 1))

    def left_mult(self, a):
        """Left multiplication operator ``x ↦ a x`` for a coordinate vector ``a``."""
        return np.tensordot(np.asarray(a), self.left_regular, axes=(0, 0))

    def right_mult(self, b):
        return np.tensordot(np.asarray(b), self.right_regular, axes=(0, 0))

    def psi(self, x):
        return complex(self.co_unit[0] @ np.asarray(x))

    def inner(self, x, y):
        return complex(np.conj(x) @ (self.gram_diag * y))

    def norm(self, x):
        return float(np.sqrt(max(self.inner(x, x).real, 0.0)))

    def adjoint(self, op):
        return adjoint_in_gns(op, self)


def tracial_weights(blocks):
    """Weights of the canonical δ-form ``q_b = n_b / Σ n²`` (``δ² = Σ n²``).

    On a single block this is the normalized trace.
    """
    total = sum(n * n for n in blocks)
    return [np.full(n, n / total) for n in blocks]


def build_space(blocks, state_weights=None, tol=None):
    """Validate a block structure and state, returning a FiniteQuantumSpace.

    ``state_weights`` defaults to :func:`tracial_weights`.  The δ-form
    condition ``m m* = δ² id`` is checked on the materialized GNS matrices.
    """
    tol = config.resolve(tol)
    blocks = tuple(int(n) for n in blocks)
    if not blocks or any(n < 1 for n in blocks):
        raise DimensionMismatch(f"block sizes must be positive integers, got {blocks}")
    if state_weights is None:
        state_weights = tracial_weights(blocks)
    if len(state_weights) != len(blocks):
        raise DimensionMismatch("one weight vector per block is required")
    weights = []
    for n, q in zip(blocks, state_weights):
        q = np.asarray(q, dtype=float).reshape(-1)
        if q.shape != (n,):
            raise DimensionMismatch(f"block of size {n} needs {n} weights, got {q.shape[0]}")
        weights.append(_freeze(q))
    if any(np.any(q <= 0) for q in weights):
        raise NotFaithful("state weights must be strictly positive")
    total = sum(float(q.sum()) for q in weights)
    if abs(total - 1.0) > tol:
        raise NotAState(f"state weights sum to {total!r}, not 1")

    offsets = tuple(int(x) for x in np.cumsum((0,) + tuple(n * n for n in blocks[:-1])))
    probe = FiniteQuantumSpace(blocks, tuple(weights), float("nan"), offsets)
    g = _build_gns(probe, delta_squared=float("nan"))
    mm = g.mult @ g.comult
    n = g.dim
    d2 = float(np.real(np.trace(mm)) / n)
    if rel_residual(mm, d2 * np.eye(n), scale=d2 * np.sqrt(n)) > tol:
        raise NotDeltaForm(
            "m m* is not a multiple of the identity; every block needs the same Σ_i 1/q_b[i]"
        )
    return FiniteQuantumSpace(blocks, tuple(weights), d2, offsets)


def gns(space):
    return space.gns


def _build_gns(space, delta_squared=None):
    n = space.dim
    gdiag = np.concatenate([np.tile(q, nb) for nb, q in zip(space.blocks, space.state_weights)])
    mult = np.zeros((n, n * n), dtype=complex)
    unit = np.zeros(n, dtype=complex)
    for b, nb in enumerate(space.blocks):
        for i in range(nb):
            unit[space.index(b, i, i)] = 1.0
            for j in range(nb):
                for k in range(nb):
                    # e_ij e_jk = e_ik
                    a = space.index(b, i, j)
                    c = space.index(b, j, k)
                    mult[space.index(b, i, k), a * n + c] = 1.0
    gram = np.diag(gdiag).astype(complex)
    # m* = (G⊗G)^{-1} m^H G, with diagonal G
    gg = np.kron(gdiag, gdiag)
    comult = (mult.conj().T * gdiag[None, :]) / gg[:, None]
    co_unit = (unit.conj() * gdiag).reshape(1, n)
    if delta_squared is None:
        delta_squared = space.delta_squared
    return GnsStructure(
        dim=n,
        gram=_freeze(gram),
        mult=_freeze(mult),
        comult=_freeze(comult),
        unit_vec=_freeze(unit),
        co_unit=_freeze(co_unit),
        delta_squared=delta_squared,
    )


def gns_adjoint(op, gram_domain, gram_codomain, max_cond=1e12):
    """Adjoint of ``op: H_dom → H_cod`` for inner products given by Gram matrices."""
    op = np.asarray(op)
    gram_domain = np.asarray(gram_domain)
    gram_codomain = np.asarray(gram_codomain)
    if op.shape != (gram_codomain.shape[0], gram_domain.shape[0]):
        raise DimensionMismatch(f"operator of shape {op.shape} does not match the Gram matrices")
    if np.linalg.cond(gram_domain) > max_cond:
        raise SingularGram("Gram matrix is numerically singular")
    return np.linalg.solve(gram_domain, op.conj().T @ gram_codomain)


def adjoint_in_gns(op, g):
    """``G⁻¹ op^H G`` for an operator on ``L²(G)``."""
    op = np.asarray(op)
    if op.shape != (g.dim, g.dim):
        raise DimensionMismatch(f"expected a {g.dim}x{g.dim} operator, got {op.shape}")
    d = g.gram_diag
    if d.min() <= 0 or d.max() / d.min() > 1e12:
        raise SingularGram("Gram matrix is numerically singular")
    return (op.conj().T * d[None, :]) / d[:, None]
