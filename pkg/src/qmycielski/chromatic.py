"""Colouring certificates for quantum graphs and exact χ_loc for classical ones.

A certificate is a family of projections ``P_1, …, P_c`` in
``C(G) ⊗ Mat_d`` acting on ``L²(G) ⊗ ℂ^d`` (Kronecker ordering, GNS index
first).  It is a colouring when the projections sum to the identity and
``P_a (X ⊗ 𝟙_d) P_a = 0`` for every ``X`` in the operator space ``S_G``.
``d = 1`` gives loc certificates.
"""

from dataclasses import dataclass, field

import numpy as np

from . import config
from ._combinatorics import chromatic_number
from .errors import AxiomViolation, DimensionMismatch, FormulaMismatch, NotClassical, NotIrreflexive
from .qgraph import IRREFLEXIVE, check_axioms, is_classical, quantum_to_classical
from .qspace import rel_residual

__all__ = [
    "ColoringCertificate",
    "VerifyResult",
    "certificate_from_elements",
    "certificate_from_classes",
    "amplify",
    "algebra_residual",
    "check_certificate_structure",
    "verify_coloring",
    "ChromaticResult",
    "chi_loc_exact",
    "MonotonicityRow",
    "monotonicity_harness",
]


@dataclass(frozen=True, eq=False)
class ColoringCertificate:
    colors: int
    aux_dim: int
    projections: tuple

    def __post_init__(self):
        if self.colors != len(self.projections):
            raise DimensionMismatch(f"{self.colors} colours declared, {len(self.projections)} projections given")
        if self.aux_dim < 1:
            raise DimensionMismatch("aux_dim must be ≥ 1")


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    worst_residual: float
    failures: tuple = ()


def certificate_from_elements(g, elements, aux_dim=1):
    """Build a certificate from algebra elements given as coordinate vectors.

    With ``aux_dim = d`` each element is an array of shape ``(N, d, d)``
    holding the coefficients of ``e_α ⊗ e_pq``.
    """
    gns = g.gns
    projs = []
    for x in elements:
        x = np.asarray(x, dtype=complex)
        if aux_dim == 1:
            projs.append(gns.left_mult(x.reshape(-1)))
        else:
            p = np.einsum("apq,aij->ipjq", x, gns.left_regular)
            projs.append(p.reshape(g.dim * aux_dim, g.dim * aux_dim))
    return ColoringCertificate(len(projs), aux_dim, tuple(projs))


def certificate_from_classes(g, coloring):
    """Loc certificate for a classical graph from a vertex colouring list."""
    if not g.space.is_commutative:
        raise NotClassical("vertex colourings only make sense on commutative spaces")
    colors = sorted(set(coloring))
    projs = tuple(np.diag([1.0 + 0j if c == k else 0j for c in coloring]) for k in colors)
    return ColoringCertificate(len(projs), 1, projs)


def amplify(cert, extra):
    """Tensor every projection with ``𝟙`` on an extra ``ℂ^extra`` factor."""
    eye = np.eye(extra)
    return ColoringCertificate(
        cert.colors, cert.aux_dim * extra, tuple(np.kron(p, eye) for p in cert.projections)
    )


def algebra_residual(g, op, aux_dim=1):
    """Distance of ``op`` from ``C(G) ⊗ Mat_d`` (left regular representation)."""
    n = g.dim
    d = aux_dim
    blocks = np.asarray(op).reshape(n, d, n, d).transpose(1, 3, 0, 2)   # [p, q, i, j]
    basis = g.gns.left_regular                                          # [α, i, j]
    norms = np.einsum("aij,aij->a", basis.conj(), basis).real
    coeffs = np.einsum("aij,pqij->pqa", basis.conj(), blocks) / norms
    proj = np.einsum("pqa,aij->pqij", coeffs, basis)
    return rel_residual(blocks, proj, scale=np.linalg.norm(blocks))


def _adjoint_aux(g, op, d):
    w = np.repeat(g.gns.gram_diag, d)
    return (op.conj().T * w[None, :]) / w[:, None]


def check_certificate_structure(g, cert, tol=None):
    """Projection, partition-of-unity and algebra-membership checks."""
    tol = config.resolve(tol)
    size = g.dim * cert.aux_dim
    worst = 0.0
    failures = []
    total = np.zeros((size, size), dtype=complex)
    for a, p in enumerate(cert.projections):
        p = np.asarray(p)
        if p.shape != (size, size):
            raise DimensionMismatch(f"projection {a} has shape {p.shape}, expected {(size, size)}")
        total = total + p
        scale = max(np.linalg.norm(p), 1.0)
        r_sa = rel_residual(_adjoint_aux(g, p, cert.aux_dim), p, scale=scale)
        r_id = rel_residual(p @ p, p, scale=scale)
        r_alg = algebra_residual(g, p, cert.aux_dim)
        for name, r, t in (("selfadjoint", r_sa, tol), ("idempotent", r_id, np.sqrt(tol)),
                           ("in_algebra", r_alg, tol)):
            worst = max(worst, r)
            if r >= t:
                failures.append(f"P_{a} {name}: {r:.3e}")
    eye = np.eye(size)
    r_pu = rel_residual(total, eye)
    worst = max(worst, r_pu)
    if r_pu >= tol:
        failures.append(f"partition of unity: {r_pu:.3e}")
    return VerifyResult(not failures, worst, tuple(failures))


def verify_coloring(g, cert, tol=None):
    tol = config.resolve(tol)
    report = check_axioms(g, tol)
    if not report.passed:
        raise AxiomViolation("graph fails the quantum graph axioms")
    if report.reflexivity.kind != IRREFLEXIVE:
        raise NotIrreflexive("colourings are only defined for irreflexive quantum graphs")
    struct = check_certificate_structure(g, cert, tol)
    failures = list(struct.failures)
    worst = struct.worst_residual
    basis = g.operator_space.basis
    d = cert.aux_dim
    if len(basis):
        xs = np.stack([np.kron(x, np.eye(d)) for x in basis]) if d > 1 else basis
        for a, p in enumerate(cert.projections):
            comp = np.matmul(np.matmul(p, xs), p)
            r = float(np.max(np.linalg.norm(comp, axis=(1, 2))))
            worst = max(worst, r)
            if r >= tol:
                failures.append(f"P_{a} S P_{a} ≠ 0: {r:.3e}")
    return VerifyResult(not failures, worst, tuple(failures))


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    coloring: tuple
    certificate: ColoringCertificate = field(repr=False)


def chi_loc_exact(g):
    """Exact χ_loc of a classical quantum graph, with a witnessing certificate."""
    if not is_classical(g):
        raise NotClassical("exact χ_loc is only available for classical graphs")
    edges = quantum_to_classical(g)
    chi, col = chromatic_number(g.dim, edges)
    return ChromaticResult(chi, tuple(col), certificate_from_classes(g, col))


@dataclass(frozen=True)
class MonotonicityRow:
    r: int
    chi_g: int
    chi_mu: int
    lower_ok: bool
    upper_ok: bool

    @property
    def tight(self):
        if self.chi_mu == self.chi_g + 1:
            return "upper"
        if self.chi_mu == self.chi_g:
            return "lower"
        return "none"


def monotonicity_harness(g, r_values, tol=None):
    """χ_loc(g) and χ_loc(μ_{r−1}(g)) for each r, with both bounds checked."""
    from .mycielski import mycielskian

    base = chi_loc_exact(g).chi
    rows = []
    for r in r_values:
        chi_mu = chi_loc_exact(mycielskian(g, r, tol).graph).chi
        row = MonotonicityRow(r, base, chi_mu, base <= chi_mu, chi_mu <= base + 1)
        if not (row.lower_ok and row.upper_ok):
            raise FormulaMismatch(f"chromatic sandwich violated: {row}")
        rows.append(row)
    return rows
