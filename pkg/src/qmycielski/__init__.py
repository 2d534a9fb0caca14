"""Quantum graphs on finite quantum spaces and their Mycielski transformations."""

__version__ = "0.1.0"

from .chromatic import (
    ColoringCertificate,
    amplify,
    certificate_from_classes,
    certificate_from_elements,
    chi_loc_exact,
    monotonicity_harness,
    verify_coloring,
)
from .clique import (
    CliqueWitness,
    HomomorphismWitness,
    classical_homomorphism_witness,
    compose_homomorphisms,
    motzkin_straus,
    omega_exact_classical,
    omega_q_lower_bound_verify,
    verify_clique_witness,
    verify_homomorphism,
)
from .config import get_tolerance, set_tolerance, tolerance
from .errors import QGraphError
from .generators import generate
from .mycielski import (
    iterated_mycielskian,
    lift_coloring,
    mycielskian,
    reduce_coloring,
    stiebitz_family,
)
from .qgraph import (
    QuantumGraph,
    check_axioms,
    classical_to_quantum,
    complete_quantum_graph,
    is_classical,
    make_graph,
    membership,
    operator_space,
    quantum_to_classical,
)
from .qspace import FiniteQuantumSpace, build_space, gns, tracial_weights
