"""Entanglement-assisted classical capacity of Pauli channels with memory.

Two consecutive uses of a Pauli channel are Markov-correlated: with
probability ``mu`` the second use repeats the first Pauli operation.  This
package builds the correlated two-use Kraus sets, computes the capacity
``C_E = 4 - S(transformed purification)`` at the canonical Bell-pair input,
provides the closed-form eigenvalue spectra per channel family together
with a numeric diagonalization oracle, and compares against the Holevo
quantities of fixed product/entangled coding ensembles.
"""

from .backend import active_backend
from .capacity import (
    CapacityRecord,
    Spectrum16,
    bell_ensemble,
    capacity_from_spectrum,
    capacity_record,
    closed_form_spectrum,
    coding_chis,
    depolarizing_spectrum,
    entanglement_assisted_capacity,
    flip_spectrum,
    holevo_chi,
    memory_threshold,
    numeric_spectrum,
    phase_damping_spectrum,
    product_basis_ensemble,
    single_use_spectrum,
    sweep,
    transformed_purification,
    two_pauli_spectrum,
    validate_spectrum,
)
from .channels import (
    BELL_KINDS,
    FAMILIES,
    PAULI_LABELS,
    ChannelFamily,
    MemoryKrausSet,
    apply_channel,
    bell_state,
    bell_vector,
    build_memory_kraus,
    canonical_purification,
    completeness_defect,
    get_family,
    lift_to_purification,
    maximally_mixed,
    memory_weights,
    pauli_operator,
    pauli_stack,
    shrinking_factors,
    single_use_kraus,
)
from .numerics import (
    entropy_bits,
    hermitian_eigenvalues,
    hermitize,
    is_density_matrix,
    partial_trace,
    tensor,
    validate_density_matrix,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    # numerics
    "tensor",
    "partial_trace",
    "hermitian_eigenvalues",
    "von_neumann_entropy",
    "entropy_bits",
    "hermitize",
    "validate_density_matrix",
    "is_density_matrix",
    # channels
    "PAULI_LABELS",
    "BELL_KINDS",
    "FAMILIES",
    "ChannelFamily",
    "MemoryKrausSet",
    "get_family",
    "pauli_operator",
    "pauli_stack",
    "shrinking_factors",
    "memory_weights",
    "build_memory_kraus",
    "single_use_kraus",
    "lift_to_purification",
    "completeness_defect",
    "apply_channel",
    "bell_vector",
    "bell_state",
    "canonical_purification",
    "maximally_mixed",
    # capacity
    "Spectrum16",
    "CapacityRecord",
    "validate_spectrum",
    "depolarizing_spectrum",
    "flip_spectrum",
    "two_pauli_spectrum",
    "phase_damping_spectrum",
    "closed_form_spectrum",
    "numeric_spectrum",
    "transformed_purification",
    "capacity_from_spectrum",
    "entanglement_assisted_capacity",
    "single_use_spectrum",
    "holevo_chi",
    "product_basis_ensemble",
    "bell_ensemble",
    "coding_chis",
    "memory_threshold",
    "capacity_record",
    "sweep",
]
