"""Entropic uncertainty bounds for multiple measurements with quantum memories.

The package evaluates the measured-conditional-entropy sum for a set of
projective measurements on one party of a multipartite state, each measurement
read against an assigned memory subsystem, together with a family of lower
bounds on that sum: two-measurement memoryless and memory-assisted bounds,
tripartite bounds, multi-measurement bounds, and partition-aware bounds built
from pairwise complementarity and Holevo terms.

Layout
------
linalg
    Hermitian eigensolver (cyclic Jacobi) and small matrix helpers.
rng
    Seeded generator wrapper with splitmix64 child-seed derivation.
states
    Density matrices, partial trace, named state families, random ensembles.
measure
    Projective measurement bases, overlap constants, post-measurement maps.
entropy
    Shannon and von Neumann entropies, conditional and mutual information.
bounds
    The uncertainty sum, every bound, and the combined report.
scenario
    Canned parameter sweeps writing CSV tables.
cli
    Command line entry point.
"""

from .bounds import (
    BoundReport,
    Partition,
    bound_adabi,
    bound_berta,
    bound_deutsch,
    bound_maassen_uffink,
    bound_ming,
    bound_scb,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_tripartite_mu,
    bound_wu_multi,
    bound_wu_tripartite,
    bound_xie,
    evaluate_bounds,
    lhs_uncertainty,
    one_to_one,
    overlap_product,
    partition,
    partition_from_spec,
    q_mu,
    single_memory,
)
from .entropy import (
    conditional,
    holevo,
    measured_conditional,
    measured_entropy,
    mutual_information,
    shannon,
    subsystem_entropy,
    von_neumann,
)
from .errors import QmaeurError
from .linalg import eig_hermitian
from .measure import (
    MeasurementBasis,
    builtin_basis,
    channel_constant_b,
    load_basis,
    measurement_basis,
    overlap_c,
    pauli_triple,
    save_basis,
)
from .rng import Rng, child_seed
from .states import (
    DensityMatrix,
    density_matrix,
    family_mixed_two_qubit,
    generalized_w,
    load_state,
    partial_trace,
    pure_state,
    random_state,
    reorder_subsystems,
    save_state,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DensityMatrix",
    "MeasurementBasis",
    "Partition",
    "QmaeurError",
    "Rng",
    "bound_adabi",
    "bound_berta",
    "bound_deutsch",
    "bound_maassen_uffink",
    "bound_ming",
    "bound_scb",
    "bound_thm1",
    "bound_thm2",
    "bound_thm3",
    "bound_tripartite_mu",
    "bound_wu_multi",
    "bound_wu_tripartite",
    "bound_xie",
    "builtin_basis",
    "channel_constant_b",
    "child_seed",
    "conditional",
    "density_matrix",
    "eig_hermitian",
    "evaluate_bounds",
    "family_mixed_two_qubit",
    "generalized_w",
    "holevo",
    "lhs_uncertainty",
    "load_basis",
    "load_state",
    "measured_conditional",
    "measured_entropy",
    "measurement_basis",
    "mutual_information",
    "one_to_one",
    "overlap_c",
    "overlap_product",
    "partial_trace",
    "partition",
    "partition_from_spec",
    "pauli_triple",
    "pure_state",
    "q_mu",
    "random_state",
    "reorder_subsystems",
    "save_state",
    "shannon",
    "single_memory",
    "subsystem_entropy",
    "von_neumann",
    "__version__",
]
