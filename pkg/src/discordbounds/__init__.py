"""Bounds between geometric quantum discord and witnessed entanglement.

Library layout:

* :mod:`~discordbounds.linalg` matrix primitives (partial transpose and
  trace, Hermitian eigensystems, Schatten norms, Holder checks);
* :mod:`~discordbounds.states` validated bipartite density matrices and
  seeded random ensembles;
* :mod:`~discordbounds.witnesses` negativity and entanglement witnesses;
* :mod:`~discordbounds.discord` geometric discord (2-norm closed form,
  optimizer, brute-force oracles) and the trace-norm upper estimate;
* :mod:`~discordbounds.bounds` bound verifiers, counterexample search,
  certificates;
* :mod:`~discordbounds.cli` the command-line driver.
"""

from .bounds import (
    BOUND_IDS,
    BoundReport,
    CounterexampleCertificate,
    EnsembleSpec,
    MARGIN_TOL,
    check_corrected_trace,
    check_eq20,
    check_eq21_historical,
    check_eq22,
    check_lemma_trw2,
    falsify_search,
    holder_chain_audit,
    reverify_certificate,
    verify_ensemble,
)
from .discord import (
    DiscordEstimate,
    ProjectiveMeasurementA,
    basis_grid_oracle,
    geometric_discord_2norm_opt,
    geometric_discord_2norm_qubitA,
    grid_oracle_qubitA,
    hs_distance_sq,
    measure_A,
    trace_discord_upper,
    trace_distance_raw,
)
from .errors import (
    ConfigError,
    DegenerateWitnessError,
    DimsError,
    DiscordBoundsError,
    DomainError,
    FileFormatError,
    InvalidOrderError,
    NonHermitianError,
    NotPSDError,
    NotSquareError,
    PPTError,
    ProvenBoundViolationError,
    TraceError,
    UnsupportedDimsError,
)
from .linalg import (
    BipartiteDims,
    HolderPair,
    hermitian_eigensystem,
    holder_check,
    kron,
    partial_trace,
    partial_transpose,
    schatten_norm,
)
from .states import (
    BipartiteDensityMatrix,
    ClassicalQuantumState,
    bell_phi_plus,
    haar_unitary,
    isotropic,
    make_rng,
    product,
    random_cq,
    random_mixed_induced,
    random_product,
    random_pure,
    validate,
)
from .witnesses import (
    EntanglementWitness,
    NegativeSubspace,
    min_product_expectation,
    negativity,
    negativity_witness,
    pt_negative_subspace,
    random_robustness_witness,
    sup_normalize,
    witnessed_entanglement,
)

__version__ = "0.1.0"
