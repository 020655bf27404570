"""Selective measurements on systems of two identical particles.

Build a pair state over a factored single-particle space (lattice or
momentum modes times spin), symmetrize it for fermions or bosons, apply an
unsymmetrized tensor-product selective measurement, and classify the result:
a local operation that merely distinguishes the particles, or a measurement
that entangles them. Entanglement diagnostics (Schmidt data, Slater rank,
reduced densities) back every verdict quantitatively.
"""

from .entanglement import (
    EbmEvidence,
    EntanglementReport,
    coefficient_matrix,
    ebm_evidence,
    reduced_density,
    schmidt,
    slater_rank,
)
from .errors import DegenerateInputError, DimensionMismatchError, ParseError
from .fileio import (
    parse_measure_file,
    parse_state_file,
    write_measure_file,
    write_state_file,
)
from .hilbert import (
    NORM_TOL,
    ZERO_TOL,
    OneParticleOperator,
    SingleParticleVector,
    SpaceSpec,
    TwoParticleState,
    basis_vector,
    inner_product,
    mode_index,
    mode_split,
    momentum_representation,
    plane_wave,
    tensor_state,
)
from .measurement import (
    CollapseResult,
    EventPair,
    SelectiveMeasure,
    Verdict,
    VerdictTag,
    apply_measure,
    classify,
    collapse,
    events,
    is_projector_valued,
    measure_scale,
    momentum_projector,
    window_projector,
    window_sites,
)
from .scenarios import (
    SPIN_DOWN,
    SPIN_UP,
    PhaseCheck,
    ScenarioResult,
    build_pair_state,
    relabel_distinguishable,
    scenario_momentum_projection,
    scenario_position_windows,
)
from .symmetry import Statistics, orthogonal_sum_check, permutation_overlap, permute, sector

__version__ = "0.1.0"

__all__ = [
    "CollapseResult",
    "DegenerateInputError",
    "DimensionMismatchError",
    "EbmEvidence",
    "EntanglementReport",
    "EventPair",
    "NORM_TOL",
    "OneParticleOperator",
    "ParseError",
    "PhaseCheck",
    "ScenarioResult",
    "SelectiveMeasure",
    "SingleParticleVector",
    "SpaceSpec",
    "SPIN_DOWN",
    "SPIN_UP",
    "Statistics",
    "TwoParticleState",
    "Verdict",
    "VerdictTag",
    "ZERO_TOL",
    "apply_measure",
    "basis_vector",
    "build_pair_state",
    "classify",
    "coefficient_matrix",
    "collapse",
    "ebm_evidence",
    "events",
    "inner_product",
    "is_projector_valued",
    "measure_scale",
    "mode_index",
    "mode_split",
    "momentum_projector",
    "momentum_representation",
    "orthogonal_sum_check",
    "parse_measure_file",
    "parse_state_file",
    "permutation_overlap",
    "permute",
    "plane_wave",
    "reduced_density",
    "relabel_distinguishable",
    "scenario_momentum_projection",
    "scenario_position_windows",
    "schmidt",
    "sector",
    "slater_rank",
    "tensor_state",
    "window_projector",
    "window_sites",
    "write_measure_file",
    "write_state_file",
]
