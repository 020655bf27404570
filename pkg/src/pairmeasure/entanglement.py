"""Entanglement diagnostics on the slot bipartition of a pair state.

Quantifies what the measurement classifier only asserts: Schmidt singular
values, rank and entropy of the coefficient matrix, reduced density
matrices per slot, and the Slater rank for antisymmetric (fermionic)
states, where the singular values pair up and rank 1 means a single Slater
determinant, i.e. no entanglement in the fermionic sense.

Rank and entropy are taken on the distinguishable slot bipartition. For
symmetric (bosonic) states this plain Schmidt rank is reported as-is; it is
a bipartition diagnostic, not a committed bosonic entanglement measure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError
from .hilbert import TwoParticleState
from .measurement import SelectiveMeasure, apply_measure, collapse
from .symmetry import Statistics, permute

# Relative singular-value threshold for rank counting.
RANK_TOL = 1e-8


@dataclass(frozen=True)
class EntanglementReport:
    """Schmidt data of a normalized pair state.

    ``singular_values`` descend; ``schmidt_rank`` counts those above
    tol * sigma_max; ``entropy`` is -sum(lam * ln(lam)) in nats over the
    normalized squared spectrum, with 0*ln(0) = 0; ``slater_rank`` is filled
    only for antisymmetric states.
    """

    singular_values: np.ndarray
    schmidt_rank: int
    entropy: float
    slater_rank: int | None = None


@dataclass(frozen=True)
class EbmEvidence:
    """Before/after Schmidt ranks showing whether a measurement entangled."""

    rank_before: int
    rank_after: int
    entangled_by_measure: bool


def coefficient_matrix(state: TwoParticleState) -> np.ndarray:
    """Amplitudes as a matrix: rows index slot-1 modes, columns slot-2 modes."""
    if state.norm == 0.0:
        raise DegenerateInputError("zero state has no coefficient matrix")
    return state.matrix().copy()


def _is_antisymmetric(state: TwoParticleState, tol: float) -> bool:
    residual = np.linalg.norm(state.amplitudes + permute(state).amplitudes)
    return residual < tol * state.norm


def schmidt(state: TwoParticleState, tol: float = RANK_TOL) -> EntanglementReport:
    """Schmidt decomposition report of the state, normalized internally."""
    nrm = state.norm
    if nrm == 0.0:
        raise DegenerateInputError("zero state has no Schmidt decomposition")
    sigma = np.linalg.svd(state.matrix() / nrm, compute_uv=False)
    rank = int(np.count_nonzero(sigma > tol * sigma[0]))
    lam = sigma**2
    positive = lam[lam > 0.0]
    entropy = float(-np.sum(positive * np.log(positive)))
    slater = slater_rank(state, tol) if _is_antisymmetric(state, tol) else None
    return EntanglementReport(
        singular_values=sigma,
        schmidt_rank=rank,
        entropy=entropy,
        slater_rank=slater,
    )


def slater_rank(state: TwoParticleState, tol: float = RANK_TOL) -> int:
    """Number of Slater determinants in the canonical fermionic expansion.

    The coefficient matrix of an antisymmetric state has doubly degenerate
    singular values; each pair is one determinant.
    """
    if state.norm == 0.0:
        raise DegenerateInputError("zero state has no Slater rank")
    if not _is_antisymmetric(state, tol):
        raise ValueError("Slater rank requires an antisymmetric state")
    sigma = np.linalg.svd(state.matrix(), compute_uv=False)
    count = int(np.count_nonzero(sigma > tol * sigma[0]))
    if count % 2:
        raise ValueError(
            f"singular values fail to pair up ({count} above threshold); "
            "degenerate spectrum too noisy for a Slater count"
        )
    return count // 2


def reduced_density(state: TwoParticleState, slot: int) -> np.ndarray:
    """Reduce the normalized state to one slot by tracing out the other.

    Returns a Hermitian, positive-semidefinite matrix of unit trace over the
    single-particle modes of the kept slot (1 or 2).
    """
    if slot not in (1, 2):
        raise ValueError(f"slot must be 1 or 2, got {slot}")
    nrm = state.norm
    if nrm == 0.0:
        raise DegenerateInputError("zero state has no reduced density matrix")
    coeff = state.matrix() / nrm
    if slot == 1:
        return coeff @ coeff.conj().T
    return coeff.T @ coeff.conj()


def ebm_evidence(
    measure: SelectiveMeasure,
    ref_state: TwoParticleState,
    stat: Statistics,
    tol: float = RANK_TOL,
) -> EbmEvidence:
    """Compare Schmidt ranks before and after symmetrized collapse.

    "Before" is the rank of the direct event alone, the would-be outcome on
    distinguishable particles; "after" is the rank of the collapsed
    symmetrized state. A strict increase is entanglement created by the
    measurement itself.
    """
    direct = apply_measure(measure, ref_state)
    if direct.norm == 0.0:
        raise DegenerateInputError("direct event vanishes; no before/after comparison")
    result = collapse(measure, ref_state, stat)
    if result.normalized is None:
        raise DegenerateInputError("collapse outcome impossible; nothing to compare")
    rank_before = schmidt(direct, tol).schmidt_rank
    rank_after = schmidt(result.normalized, tol).schmidt_rank
    return EbmEvidence(
        rank_before=rank_before,
        rank_after=rank_after,
        entangled_by_measure=rank_after > rank_before,
    )
