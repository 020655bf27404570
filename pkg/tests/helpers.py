"""Seeded random generators and oracles shared by the test modules."""

import numpy as np

from pairmeasure import (
    OneParticleOperator,
    SelectiveMeasure,
    SingleParticleVector,
    SpaceSpec,
    TwoParticleState,
    VerdictTag,
)


def random_state(rng, space: SpaceSpec, normalized: bool = True) -> TwoParticleState:
    amps = rng.standard_normal(space.pair_dim) + 1j * rng.standard_normal(space.pair_dim)
    if normalized:
        amps = amps / np.linalg.norm(amps)
    return TwoParticleState(space, amps, normalized=normalized)


def random_vector(rng, space: SpaceSpec) -> SingleParticleVector:
    amps = rng.standard_normal(space.total_dim) + 1j * rng.standard_normal(space.total_dim)
    return SingleParticleVector(space, amps)


def random_unitary(rng, dim: int) -> np.ndarray:
    gauss = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(gauss)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_projector(rng, space: SpaceSpec, rank: int) -> OneParticleOperator:
    basis = random_unitary(rng, space.total_dim)[:, :rank]
    return OneParticleOperator(space, basis @ basis.conj().T)


def random_measure(rng, space: SpaceSpec, rank1: int, rank2: int) -> SelectiveMeasure:
    return SelectiveMeasure(
        random_projector(rng, space, rank1), random_projector(rng, space, rank2)
    )


def brute_force_verdict(measure: SelectiveMeasure, state: TwoParticleState, tol: float):
    """Classification redone through the dense pair-space matrix of the measure."""
    full = np.kron(measure.factor_slot1.entries, measure.factor_slot2.entries)
    direct = full @ state.amplitudes
    dim = state.space.total_dim
    permuted = full @ state.amplitudes.reshape(dim, dim).T.reshape(-1)
    scale = float(np.max(np.linalg.norm(full, axis=0))) * np.linalg.norm(state.amplitudes)
    direct_zero = np.linalg.norm(direct) < tol * scale or scale == 0.0
    permuted_zero = np.linalg.norm(permuted) < tol * scale or scale == 0.0
    if direct_zero and permuted_zero:
        return VerdictTag.BOTH_ZERO
    if direct_zero or permuted_zero:
        return VerdictTag.LOCAL_OPERATION
    if abs(np.vdot(direct, permuted)) < tol * scale**2:
        return VerdictTag.ENTANGLING_MEASUREMENT
    return VerdictTag.NON_ORTHOGONAL_EVENTS
