"""Selective measurements on the pair and their local-operation test.

A selective measure is an unsymmetrized tensor product of two one-particle
operators, one per slot. Because it is not symmetrized it does not commute
with the slot permutation, and applying it to a symmetrized pair state
splits into two events: the measure acting on the distinguishable reference
state, and the measure acting on its permutation.

Classification rule, on the two event vectors:

* both (numerically) zero            -> BothZero
* exactly one zero                   -> LocalOperation: the measurement
  distinguishes the particles without creating entanglement
* both nonzero, mutually orthogonal  -> EntanglingMeasurement: the collapsed
  symmetrized state keeps both events as a coherent superposition
* both nonzero, overlapping          -> NonOrthogonalEvents

Zero tests are relative: a vector counts as zero when its norm is below
tol * scale, where scale is the product of the factors' max column norms
times the reference-state norm, so verdicts are invariant under global
phases and positive rescaling of either the state or the measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateInputError, DimensionMismatchError
from .hilbert import ZERO_TOL, OneParticleOperator, SpaceSpec, TwoParticleState
from .symmetry import Statistics, permute, sector


@dataclass(frozen=True)
class SelectiveMeasure:
    """Tensor product of one operator per slot, never symmetrized."""

    factor_slot1: OneParticleOperator
    factor_slot2: OneParticleOperator

    def __post_init__(self):
        if self.factor_slot1.space != self.factor_slot2.space:
            raise DimensionMismatchError("measure factors live in different spaces")

    @property
    def space(self) -> SpaceSpec:
        return self.factor_slot1.space

    @classmethod
    def identity(cls, space: SpaceSpec) -> SelectiveMeasure:
        eye = OneParticleOperator.identity(space)
        return cls(eye, eye)

    def swapped(self) -> SelectiveMeasure:
        """Same factors attached to the opposite slots."""
        return SelectiveMeasure(self.factor_slot2, self.factor_slot1)


@dataclass(frozen=True)
class EventPair:
    """The two event vectors of a selective measurement and their overlaps.

    ``event_direct`` is the measure applied to the reference state,
    ``event_permuted`` the measure applied to the permuted reference state.
    ``event_overlap`` is the inner product of the two events themselves;
    ``ref_overlap`` is the inner product of the reference state with the
    permuted event. The two coincide for projector-valued measures but can
    differ for general operators, so both are kept.
    """

    event_direct: TwoParticleState
    event_permuted: TwoParticleState
    norm_direct: float
    norm_permuted: float
    event_overlap: complex
    ref_overlap: complex


class VerdictTag(Enum):
    BOTH_ZERO = "BothZero"
    LOCAL_OPERATION = "LocalOperation"
    ENTANGLING_MEASUREMENT = "EntanglingMeasurement"
    NON_ORTHOGONAL_EVENTS = "NonOrthogonalEvents"


@dataclass(frozen=True)
class Verdict:
    tag: VerdictTag
    tolerance_used: float


@dataclass(frozen=True)
class CollapseResult:
    """Post-measurement state of the symmetrized pair.

    ``raw`` keeps the un-renormalized vector (the 1/sqrt(2) sector prefactor
    survives in it); ``normalized`` is the standard post-measurement state,
    or None when the outcome is impossible. ``probability`` is the squared
    raw norm, a Born-rule probability whenever both measure factors are
    orthogonal projectors (see :func:`is_projector_valued`).
    """

    raw: TwoParticleState
    normalized: TwoParticleState | None
    probability: float


def apply_measure(measure: SelectiveMeasure, state: TwoParticleState) -> TwoParticleState:
    """Apply the tensor-product measure: one factor per slot."""
    if measure.space != state.space:
        raise DimensionMismatchError("measure and state live in different spaces")
    left = measure.factor_slot1.entries
    right = measure.factor_slot2.entries
    out = left @ state.matrix() @ right.T
    return TwoParticleState(state.space, out.reshape(-1))


def measure_scale(measure: SelectiveMeasure) -> float:
    """Max-column-norm estimate of the tensor operator's size.

    Columns of a Kronecker product factorize, so its largest column 2-norm
    is the product of the factors' largest column 2-norms.
    """
    scale = 1.0
    for factor in (measure.factor_slot1, measure.factor_slot2):
        scale *= float(np.max(np.linalg.norm(factor.entries, axis=0)))
    return scale


def events(measure: SelectiveMeasure, ref_state: TwoParticleState) -> EventPair:
    """Compute both events of the measure on a distinguishable reference state."""
    direct = apply_measure(measure, ref_state)
    permuted = apply_measure(measure, permute(ref_state))
    return EventPair(
        event_direct=direct,
        event_permuted=permuted,
        norm_direct=direct.norm,
        norm_permuted=permuted.norm,
        event_overlap=complex(np.vdot(direct.amplitudes, permuted.amplitudes)),
        ref_overlap=complex(np.vdot(ref_state.amplitudes, permuted.amplitudes)),
    )


def classify(
    measure: SelectiveMeasure, ref_state: TwoParticleState, tol: float = ZERO_TOL
) -> Verdict:
    """Classify a selective measure against a distinguishable reference state.

    Event norms are compared against tol * scale and the event overlap
    against tol * scale**2, with scale = measure_scale * ||ref_state||.
    Callers normally arrange the reference state to be orthogonal to its
    permutation; the rule itself does not require it.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    pair = events(measure, ref_state)
    scale = measure_scale(measure) * ref_state.norm
    direct_zero = pair.norm_direct < tol * scale or scale == 0.0
    permuted_zero = pair.norm_permuted < tol * scale or scale == 0.0
    if direct_zero and permuted_zero:
        tag = VerdictTag.BOTH_ZERO
    elif direct_zero or permuted_zero:
        tag = VerdictTag.LOCAL_OPERATION
    elif abs(pair.event_overlap) < tol * scale**2:
        tag = VerdictTag.ENTANGLING_MEASUREMENT
    else:
        tag = VerdictTag.NON_ORTHOGONAL_EVENTS
    return Verdict(tag=tag, tolerance_used=tol)


def collapse(
    measure: SelectiveMeasure,
    ref_state: TwoParticleState,
    stat: Statistics,
    tol: float = ZERO_TOL,
) -> CollapseResult:
    """Apply the measure to the fermion or boson sector of the reference state.

    The raw result equals (direct event -+ permuted event)/sqrt(2). When its
    norm falls below tol * scale the outcome is impossible: probability 0
    and no normalized state.
    """
    sym = sector(ref_state, stat)
    if sym.norm < tol * ref_state.norm or sym.norm == 0.0:
        raise DegenerateInputError(
            f"reference state has no {stat.value} sector to measure"
        )
    raw = apply_measure(measure, sym)
    scale = measure_scale(measure) * sym.norm
    if raw.norm < tol * scale or scale == 0.0:
        return CollapseResult(raw=raw, normalized=None, probability=0.0)
    return CollapseResult(raw=raw, normalized=raw.normalize(), probability=raw.norm**2)


def is_projector_valued(measure: SelectiveMeasure, tol: float = ZERO_TOL) -> bool:
    """True when both factors are orthogonal projectors (Hermitian, idempotent).

    Only then is the squared event norm a Born-rule probability.
    """
    for factor in (measure.factor_slot1, measure.factor_slot2):
        entries = factor.entries
        if np.max(np.abs(entries - entries.conj().T)) >= tol:
            return False
        if np.max(np.abs(entries @ entries - entries)) >= tol:
            return False
    return True


def window_sites(center: int, width: int, sites: int) -> list[int]:
    """Sites covered by a width-wide window centered on ``center``, mod L.

    For even widths the extra site falls on the right; widths of at least
    the lattice size cap to the full lattice.
    """
    if width < 1:
        raise ValueError(f"window width must be >= 1, got {width}")
    if not 0 <= center < sites:
        raise IndexError(f"window center {center} out of range [0, {sites})")
    if width >= sites:
        return list(range(sites))
    half = (width - 1) // 2
    return sorted((center + offset) % sites for offset in range(-half, width - half))


def window_projector(center: int, width: int, space: SpaceSpec) -> OneParticleOperator:
    """Projector onto a contiguous window of lattice sites, identity on spin."""
    mask = np.zeros(space.extrinsic_dim)
    mask[window_sites(center, width, space.extrinsic_dim)] = 1.0
    entries = np.kron(np.diag(mask), np.eye(space.spin_dim)).astype(complex)
    return OneParticleOperator(space, entries)


def momentum_projector(mode1: int, mode2: int, space: SpaceSpec) -> SelectiveMeasure:
    """Selective measure projecting slot 1 on mode1 and slot 2 on mode2.

    Each factor is the rank-one projector onto a plane-wave momentum ket on
    the extrinsic factor, tensored with the identity on spin.
    """

    def factor(mode: int) -> OneParticleOperator:
        sites = space.extrinsic_dim
        if not 0 <= mode < sites:
            raise IndexError(f"momentum mode {mode} out of range [0, {sites})")
        wave = np.exp(2j * np.pi * mode * np.arange(sites) / sites) / np.sqrt(sites)
        entries = np.kron(np.outer(wave, wave.conj()), np.eye(space.spin_dim))
        return OneParticleOperator(space, entries)

    return SelectiveMeasure(factor(mode1), factor(mode2))
