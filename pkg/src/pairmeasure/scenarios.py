"""End-to-end worked setups on a periodic lattice with spin-1/2 particles.

Both scenarios start from the same symmetrized pair: one particle in
momentum mode ``m_a`` with spin up, the other in mode ``m_b`` with spin
down.

* Momentum projection selects exactly that mode assignment. The permuted
  event vanishes, so the measurement merely relabels the particles by their
  momenta: a local operation, probability 1/2, no entanglement gained.

* Position windows project each slot onto a window of lattice sites. With
  disjoint windows both events survive and stay orthogonal, so the
  collapsed pair carries an opposite-spin superposition across the two
  regions: entanglement created by the measurement itself. For single-site
  windows at ``x_a`` and ``x_b`` the two amplitudes differ by exactly
  ``-+ exp(-i * dk * dx)`` (minus for fermions, plus for bosons), with
  ``dk`` the mode-wavenumber difference and ``dx`` the site separation; the
  scenario measures that ratio and checks it against the prediction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import EbmEvidence, EntanglementReport, ebm_evidence, schmidt
from .errors import DegenerateInputError
from .hilbert import (
    ZERO_TOL,
    SpaceSpec,
    TwoParticleState,
    mode_index,
    momentum_representation,
    plane_wave,
    tensor_state,
)
from .measurement import (
    EventPair,
    SelectiveMeasure,
    Verdict,
    VerdictTag,
    classify,
    collapse,
    events,
    momentum_projector,
    window_projector,
    window_sites,
)
from .symmetry import Statistics, sector

SPIN_UP = 0
SPIN_DOWN = 1


@dataclass(frozen=True)
class PhaseCheck:
    """Measured vs predicted relative amplitude between the two events.

    ``measured`` is the complex ratio of the spin-swapped amplitude over the
    direct one in the collapsed state; it must lie on the unit circle.
    """

    measured: complex
    predicted: complex
    deviation: float

    def __post_init__(self):
        if abs(abs(self.measured) - 1.0) >= 1e-10:
            raise ValueError(
                f"measured relative amplitude is off the unit circle: {self.measured}"
            )


@dataclass(frozen=True)
class ScenarioResult:
    """Everything a scenario run produces.

    ``post_state`` keeps the un-renormalized collapsed vector (the sector
    prefactor 1/sqrt(2) survives in it); ``relabeled`` is the two-spin state
    left after using the scenario's pair of extrinsic labels as particle
    tags, when the post-state supports that reading.
    """

    verdict: Verdict
    probability: float
    post_state: TwoParticleState
    post_state_normalized: TwoParticleState | None
    report: EntanglementReport
    evidence: EbmEvidence
    event_pair: EventPair
    phase_check: PhaseCheck | None = None
    relabeled: TwoParticleState | None = None


def build_pair_state(
    m_a: int,
    m_b: int,
    spin_a: int,
    spin_b: int,
    stat: Statistics,
    space: SpaceSpec,
) -> TwoParticleState:
    """Symmetrized pair with (mode, spin) labels (m_a, spin_a) and (m_b, spin_b).

    Returns (|m_a spin_a> x |m_b spin_b> -+ |m_b spin_b> x |m_a spin_a>)
    / sqrt(2), unit norm. Identical label pairs are rejected: for fermions
    the construction is Pauli-excluded, and in general the fixed prefactor
    no longer yields a unit-norm state.
    """
    if (m_a, spin_a) == (m_b, spin_b):
        if stat is Statistics.FERMION:
            raise DegenerateInputError(
                "identical mode and spin for both particles: Pauli-excluded"
            )
        raise DegenerateInputError(
            "identical mode and spin for both particles: pair construction needs "
            "distinct labels"
        )
    ref = tensor_state(plane_wave(m_a, spin_a, space), plane_wave(m_b, spin_b, space))
    sym = sector(ref, stat)
    return TwoParticleState(sym.space, sym.amplitudes, normalized=True)


def _wrap_wavenumber(mode: int, sites: int) -> float:
    """Wavenumber 2*pi*mode/L folded into (-pi, pi]."""
    k = 2.0 * np.pi * mode / sites
    return k - 2.0 * np.pi if k > np.pi + 1e-12 else k


def _min_signed_displacement(x_from: int, x_to: int, sites: int) -> int:
    """Signed site displacement folded into (-L/2, L/2]."""
    d = (x_to - x_from) % sites
    return d - sites if d > sites / 2 else d


def _reference_state(m_a: int, m_b: int, space: SpaceSpec) -> TwoParticleState:
    if space.spin_dim < 2:
        raise ValueError("scenarios need a spin-1/2 factor (spin_dim >= 2)")
    return tensor_state(
        plane_wave(m_a, SPIN_UP, space), plane_wave(m_b, SPIN_DOWN, space)
    )


def scenario_momentum_projection(
    space: SpaceSpec,
    m_a: int,
    m_b: int,
    stat: Statistics,
    tol: float = ZERO_TOL,
) -> ScenarioResult:
    """Project both slots onto their own momentum modes.

    With distinct modes the permuted event vanishes and the verdict is
    LocalOperation: the collapsed pair is the direct event alone, at
    probability 1/2, and the momenta now serve as particle labels. The
    relabeled spin state is read off in the momentum basis.
    """
    if m_a == m_b:
        raise DegenerateInputError(
            "momentum projection needs distinct modes to label the particles"
        )
    ref = _reference_state(m_a, m_b, space)
    measure = momentum_projector(m_a, m_b, space)
    verdict = classify(measure, ref, tol)
    pair = events(measure, ref)
    result = collapse(measure, ref, stat, tol)
    evidence = ebm_evidence(measure, ref, stat)
    report = schmidt(result.normalized)
    relabeled = relabel_distinguishable(
        momentum_representation(result.raw), (m_a, m_b), tol
    )
    return ScenarioResult(
        verdict=verdict,
        probability=result.probability,
        post_state=result.raw,
        post_state_normalized=result.normalized,
        report=report,
        evidence=evidence,
        event_pair=pair,
        relabeled=relabeled,
    )


def scenario_position_windows(
    space: SpaceSpec,
    m_a: int,
    m_b: int | None,
    x_a: int,
    x_b: int,
    width: int,
    stat: Statistics,
    tol: float = ZERO_TOL,
) -> ScenarioResult:
    """Project slot 1 onto a window at ``x_a`` and slot 2 onto one at ``x_b``.

    ``m_b`` defaults to the opposite momentum of ``m_a`` (lattice mode
    L - m_a). Disjoint windows yield EntanglingMeasurement; overlapping
    windows cannot distinguish the particles by position, so the verdict is
    reported as NonOrthogonalEvents and no phase check is attempted. The
    phase check also needs single-site windows, where the two collapsed
    amplitudes are single lattice points.
    """
    sites = space.extrinsic_dim
    if m_b is None:
        m_b = (sites - m_a) % sites
    ref = _reference_state(m_a, m_b, space)
    measure = SelectiveMeasure(
        window_projector(x_a, width, space), window_projector(x_b, width, space)
    )
    disjoint = not set(window_sites(x_a, width, sites)) & set(
        window_sites(x_b, width, sites)
    )
    if disjoint:
        verdict = classify(measure, ref, tol)
    else:
        # Overlapping windows leave the position labels non-exclusive, so the
        # local-operation criterion does not apply whatever the raw overlap is.
        verdict = Verdict(tag=VerdictTag.NON_ORTHOGONAL_EVENTS, tolerance_used=tol)
    pair = events(measure, ref)
    result = collapse(measure, ref, stat, tol)
    evidence = ebm_evidence(measure, ref, stat)
    report = schmidt(result.normalized)

    phase_check = None
    relabeled = None
    if width == 1:
        relabeled = relabel_distinguishable(result.raw, (x_a, x_b), tol)
        if disjoint:
            coeff = result.raw.matrix()
            direct_amp = coeff[
                mode_index(x_a, SPIN_UP, space), mode_index(x_b, SPIN_DOWN, space)
            ]
            swapped_amp = coeff[
                mode_index(x_a, SPIN_DOWN, space), mode_index(x_b, SPIN_UP, space)
            ]
            measured = complex(swapped_amp / direct_amp)
            dk = _wrap_wavenumber(m_b, sites) - _wrap_wavenumber(m_a, sites)
            dx = _min_signed_displacement(x_a, x_b, sites)
            predicted = complex(stat.sign * np.exp(-1j * dk * dx))
            phase_check = PhaseCheck(
                measured=measured,
                predicted=predicted,
                deviation=float(abs(measured - predicted)),
            )

    return ScenarioResult(
        verdict=verdict,
        probability=result.probability,
        post_state=result.raw,
        post_state_normalized=result.normalized,
        report=report,
        evidence=evidence,
        event_pair=pair,
        phase_check=phase_check,
        relabeled=relabeled,
    )


def relabel_distinguishable(
    post_state: TwoParticleState,
    labels: tuple[int, int],
    tol: float = ZERO_TOL,
) -> TwoParticleState:
    """Read the pair as two labeled particles and keep only their spins.

    ``labels`` gives the extrinsic value acting as the tag of each slot.
    The state must be supported entirely on slot-1 modes at the first label
    and slot-2 modes at the second; the corresponding spin-by-spin amplitude
    block is extracted and normalized into a state over a spin-only space.
    """
    space = post_state.space
    label_1, label_2 = labels
    for label in (label_1, label_2):
        if not 0 <= label < space.extrinsic_dim:
            raise IndexError(
                f"extrinsic label {label} out of range [0, {space.extrinsic_dim})"
            )
    blocks = post_state.matrix().reshape(
        space.extrinsic_dim, space.spin_dim, space.extrinsic_dim, space.spin_dim
    )
    if post_state.norm == 0.0:
        raise DegenerateInputError("cannot relabel a zero state")
    remainder = blocks.copy()
    remainder[label_1, :, label_2, :] = 0.0
    if np.linalg.norm(remainder) >= tol * post_state.norm:
        raise ValueError(
            f"state has support outside extrinsic labels {labels}; "
            "relabeling by those values is not faithful"
        )
    spin_space = SpaceSpec(extrinsic_dim=1, spin_dim=space.spin_dim)
    block = blocks[label_1, :, label_2, :]
    return TwoParticleState(spin_space, block.reshape(-1)).normalize()
