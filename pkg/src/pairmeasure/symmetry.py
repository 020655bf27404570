"""Exchange symmetry for the particle pair.

The permutation operator swaps the two tensor slots. Applying
(1 -+ P)/sqrt(2) to a distinguishable reference state builds its fermionic
(antisymmetric) or bosonic (symmetric) sector; with that fixed 1/sqrt(2)
prefactor the result has unit norm exactly when the reference state is
orthogonal to its own permutation, and the identity

    state = (fermion sector + boson sector)/sqrt(2)

holds for every state regardless.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .hilbert import TwoParticleState

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


class Statistics(Enum):
    """Exchange statistics of the identical pair."""

    FERMION = "fermion"
    BOSON = "boson"

    @property
    def sign(self) -> float:
        """Sign of the permuted term in the sector construction."""
        return -1.0 if self is Statistics.FERMION else 1.0


def permute(state: TwoParticleState) -> TwoParticleState:
    """Swap the two tensor slots: amplitude(i, j) -> amplitude(j, i)."""
    swapped = state.matrix().T.reshape(-1)
    return TwoParticleState(state.space, swapped, normalized=state.normalized)


def permutation_overlap(state: TwoParticleState) -> complex:
    """Overlap of a state with its own permutation."""
    return complex(np.vdot(state.amplitudes, state.matrix().T.reshape(-1)))


def sector(state: TwoParticleState, stat: Statistics) -> TwoParticleState:
    """Project into the fermion or boson sector: (state -+ permuted)/sqrt(2).

    The 1/sqrt(2) prefactor is fixed, never adjusted to renormalize; a zero
    result (antisymmetrizing a permutation-invariant state, i.e. Pauli
    exclusion of a doubly occupied mode) comes back as a legitimate zero
    vector.
    """
    coeff = state.matrix()
    amps = _INV_SQRT2 * (coeff + stat.sign * coeff.T).reshape(-1)
    return TwoParticleState(state.space, amps)


def orthogonal_sum_check(state: TwoParticleState) -> float:
    """Residual of rebuilding a state from its two sectors.

    Returns ||state - (fermion sector + boson sector)/sqrt(2)||, which is an
    algebraic zero for every input; anything above 1e-12 indicates a broken
    layout convention somewhere upstream.
    """
    rebuilt = _INV_SQRT2 * (
        sector(state, Statistics.FERMION).amplitudes
        + sector(state, Statistics.BOSON).amplitudes
    )
    return float(np.linalg.norm(state.amplitudes - rebuilt))
