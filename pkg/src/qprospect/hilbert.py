"""Mode spaces, the tensor-product mind space, and state vectors.

Amplitudes are dense complex128 arrays over the flat basis fixed by
`actions.enumerate_elementary` (first action slowest).  States are
immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import prod
from typing import Sequence

import numpy as np

from .actions import ActionRing, MultiIndex
from .errors import StructureError, ValidationError

# Exact-math noise floor for internally produced quantities.
EXACT_TOL = 1e-12
# Slack allowed on user-supplied "already normalized" amplitude vectors.
INPUT_NORM_TOL = 1e-9


@dataclass(frozen=True)
class MindSpace:
    """Tensor product of the per-action mode spaces; dimension prod(M_i)."""

    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) < 1 or any(m < 1 for m in self.dims):
            raise ValidationError("dims must be a nonempty list of positive integers")
        object.__setattr__(self, "dims", tuple(int(m) for m in self.dims))

    @classmethod
    def of_ring(cls, ring: ActionRing) -> "MindSpace":
        return cls(ring.dims)

    @property
    def total_dim(self) -> int:
        return prod(self.dims)

    def flat_index(self, nu: Sequence[int]) -> int:
        if len(nu) != len(self.dims):
            raise ValidationError(
                f"multi-index length {len(nu)} != number of actions {len(self.dims)}"
            )
        idx = 0
        for i, (v, m) in enumerate(zip(nu, self.dims)):
            if not 1 <= v <= m:
                raise ValidationError(
                    f"component {i} of multi-index {tuple(nu)} out of range 1..{m}"
                )
            idx = idx * m + (v - 1)
        return idx

    def multi_index(self, flat: int) -> MultiIndex:
        if not 0 <= flat < self.total_dim:
            raise ValidationError(f"flat index {flat} out of range")
        out = []
        for m in reversed(self.dims):
            out.append(flat % m + 1)
            flat //= m
        return tuple(reversed(out))


def _as_amplitudes(space: MindSpace, values) -> np.ndarray:
    amp = np.asarray(values, dtype=np.complex128)
    if amp.shape != (space.total_dim,):
        raise ValidationError(
            f"amplitude vector has shape {amp.shape}, expected ({space.total_dim},)"
        )
    amp = amp.copy()
    amp.setflags(write=False)
    return amp


@dataclass(frozen=True)
class StateVector:
    space: MindSpace
    amp: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amp", _as_amplitudes(self.space, self.amp))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))


@dataclass(frozen=True)
class StrategicState(StateVector):
    """Unit-norm reference state of the decision maker."""

    def __post_init__(self):
        super().__post_init__()
        if abs(self.norm - 1.0) > EXACT_TOL:
            raise ValidationError(
                f"strategic state norm {self.norm!r} differs from 1 by more "
                f"than {EXACT_TOL}"
            )


def basic_state(space: MindSpace, n: Sequence[int]) -> StateVector:
    """One-hot state of the elementary prospect with multi-index n."""
    amp = np.zeros(space.total_dim, dtype=np.complex128)
    amp[space.flat_index(n)] = 1.0
    return StateVector(space, amp)


def tensor(space: MindSpace, mode_vectors: Sequence[Sequence[complex]]) -> StateVector:
    """Kronecker product of one mode-space vector per action."""
    if len(mode_vectors) != len(space.dims):
        raise ValidationError(
            f"expected {len(space.dims)} factors, got {len(mode_vectors)}"
        )
    factors = []
    for i, (vec, m) in enumerate(zip(mode_vectors, space.dims)):
        arr = np.asarray(vec, dtype=np.complex128)
        if arr.shape != (m,):
            raise ValidationError(
                f"factor {i} has shape {arr.shape}, expected ({m},)"
            )
        factors.append(arr)
    return StateVector(space, reduce(np.kron, factors))


def inner(a: StateVector, b: StateVector) -> complex:
    """Hermitian scalar product, conjugate-linear in the first argument."""
    if a.space != b.space:
        raise StructureError("states belong to different mind spaces")
    return complex(np.vdot(a.amp, b.amp))


def make_strategic(space: MindSpace, c, normalize: bool = False) -> StrategicState:
    """Wrap amplitudes as a strategic state, rescaling to unit norm if asked."""
    amp = np.asarray(c, dtype=np.complex128)
    if amp.shape != (space.total_dim,):
        raise ValidationError(
            f"amplitude vector has shape {amp.shape}, expected ({space.total_dim},)"
        )
    nrm = float(np.linalg.norm(amp))
    if nrm == 0.0:
        raise ValidationError("strategic state cannot be the zero vector")
    if normalize:
        amp = amp / nrm
    elif abs(nrm - 1.0) > INPUT_NORM_TOL:
        raise ValidationError(
            f"amplitudes have norm {nrm!r}; pass normalize=True or supply a "
            f"unit vector (tolerance {INPUT_NORM_TOL})"
        )
    else:
        # absorb sub-tolerance input noise so downstream identities hold at 1e-12
        amp = amp / nrm
    return StrategicState(space, amp)


def random_state(space: MindSpace, seed: int) -> StrategicState:
    """Haar-like random strategic state from numpy's PCG64 generator.

    Real and imaginary parts are independent standard normals; the vector
    is then normalized.  The same (dims, seed) pair reproduces the state
    bit for bit.
    """
    rng = np.random.default_rng(seed)
    amp = rng.standard_normal(space.total_dim) + 1j * rng.standard_normal(
        space.total_dim
    )
    return make_strategic(space, amp, normalize=True)
