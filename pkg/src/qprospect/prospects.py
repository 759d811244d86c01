"""Prospect states and their rank-1 operators.

A prospect state carries raw amplitudes a_n over the basic states; it is
deliberately NOT normalized, so its operator |pi><pi| squares to
<pi|pi> * |pi><pi| rather than to itself.  Dense operator matrices are
materialized only on demand (tests, explain output); production formulas
stay at the amplitude level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .actions import Event
from .errors import ValidationError
from .hilbert import EXACT_TOL, MindSpace, _as_amplitudes


@dataclass(frozen=True)
class ProspectState:
    name: str
    space: MindSpace
    amp: np.ndarray
    support: Optional[Event] = None

    def __post_init__(self):
        object.__setattr__(self, "amp", _as_amplitudes(self.space, self.amp))
        if not np.any(self.amp):
            raise ValidationError(f"prospect {self.name!r} has all-zero amplitudes")
        if self.support is not None:
            inside = np.zeros(self.space.total_dim, dtype=bool)
            for nu in self.support.members:
                inside[self.space.flat_index(nu)] = True
            bad = np.nonzero(~inside & (self.amp != 0))[0]
            if bad.size:
                raise ValidationError(
                    f"prospect {self.name!r} has nonzero amplitude at flat index "
                    f"{int(bad[0])}, outside its declared support"
                )

    @property
    def norm_sq(self) -> float:
        """<pi|pi>; equals 1 exactly when the operator is a projector."""
        return float(np.vdot(self.amp, self.amp).real)


def prospect_from_amplitudes(
    space: MindSpace, name: str, amp, support: Optional[Event] = None
) -> ProspectState:
    """Prospect with verbatim amplitudes (no normalization)."""
    return ProspectState(name, space, np.asarray(amp, dtype=np.complex128), support)


def prospect_from_support_uniform(
    space: MindSpace,
    name: str,
    event: Event,
    phases: Optional[Sequence[complex]] = None,
) -> ProspectState:
    """Equal-weight superposition 1/sqrt(|event|) over the event's members.

    `phases`, when given, supplies one unit complex factor per member in
    the members' flat-index order.
    """
    if event.is_impossible:
        raise ValidationError(f"prospect {name!r} built from the impossible event")
    flats = sorted(space.flat_index(nu) for nu in event.members)
    weight = 1.0 / np.sqrt(len(flats))
    if phases is None:
        phases = [1.0] * len(flats)
    if len(phases) != len(flats):
        raise ValidationError(
            f"got {len(phases)} phases for an event of {len(flats)} members"
        )
    amp = np.zeros(space.total_dim, dtype=np.complex128)
    for flat, ph in zip(flats, phases):
        amp[flat] = weight * complex(ph)
    return ProspectState(name, space, amp, event)


def operator_matrix(pi: ProspectState) -> np.ndarray:
    """Dense rank-1 operator |pi><pi|: entry (m, n) = a_m * conj(a_n)."""
    return np.outer(pi.amp, np.conj(pi.amp))


def is_projector(pi: ProspectState, tol: float = EXACT_TOL) -> bool:
    """True iff the prospect operator is idempotent, i.e. <pi|pi> = 1."""
    return abs(pi.norm_sq - 1.0) <= tol
