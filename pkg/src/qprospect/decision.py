"""Prospect probabilities, utility/attraction decomposition, and ranking.

For a strategic state with amplitudes c and a prospect with amplitudes a:

    raw_p  = |sum_n conj(a_n) c_n|^2          (operator average <s|P|s>)
    raw_p0 = sum_n |c_n|^2 |a_n|^2            (diagonal, classical part)
    raw_q  = raw_p - raw_p0                   (off-diagonal interference)

raw_q equals sum_{m != n} conj(c_m) c_n a_m conj(a_n) as an algebraic
identity.  Over a lattice, p and p0 are normalized by their sums, which
forces the alternation property sum_j q_j = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateLatticeError, StructureError, ValidationError
from .hilbert import EXACT_TOL, StrategicState
from .prospects import ProspectState

# Two probabilities closer than this are indifferent (double-precision floor).
INDIFFERENCE_TOL = 1e-12


@dataclass(frozen=True)
class ProspectLattice:
    prospects: tuple[ProspectState, ...]

    def __post_init__(self):
        if len(self.prospects) < 1:
            raise ValidationError("lattice must contain at least one prospect")
        spaces = {p.space for p in self.prospects}
        if len(spaces) != 1:
            raise StructureError("lattice prospects span different mind spaces")
        names = [p.name for p in self.prospects]
        if len(set(names)) != len(names):
            raise ValidationError("prospect names must be unique within a lattice")

    def __len__(self) -> int:
        return len(self.prospects)

    @property
    def space(self):
        return self.prospects[0].space


def _check_space(s: StrategicState, pi: ProspectState):
    if s.space != pi.space:
        raise StructureError("strategic state and prospect span different spaces")


def raw_probability(s: StrategicState, pi: ProspectState) -> float:
    """<s|P(pi)|s> = |<pi|s>|^2, before lattice normalization."""
    _check_space(s, pi)
    z = np.vdot(pi.amp, s.amp)
    # re^2 + im^2 rather than abs()**2: keeps the one-hot case bit-identical
    # to the diagonal formula, so elementary prospects get exactly zero q
    return float(z.real * z.real + z.imag * z.imag)


def utility_factor_raw(s: StrategicState, pi: ProspectState) -> float:
    """Diagonal (classical expected-utility) part of the probability."""
    _check_space(s, pi)
    c, a = s.amp, pi.amp
    c2 = c.real * c.real + c.imag * c.imag
    a2 = a.real * a.real + a.imag * a.imag
    return float(np.sum(c2 * a2))


def attraction_factor_raw(s: StrategicState, pi: ProspectState) -> float:
    """Off-diagonal interference part; real and possibly negative."""
    return raw_probability(s, pi) - utility_factor_raw(s, pi)


def interference_terms(
    s: StrategicState, pi: ProspectState
) -> list[tuple[int, int, float]]:
    """Per-pair breakdown of the attraction factor.

    Returns (m, n, contribution) for each unordered flat-index pair m < n
    with a nonzero amplitude product; contribution is
    2 Re[conj(c_m) c_n a_m conj(a_n)], so the values sum to raw_q.
    """
    _check_space(s, pi)
    # only indices where both c and a are nonzero can contribute
    nz = np.nonzero((s.amp != 0) & (pi.amp != 0))[0]
    c, a = s.amp, pi.amp
    terms = []
    for i, m in enumerate(nz):
        for n in nz[i + 1 :]:
            val = 2.0 * (np.conj(c[m]) * c[n] * a[m] * np.conj(a[n])).real
            terms.append((int(m), int(n), float(val)))
    return terms


@dataclass(frozen=True)
class DecisionRecord:
    """Raw and normalized quantities for every prospect of one lattice."""

    names: tuple[str, ...]
    raw_p: tuple[float, ...]
    raw_p0: tuple[float, ...]
    raw_q: tuple[float, ...]
    p: tuple[float, ...]
    p0: tuple[float, ...]
    q: tuple[float, ...]
    ranking: tuple[int, ...]  # prospect indices, descending p
    optimal: int
    ties: frozenset[int]  # indices within INDIFFERENCE_TOL of the maximum


def decompose(s: StrategicState, lattice: ProspectLattice) -> DecisionRecord:
    """Full p/p0/q table, ranking, and optimal prospect for one lattice.

    Raw values are divided by their lattice sums; this preserves the
    ordering induced by raw_p and makes p and p0 sum to one, so the
    attraction factors q = p - p0 alternate to zero.  Ties break toward
    the lowest lattice index.
    """
    raw_p = [raw_probability(s, pi) for pi in lattice.prospects]
    raw_p0 = [utility_factor_raw(s, pi) for pi in lattice.prospects]
    raw_q = [rp - rp0 for rp, rp0 in zip(raw_p, raw_p0)]

    sum_p = sum(raw_p)
    sum_p0 = sum(raw_p0)
    if sum_p <= 0.0:
        raise DegenerateLatticeError(
            "strategic state is orthogonal to every prospect in the lattice"
        )
    # sum_p0 >= sum of |<pi|s>|^2 projections can only vanish with sum_p
    p = [rp / sum_p for rp in raw_p]
    p0 = [rp0 / sum_p0 for rp0 in raw_p0]
    q = [pj - p0j for pj, p0j in zip(p, p0)]

    ranking = sorted(range(len(p)), key=lambda j: (-p[j], j))
    optimal = ranking[0]
    best = p[optimal]
    ties = frozenset(j for j, pj in enumerate(p) if best - pj <= INDIFFERENCE_TOL)

    return DecisionRecord(
        names=tuple(pi.name for pi in lattice.prospects),
        raw_p=tuple(raw_p),
        raw_p0=tuple(raw_p0),
        raw_q=tuple(raw_q),
        p=tuple(p),
        p0=tuple(p0),
        q=tuple(q),
        ranking=tuple(ranking),
        optimal=optimal,
        ties=ties,
    )


def order_prospects(record: DecisionRecord) -> list[tuple[int, str, int]]:
    """Adjacent relations along the ranking: (index, '>' or '=', next index)."""
    rels = []
    for a, b in zip(record.ranking, record.ranking[1:]):
        op = ">" if record.p[a] - record.p[b] > INDIFFERENCE_TOL else "="
        rels.append((a, op, b))
    return rels
