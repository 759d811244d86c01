"""End-to-end pipeline: load prospects, scatter, analyze, emit the winner.

The strategic state is held fixed for the whole run.  Scattering is
Born-rule sampling from the normalized probability distribution; with
shots = 0 the pipeline is fully deterministic and adds nothing beyond
`decision.decompose`.  The authoritative choice always uses the exact
probabilities; the empirical (sampled) winner is reported alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .decision import DecisionRecord, ProspectLattice, decompose
from .errors import ValidationError
from .hilbert import StrategicState
from .prospects import ProspectState

DISTRIBUTION_TOL = 1e-9


@dataclass(frozen=True)
class MachineConfig:
    shots: int = 0  # 0 = exact probabilities only
    seed: int = 0
    report_raw: bool = True

    def __post_init__(self):
        if self.shots < 0:
            raise ValidationError("shots must be nonnegative")


@dataclass(frozen=True)
class MachineRun:
    config: MachineConfig
    record: DecisionRecord
    counts: Optional[tuple[int, ...]]  # None when shots = 0
    frequencies: Optional[tuple[float, ...]]
    chosen: int  # argmax of exact p (authoritative)
    empirical_chosen: Optional[int]  # argmax of sampled frequencies
    output_state: ProspectState  # state of the exact-mode winner


def sample_counts(p: Sequence[float], shots: int, seed: int) -> tuple[int, ...]:
    """One multinomial draw of `shots` trials from distribution p."""
    p = np.asarray(p, dtype=float)
    if shots < 1:
        raise ValidationError("shots must be >= 1 for sampling")
    if np.any(p < 0) or abs(p.sum() - 1.0) > DISTRIBUTION_TOL:
        raise ValidationError("p is not a probability distribution")
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, p / p.sum())
    return tuple(int(c) for c in counts)


def run_pipeline(
    s: StrategicState, lattice: ProspectLattice, cfg: MachineConfig
) -> MachineRun:
    record = decompose(s, lattice)
    counts = frequencies = empirical = None
    if cfg.shots > 0:
        counts = sample_counts(record.p, cfg.shots, cfg.seed)
        frequencies = tuple(c / cfg.shots for c in counts)
        # same tie-breaking as the exact analyzer: lowest index wins
        empirical = max(range(len(counts)), key=lambda j: (counts[j], -j))
    chosen = record.optimal
    return MachineRun(
        config=cfg,
        record=record,
        counts=counts,
        frequencies=frequencies,
        chosen=chosen,
        empirical_chosen=empirical,
        output_state=lattice.prospects[chosen],
    )
