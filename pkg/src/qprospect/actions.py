"""Actions, modes, elementary prospects, and the classical event algebra.

An action ring declares N actions, each with M_i mutually incompatible
modes.  An elementary prospect picks exactly one mode per action and is
written as a multi-index (nu_1, ..., nu_N) with 1-based components.  The
flat basis index used by every other module is fixed here: lexicographic
order with the first action varying slowest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Mapping, Sequence

from .errors import StructureError, ValidationError

# A multi-index is a plain tuple of 1-based mode indices, one per action.
MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class Action:
    name: str
    modes: tuple[str, ...]

    def __post_init__(self):
        if not self.name:
            raise ValidationError("action name must be nonempty")
        if len(self.modes) < 1:
            raise ValidationError(f"action {self.name!r} must have at least one mode")
        if len(set(self.modes)) != len(self.modes):
            raise ValidationError(f"action {self.name!r} has duplicate mode names")


@dataclass(frozen=True)
class ActionRing:
    actions: tuple[Action, ...]

    def __post_init__(self):
        if len(self.actions) < 1:
            raise ValidationError("ring must declare at least one action")
        names = [a.name for a in self.actions]
        if len(set(names)) != len(names):
            raise ValidationError("action names must be unique")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(a.modes) for a in self.actions)

    @property
    def total_dim(self) -> int:
        return prod(self.dims)

    def action_index(self, name: str) -> int:
        for i, a in enumerate(self.actions):
            if a.name == name:
                return i
        raise ValidationError(f"unknown action {name!r}")

    def mode_index(self, action_pos: int, mode: str | int) -> int:
        """Resolve a mode name or 1-based index to its 1-based index."""
        act = self.actions[action_pos]
        if isinstance(mode, str):
            try:
                return act.modes.index(mode) + 1
            except ValueError:
                raise ValidationError(
                    f"unknown mode {mode!r} for action {act.name!r}"
                ) from None
        if not 1 <= mode <= len(act.modes):
            raise ValidationError(
                f"mode index {mode} out of range 1..{len(act.modes)} "
                f"for action {act.name!r}"
            )
        return int(mode)

    def check_multi_index(self, nu: Sequence[int]) -> MultiIndex:
        dims = self.dims
        if len(nu) != len(dims):
            raise ValidationError(
                f"multi-index length {len(nu)} != number of actions {len(dims)}"
            )
        for i, (v, m) in enumerate(zip(nu, dims)):
            if not 1 <= v <= m:
                raise ValidationError(
                    f"component {i} of multi-index {tuple(nu)} out of range 1..{m}"
                )
        return tuple(int(v) for v in nu)

    def flat_index(self, nu: Sequence[int]) -> int:
        """0-based position of a multi-index in the declared basis order."""
        nu = self.check_multi_index(nu)
        idx = 0
        for v, m in zip(nu, self.dims):
            idx = idx * m + (v - 1)
        return idx


def ring_from_dims(dims: Sequence[int]) -> ActionRing:
    """Anonymous ring with the given mode counts; handy in tests."""
    return ActionRing(
        tuple(
            Action(f"a{i + 1}", tuple(f"m{j + 1}" for j in range(m)))
            for i, m in enumerate(dims)
        )
    )


def enumerate_elementary(ring: ActionRing) -> list[MultiIndex]:
    """All prod(M_i) multi-indices, first action slowest.

    Position k in the returned list is the flat basis index k.
    """
    return [
        tuple(v + 1 for v in nu)
        for nu in itertools.product(*(range(m) for m in ring.dims))
    ]


@dataclass(frozen=True)
class Event:
    """A set of elementary-prospect multi-indices over one ring.

    The empty set is the impossible action; the full grid is the identity.
    """

    ring: ActionRing
    members: frozenset[MultiIndex] = field(default_factory=frozenset)

    def __post_init__(self):
        checked = frozenset(self.ring.check_multi_index(nu) for nu in self.members)
        object.__setattr__(self, "members", checked)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_impossible(self) -> bool:
        return not self.members

    @property
    def is_identity(self) -> bool:
        return len(self.members) == self.ring.total_dim


def impossible_event(ring: ActionRing) -> Event:
    return Event(ring, frozenset())


def identity_event(ring: ActionRing) -> Event:
    return Event(ring, frozenset(enumerate_elementary(ring)))


def _require_same_ring(a: Event, b: Event):
    if a.ring != b.ring:
        raise StructureError("events belong to different action rings")


def event_conjunction(a: Event, b: Event) -> Event:
    """Joint action; the impossible event when a and b are disjoint."""
    _require_same_ring(a, b)
    return Event(a.ring, a.members & b.members)


def event_union(a: Event, b: Event) -> Event:
    _require_same_ring(a, b)
    return Event(a.ring, a.members | b.members)


def prospect_support(
    ring: ActionRing, subsets: Mapping[str, Iterable[str | int]]
) -> Event:
    """Event spanned by choosing any listed mode of each action.

    `subsets` maps action name to a nonempty collection of mode names or
    1-based mode indices; actions omitted from the mapping default to all
    their modes.
    """
    per_action: list[list[int]] = []
    seen = set()
    for pos, act in enumerate(ring.actions):
        if act.name in subsets:
            seen.add(act.name)
            chosen = sorted({ring.mode_index(pos, m) for m in subsets[act.name]})
            if not chosen:
                raise ValidationError(f"empty mode subset for action {act.name!r}")
            per_action.append(chosen)
        else:
            per_action.append(list(range(1, len(act.modes) + 1)))
    unknown = set(subsets) - seen
    if unknown:
        raise ValidationError(f"unknown action(s) in support: {sorted(unknown)}")
    return Event(ring, frozenset(itertools.product(*per_action)))
