"""Problem-document schema: JSON in, validated engine objects out.

Document layout (complex numbers are two-element [re, im] lists):

    {
      "actions": [{"name": "invest", "modes": ["stocks", "bonds"]}, ...],
      "strategic_state": {"amplitudes": [[re, im], ...], "normalize": true},
      "prospects": [
        {"name": "p1", "amplitudes": [[re, im], ...]},
        {"name": "p2", "support": {"invest": ["stocks"]},
         "phases": [[re, im], ...]}          # optional, members in flat order
      ],
      "machine": {"shots": 0, "seed": 0}     # optional block
    }

Every semantic failure names the path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .actions import Action, ActionRing, prospect_support
from .decision import ProspectLattice
from .errors import (
    ProblemSemanticError,
    ProblemSyntaxError,
    ValidationError,
)
from .hilbert import MindSpace, StrategicState, make_strategic
from .machine import MachineConfig
from .prospects import (
    ProspectState,
    prospect_from_amplitudes,
    prospect_from_support_uniform,
)


@dataclass(frozen=True)
class ProblemDocument:
    ring: ActionRing
    space: MindSpace
    strategic: StrategicState
    lattice: ProspectLattice
    config: MachineConfig


def _fail(path: str, msg: str):
    raise ProblemSemanticError(msg, path)


def _get(obj, key, path, typ, default=_fail):
    if not isinstance(obj, dict):
        _fail(path, f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        if default is not _fail:
            return default
        _fail(f"{path}.{key}", "missing required field")
    val = obj[key]
    if typ is not None and not isinstance(val, typ):
        _fail(f"{path}.{key}", f"expected {typ.__name__}, got {type(val).__name__}")
    return val


def _complex_list(raw, path) -> list[complex]:
    if not isinstance(raw, list):
        _fail(path, "expected a list of [re, im] pairs")
    out = []
    for k, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, (int, float)) for x in item)
        ):
            _fail(f"{path}[{k}]", "expected a two-element [re, im] number pair")
        out.append(complex(item[0], item[1]))
    return out


def _parse_ring(raw, path) -> ActionRing:
    if not isinstance(raw, list) or not raw:
        _fail(path, "expected a nonempty list of actions")
    actions = []
    for i, item in enumerate(raw):
        name = _get(item, "name", f"{path}[{i}]", str)
        modes = _get(item, "modes", f"{path}[{i}]", list)
        if not modes or not all(isinstance(m, str) for m in modes):
            _fail(f"{path}[{i}].modes", "expected a nonempty list of mode names")
        try:
            actions.append(Action(name, tuple(modes)))
        except ValidationError as e:
            _fail(f"{path}[{i}]", str(e))
    try:
        return ActionRing(tuple(actions))
    except ValidationError as e:
        _fail(path, str(e))


def _parse_strategic(raw, path, space: MindSpace) -> StrategicState:
    amps = _complex_list(_get(raw, "amplitudes", path, list), f"{path}.amplitudes")
    if len(amps) != space.total_dim:
        _fail(
            f"{path}.amplitudes",
            f"expected {space.total_dim} amplitudes, got {len(amps)}",
        )
    normalize = _get(raw, "normalize", path, bool, default=False)
    try:
        return make_strategic(space, amps, normalize=normalize)
    except ValidationError as e:
        _fail(f"{path}.amplitudes", str(e))


def _parse_prospect(raw, path, ring: ActionRing, space: MindSpace) -> ProspectState:
    name = _get(raw, "name", path, str)
    has_amp = isinstance(raw, dict) and "amplitudes" in raw
    has_sup = isinstance(raw, dict) and "support" in raw
    if has_amp == has_sup:
        _fail(path, "give exactly one of 'amplitudes' or 'support'")
    try:
        if has_amp:
            amps = _complex_list(raw["amplitudes"], f"{path}.amplitudes")
            if len(amps) != space.total_dim:
                _fail(
                    f"{path}.amplitudes",
                    f"expected {space.total_dim} amplitudes, got {len(amps)}",
                )
            return prospect_from_amplitudes(space, name, amps)
        support = raw["support"]
        if not isinstance(support, dict):
            _fail(f"{path}.support", "expected a mapping of action name to modes")
        event = prospect_support(ring, support)
        phases = None
        if "phases" in raw:
            phases = _complex_list(raw["phases"], f"{path}.phases")
        return prospect_from_support_uniform(space, name, event, phases)
    except ValidationError as e:
        if isinstance(e, ProblemSemanticError):
            raise
        _fail(path, str(e))


def parse_problem(text: str) -> ProblemDocument:
    """Parse and fully validate a problem document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemSyntaxError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
            line=e.lineno,
            column=e.colno,
        ) from None
    if not isinstance(doc, dict):
        _fail("$", "document root must be an object")

    ring = _parse_ring(_get(doc, "actions", "$", list), "$.actions")
    space = MindSpace.of_ring(ring)
    strategic = _parse_strategic(
        _get(doc, "strategic_state", "$", dict), "$.strategic_state", space
    )

    raw_prospects = _get(doc, "prospects", "$", list)
    if not raw_prospects:
        _fail("$.prospects", "expected at least one prospect")
    prospects = [
        _parse_prospect(item, f"$.prospects[{i}]", ring, space)
        for i, item in enumerate(raw_prospects)
    ]
    try:
        lattice = ProspectLattice(tuple(prospects))
    except ValidationError as e:
        _fail("$.prospects", str(e))

    machine = _get(doc, "machine", "$", dict, default={})
    shots = _get(machine, "shots", "$.machine", int, default=0)
    seed = _get(machine, "seed", "$.machine", int, default=0)
    if isinstance(shots, bool) or shots < 0:
        _fail("$.machine.shots", "expected a nonnegative integer")
    config = MachineConfig(shots=shots, seed=seed)

    return ProblemDocument(ring, space, strategic, lattice, config)
