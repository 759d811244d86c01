"""Service-layer operations shared by the HTTP endpoints and the CLI.

Each function takes a problem document (as text or a parsed
ProblemDocument) and returns a JSON-ready dict with every number at full
precision.  Prospect indices in payloads are 1-based, matching the
human-readable output.
"""

from __future__ import annotations

import json
from typing import Optional

from ..actions import enumerate_elementary
from ..decision import DecisionRecord, decompose, interference_terms, order_prospects
from ..machine import MachineConfig, run_pipeline
from ..problem import ProblemDocument, parse_problem


def load(text: str) -> ProblemDocument:
    return parse_problem(text)


def validate_payload(doc: ProblemDocument) -> dict:
    return {
        "valid": True,
        "actions": len(doc.ring.actions),
        "dims": list(doc.space.dims),
        "total_dim": doc.space.total_dim,
        "prospects": len(doc.lattice),
    }


def enumerate_payload(doc: ProblemDocument) -> dict:
    basis = []
    for flat, nu in enumerate(enumerate_elementary(doc.ring)):
        modes = [
            act.modes[v - 1] for act, v in zip(doc.ring.actions, nu)
        ]
        basis.append({"flat": flat, "multi_index": list(nu), "modes": modes})
    return {"dims": list(doc.space.dims), "basis": basis}


def _record_payload(record: DecisionRecord) -> dict:
    relations = " ".join(
        [f"{record.ranking[0] + 1}"]
        + [f"{op} {b + 1}" for _, op, b in order_prospects(record)]
    )
    return {
        "prospects": [
            {
                "index": j + 1,
                "name": record.names[j],
                "raw_p": record.raw_p[j],
                "raw_p0": record.raw_p0[j],
                "raw_q": record.raw_q[j],
                "p": record.p[j],
                "p0": record.p0[j],
                "q": record.q[j],
            }
            for j in range(len(record.names))
        ],
        "ranking": [j + 1 for j in record.ranking],
        "relations": relations,
        "optimal": record.optimal + 1,
        "optimal_name": record.names[record.optimal],
        "ties": sorted(j + 1 for j in record.ties),
    }


def solve_payload(doc: ProblemDocument) -> dict:
    return _record_payload(decompose(doc.strategic, doc.lattice))


def sample_payload(
    doc: ProblemDocument,
    shots: Optional[int] = None,
    seed: Optional[int] = None,
) -> dict:
    cfg = doc.config
    if shots is not None or seed is not None:
        cfg = MachineConfig(
            shots=cfg.shots if shots is None else shots,
            seed=cfg.seed if seed is None else seed,
            report_raw=cfg.report_raw,
        )
    run = run_pipeline(doc.strategic, doc.lattice, cfg)
    out = _record_payload(run.record)
    out["shots"] = cfg.shots
    out["seed"] = cfg.seed
    out["chosen"] = run.chosen + 1
    out["output_state"] = {
        "name": run.output_state.name,
        "amplitudes": [[z.real, z.imag] for z in run.output_state.amp],
    }
    if run.counts is not None:
        out["counts"] = list(run.counts)
        out["frequencies"] = list(run.frequencies)
        out["empirical_chosen"] = run.empirical_chosen + 1
    return out


def explain_payload(doc: ProblemDocument) -> dict:
    out = _record_payload(decompose(doc.strategic, doc.lattice))
    for entry, pi in zip(out["prospects"], doc.lattice.prospects):
        entry["interference_terms"] = [
            {"m": m, "n": n, "value": v}
            for m, n, v in interference_terms(doc.strategic, pi)
        ]
    return out


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2)
