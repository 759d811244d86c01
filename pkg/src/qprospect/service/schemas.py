"""Pydantic request/response models for the HTTP service.

Complex numbers travel as two-element [re, im] lists.  Structural
validation happens here; semantic validation (lengths against the mind
space, unknown modes, zero vectors) happens in the core parser, which
reports the offending field path.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

ComplexPair = list[float]  # [re, im]


class ActionIn(BaseModel):
    name: str
    modes: list[str] = Field(min_length=1)


class StrategicStateIn(BaseModel):
    amplitudes: list[ComplexPair]
    normalize: bool = False


class ProspectIn(BaseModel):
    name: str
    amplitudes: Optional[list[ComplexPair]] = None
    support: Optional[dict[str, list[str]]] = None
    phases: Optional[list[ComplexPair]] = None


class MachineIn(BaseModel):
    shots: int = Field(default=0, ge=0)
    seed: int = 0


class ProblemRequest(BaseModel):
    actions: list[ActionIn] = Field(min_length=1)
    strategic_state: StrategicStateIn
    prospects: list[ProspectIn] = Field(min_length=1)
    machine: MachineIn = MachineIn()


class SampleRequest(ProblemRequest):
    # overrides applied on top of the document's machine block
    shots_override: Optional[int] = Field(default=None, ge=1)
    seed_override: Optional[int] = None


class ValidateResponse(BaseModel):
    valid: bool
    actions: int
    dims: list[int]
    total_dim: int
    prospects: int


class BasisEntry(BaseModel):
    flat: int
    multi_index: list[int]
    modes: list[str]


class EnumerateResponse(BaseModel):
    dims: list[int]
    basis: list[BasisEntry]


class InterferenceTerm(BaseModel):
    m: int
    n: int
    value: float


class ProspectRow(BaseModel):
    index: int
    name: str
    raw_p: float
    raw_p0: float
    raw_q: float
    p: float
    p0: float
    q: float
    interference_terms: Optional[list[InterferenceTerm]] = None


class DecisionResponse(BaseModel):
    prospects: list[ProspectRow]
    ranking: list[int]
    relations: str
    optimal: int
    optimal_name: str
    ties: list[int]


class OutputState(BaseModel):
    name: str
    amplitudes: list[ComplexPair]


class SampleResponse(DecisionResponse):
    shots: int
    seed: int
    chosen: int
    output_state: OutputState
    counts: Optional[list[int]] = None
    frequencies: Optional[list[float]] = None
    empirical_chosen: Optional[int] = None


class ErrorResponse(BaseModel):
    error: str
    kind: str  # "validation" | "degenerate" | "internal"
    path: Optional[str] = None
