"""FastAPI service exposing the decision engine.

Endpoints mirror the CLI subcommands; the CLI is a thin client over the
same core functions.  Validation failures map to 422, a lattice the
strategic state cannot see to 409.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import (
    DegenerateLatticeError,
    ProblemSemanticError,
    QProspectError,
    ValidationError,
)
from . import core
from .schemas import (
    DecisionResponse,
    EnumerateResponse,
    ProblemRequest,
    SampleRequest,
    SampleResponse,
    ValidateResponse,
)


def _load(req: ProblemRequest):
    # funnel through the text parser so semantic errors carry field paths
    return core.load(json.dumps(req.model_dump(exclude_none=True)))


def create_app() -> FastAPI:
    app = FastAPI(title="qprospect", version="0.1.0")

    @app.exception_handler(QProspectError)
    async def engine_error(request: Request, exc: QProspectError):
        if isinstance(exc, DegenerateLatticeError):
            status, kind = 409, "degenerate"
        elif isinstance(exc, ValidationError):
            status, kind = 422, "validation"
        else:
            status, kind = 500, "internal"
        body = {"error": str(exc), "kind": kind}
        if isinstance(exc, ProblemSemanticError):
            body["path"] = exc.path
        return JSONResponse(status_code=status, content=body)

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.post("/validate", response_model=ValidateResponse)
    async def validate(req: ProblemRequest):
        return core.validate_payload(_load(req))

    @app.post("/enumerate", response_model=EnumerateResponse)
    async def enumerate_basis(req: ProblemRequest):
        return core.enumerate_payload(_load(req))

    @app.post("/solve", response_model=DecisionResponse)
    async def solve(req: ProblemRequest):
        return core.solve_payload(_load(req))

    @app.post("/decompose", response_model=DecisionResponse)
    async def decompose(req: ProblemRequest):
        return core.solve_payload(_load(req))

    @app.post("/explain", response_model=DecisionResponse)
    async def explain(req: ProblemRequest):
        return core.explain_payload(_load(req))

    @app.post("/sample", response_model=SampleResponse)
    async def sample(req: SampleRequest):
        doc = _load(
            ProblemRequest(
                actions=req.actions,
                strategic_state=req.strategic_state,
                prospects=req.prospects,
                machine=req.machine,
            )
        )
        return core.sample_payload(doc, shots=req.shots_override, seed=req.seed_override)

    return app


app = create_app()
