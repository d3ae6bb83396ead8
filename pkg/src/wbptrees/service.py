"""
HTTP surface for the counting engine.

One endpoint per task: exact counts for a passport or a (p, q) pair, the
per-angle moduli census, brute-force tree enumeration, and the
formula-versus-oracle verification sweep.  All handlers are thin wrappers
over the pure library functions, so the service scales to concurrent
callers without locks; the only shared state is the memo table inside
``count``, which tolerates concurrent insertion.

Run with ``uvicorn wbptrees.service:app``.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from . import closedform, count, hcmu, oracle
from .passport import ConsistencyError, Passport, parse_passport

app = FastAPI(
    title="wbptrees",
    description="Exact counts of weighted bi-colored plane trees and the "
                "component census of HCMU sphere moduli spaces.",
)


@app.exception_handler(ValueError)
async def _bad_input(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ConsistencyError)
async def _inconsistency(request: Request, exc: ConsistencyError):
    return JSONResponse(status_code=500,
                        content={"detail": f"internal consistency: {exc}"})


class CountRequest(BaseModel):
    passport: Optional[str] = Field(None, description="power notation, e.g. '2^2 4^3 | 8^2'")
    p: Optional[int] = None
    q: Optional[int] = None

    @model_validator(mode="after")
    def _one_of(self):
        by_pq = self.p is not None or self.q is not None
        if by_pq and (self.p is None or self.q is None):
            raise ValueError("p and q must be given together")
        if (self.passport is None) == (not by_pq):
            raise ValueError("give either a passport or a (p, q) pair")
        return self


class CountResponse(BaseModel):
    passport: str
    G: dict
    total: int
    by_symmetry: dict
    closed_form_check: Optional[bool] = None


class EnumerateRequest(BaseModel):
    passport: str
    format: Literal["json", "dot"] = "json"
    max_weight: int = 16


class EnumerateResponse(BaseModel):
    passport: str
    count: int
    trees: Optional[list] = None
    dot: Optional[str] = None


class VerifyRequest(BaseModel):
    max_weight: int = 8


class VerifyResponse(BaseModel):
    ok: bool
    max_weight: int
    passports_checked: int
    pq_checked: int
    failures: list


def _count_payload(p: Passport) -> dict:
    return count.report(p).to_json_dict()


@app.post("/count", response_model=CountResponse, response_model_exclude_none=True)
def count_endpoint(req: CountRequest) -> CountResponse:
    if req.passport is not None:
        return CountResponse(**_count_payload(parse_passport(req.passport)))
    closedform.pq_params(req.p, req.q)
    passport = Passport([req.q] * req.p, [req.p] * req.q)
    payload = _count_payload(passport)
    closed = closedform.count_closed(req.p, req.q)
    payload["closed_form_check"] = closed == payload["total"]
    return CountResponse(**payload)


@app.get("/census")
def census_endpoint(alpha: int) -> dict:
    return hcmu.census(alpha).to_json_dict()


@app.post("/enumerate", response_model=EnumerateResponse,
          response_model_exclude_none=True)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    passport = parse_passport(req.passport)
    trees = oracle.enumerate_trees(passport, req.max_weight)
    out = EnumerateResponse(passport=str(passport), count=len(trees))
    if req.format == "dot":
        out.dot = "\n\n".join(oracle.tree_to_dot(t, name=f"tree{i}")
                              for i, t in enumerate(trees))
    else:
        out.trees = [oracle.tree_to_json_dict(t) for t in trees]
    return out


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    report = hcmu.run_verification(req.max_weight)
    return VerifyResponse(**report.to_json_dict())
