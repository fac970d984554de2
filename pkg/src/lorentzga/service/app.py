"""HTTP face of the package: every operation is a stateless POST endpoint.

Run with `uvicorn lorentzga.service.app:app`.  Malformed documents come
back as 422, domain violations (superluminal speeds, non-unimodular
rotors, algebra mismatches, odd-grade content, ...) as 400.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..documents import DocumentError
from . import handlers, models

app = FastAPI(title="lorentzga", version=__version__)


@app.exception_handler(RequestValidationError)
async def _invalid_request(request: Request, exc: RequestValidationError) -> JSONResponse:
    # str(exc) stays serializable even when the offending input (say, NaN)
    # would trip the default JSON encoder.
    return JSONResponse(status_code=422, content={"error": str(exc), "kind": "malformed"})


@app.exception_handler(DocumentError)
async def _malformed(request: Request, exc: DocumentError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": str(exc), "kind": "malformed"})


@app.exception_handler(ValueError)
async def _domain(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc), "kind": "domain"})


@app.get("/v1/health", response_model=models.HealthResponse)
def health() -> models.HealthResponse:
    return models.HealthResponse(status="ok", service="lorentzga", version=__version__)


@app.post("/v1/product", response_model=models.ProductResponse, response_model_exclude_none=True)
def product(req: models.ProductRequest) -> models.ProductResponse:
    return handlers.product(req)


@app.post("/v1/conj", response_model=models.ConjResponse, response_model_exclude_none=True)
def conjugate(req: models.ConjRequest) -> models.ConjResponse:
    return handlers.conjugate(req)


@app.post("/v1/split", response_model=models.SplitResponse, response_model_exclude_none=True)
def split(req: models.SplitRequest) -> models.SplitResponse:
    return handlers.split(req)


@app.post("/v1/boost", response_model=models.BoostResponse, response_model_exclude_none=True)
def boost(req: models.BoostRequest) -> models.BoostResponse:
    return handlers.boost(req)


@app.post("/v1/rotor-exp", response_model=models.RotorExpResponse, response_model_exclude_none=True)
def rotor_exp(req: models.RotorExpRequest) -> models.RotorExpResponse:
    return handlers.rotor_exp(req)


@app.post("/v1/factor", response_model=models.FactorResponse, response_model_exclude_none=True)
def factor(req: models.FactorRequest) -> models.FactorResponse:
    return handlers.factor(req)


@app.post("/v1/transform", response_model=models.TransformResponse, response_model_exclude_none=True)
def transform(req: models.TransformRequest) -> models.TransformResponse:
    return handlers.transform(req)


@app.post("/v1/map", response_model=models.MapResponse, response_model_exclude_none=True)
def map_algebra(req: models.MapRequest) -> models.MapResponse:
    return handlers.map_algebra(req)


@app.post("/v1/field-split", response_model=models.FieldSplitResponse, response_model_exclude_none=True)
def field_split(req: models.FieldSplitRequest) -> models.FieldSplitResponse:
    return handlers.field_split(req)
