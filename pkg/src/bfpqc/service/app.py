"""HTTP front end over the workbench handlers."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .handlers import (
    handle_basis,
    handle_classify,
    handle_export,
    handle_game,
    handle_sample,
    handle_verify,
)
from .models import (
    BasisReport,
    BasisRequest,
    ClassifyReport,
    ClassifyRequest,
    ExportReport,
    ExportRequest,
    GameReport,
    GameRequest,
    SampleReport,
    SampleRequest,
    VerifyReport,
    VerifyRequest,
)

app = FastAPI(title="bfpqc workbench", version="0.1.0")


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/basis", response_model=BasisReport, response_model_exclude_none=True)
def basis_route(req: BasisRequest) -> BasisReport:
    return handle_basis(req)


@app.post("/classify", response_model=ClassifyReport, response_model_exclude_none=True)
def classify_route(req: ClassifyRequest) -> ClassifyReport:
    return handle_classify(req)


@app.post("/verify", response_model=VerifyReport, response_model_exclude_none=True)
def verify_route(req: VerifyRequest) -> VerifyReport:
    return handle_verify(req)


@app.post("/sample", response_model=SampleReport, response_model_exclude_none=True)
def sample_route(req: SampleRequest) -> SampleReport:
    return handle_sample(req)


@app.post("/export", response_model=ExportReport, response_model_exclude_none=True)
def export_route(req: ExportRequest) -> ExportReport:
    return handle_export(req)


@app.post("/game", response_model=GameReport, response_model_exclude_none=True)
def game_route(req: GameRequest) -> GameReport:
    return handle_game(req)
