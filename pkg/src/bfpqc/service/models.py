"""Request and response schemas for the workbench service.

Every response shares the same envelope: command, rank, results, pass,
timing_ms. `pass` is a Python keyword, so the field is `passed` with a
serialization alias.
"""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class BasisRequest(BaseModel):
    rank: int


class ClassifyRequest(BaseModel):
    pattern: Optional[str] = None
    rank: Optional[int] = None
    index: Optional[int] = None
    include_state: bool = False
    faithful: bool = False


class VerifyRequest(BaseModel):
    rank_max: int = 2


class SampleRequest(BaseModel):
    pattern: str
    shots: int = 2048
    seed: int = 0


class ExportRequest(BaseModel):
    pattern: str


class GameRequest(BaseModel):
    rank: int
    seed: int = 0
    allow_negation: bool = False


class BasisEntry(BaseModel):
    index: int
    pattern: str
    ratio: str


class ClassifyEntry(BaseModel):
    pattern: str
    index: int
    bits: str
    probability: float
    queries_used: int
    out_of_promise: bool
    negation_of_member: bool
    state: Optional[list[float]] = None


class VerifyEntry(BaseModel):
    rank: int
    check: str
    passed: int
    total: int
    ok: bool


class SampleEntry(BaseModel):
    outcome: str
    count: int


class ExportEntry(BaseModel):
    circuit: str


class GameEntry(BaseModel):
    seed: int
    bob_index: int
    bob_negated: bool
    alice_index: int
    alice_claims_negation: Optional[bool]
    disambiguation_used: bool
    queries_used: int
    winner: str


class RunReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    command: str
    rank: int
    results: list
    passed: bool = Field(alias="pass")
    timing_ms: float


class BasisReport(RunReport):
    results: list[BasisEntry]


class ClassifyReport(RunReport):
    results: list[ClassifyEntry]


class VerifyReport(RunReport):
    results: list[VerifyEntry]


class SampleReport(RunReport):
    results: list[SampleEntry]


class ExportReport(RunReport):
    results: list[ExportEntry]


class GameReport(RunReport):
    results: list[GameEntry]
