"""Request/response models for the pipeline service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class StageRequest(BaseModel):
    data_dir: str
    snapshot_dir: str
    out_dir: str
    subset: str = "all"
    backend: str = "offline"
    dedup: bool = False
    eee_bins: int = Field(default=6, ge=1, le=64)


class StageResponse(BaseModel):
    stage: str
    summary: dict


class ErrorResponse(BaseModel):
    error: str
    kind: str
    exit_code: int


class HealthResponse(BaseModel):
    status: str
    version: str


class ScoreRowModel(BaseModel):
    university_id: str
    mean_reputation_score: int
    arr: int
    eee_score: float
    eee_rank: int
    ute_score: int
    ute_rank: int


class ScoreTableResponse(BaseModel):
    rows: list[ScoreRowModel]


class CorrelationCell(BaseModel):
    family: str
    label_x: str
    label_y: str
    tau: float
    significant: bool


class CorrelationResponse(BaseModel):
    subset: str
    cells: list[CorrelationCell]
