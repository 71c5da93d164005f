"""FastAPI service wrapping the pipeline.

Each stage is a POST endpoint taking the directory configuration in the
request body; results computed by earlier stages can be read back through
the GET endpoints.  Library errors map onto stable exit codes (2 input,
3 backend, 4 missing stage) that thin clients can pass through.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from .. import __version__, ingest
from ..errors import BackendError, EngageRankError, MissingStage
from ..pipeline import STAGES, PipelineConfig, load_score_tables
from .schemas import (
    CorrelationCell,
    CorrelationResponse,
    HealthResponse,
    ScoreRowModel,
    ScoreTableResponse,
    StageRequest,
    StageResponse,
)

EXIT_INPUT_ERROR = 2
EXIT_BACKEND_ERROR = 3
EXIT_MISSING_STAGE = 4


def _exit_code(exc: EngageRankError) -> int:
    if isinstance(exc, MissingStage):
        return EXIT_MISSING_STAGE
    if isinstance(exc, BackendError):
        return EXIT_BACKEND_ERROR
    return EXIT_INPUT_ERROR


def _config(request: StageRequest) -> PipelineConfig:
    try:
        return PipelineConfig(
            data_dir=request.data_dir,
            snapshot_dir=request.snapshot_dir,
            out_dir=request.out_dir,
            subset=request.subset,
            backend=request.backend,
            dedup=request.dedup,
            eee_bins=request.eee_bins,
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(title="engage-rank", version=__version__)

    @app.exception_handler(EngageRankError)
    async def engage_rank_error(request, exc: EngageRankError):
        return JSONResponse(status_code=400, content={
            "error": str(exc),
            "kind": type(exc).__name__,
            "exit_code": _exit_code(exc),
        })

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    def _register_stage(name: str):
        @app.post(f"/pipeline/{name}", response_model=StageResponse, name=f"run_{name}")
        def run(request: StageRequest) -> StageResponse:
            summary = STAGES[name](_config(request))
            return StageResponse(stage=name, summary=summary)
        return run

    for stage_name in STAGES:
        _register_stage(stage_name)

    @app.post("/results/scores", response_model=ScoreTableResponse)
    def scores(request: StageRequest) -> ScoreTableResponse:
        tables = load_score_tables(_config(request))
        rows = [
            ScoreRowModel(
                university_id=u.id,
                mean_reputation_score=tables.means[u.id],
                arr=tables.arr[u.id],
                eee_score=tables.eee_score[u.id],
                eee_rank=tables.eee_rank[u.id],
                ute_score=tables.ute_score[u.id],
                ute_rank=tables.ute_rank[u.id],
            )
            for u in sorted(tables.universities, key=lambda u: u.id)
        ]
        return ScoreTableResponse(rows=rows)

    @app.post("/results/correlations", response_model=CorrelationResponse)
    def correlations(request: StageRequest) -> CorrelationResponse:
        config = _config(request)
        path = config.out_dir / "correlations" / f"{config.subset}.csv"
        if not path.exists():
            raise MissingStage("correlate", f"{path} does not exist")
        _, rows = ingest.read_csv_table(path)
        cells = [
            CorrelationCell(
                family=row["family"], label_x=row["label_x"], label_y=row["label_y"],
                tau=float(row["tau"]), significant=row["significant"] == "true",
            )
            for row in rows
        ]
        return CorrelationResponse(subset=config.subset, cells=cells)

    return app
