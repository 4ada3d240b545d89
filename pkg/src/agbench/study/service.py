"""HTTP surface of the human study.

JSON in, JSON out:

    POST /sessions                     create a session
    GET  /sessions/{id}/next           cursor stimulus descriptor
    GET  /stimuli/{token}.png          stimulus image (opaque token)
    POST /sessions/{id}/responses      record the cursor response
    GET  /sessions/{id}/results        per-block results once complete

When a built UI directory is supplied its files are served at the root,
so `agbench serve` is the only process a study deployment needs.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import FileResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .store import StudyError, StudyStore


class ConditionBody(BaseModel):
    direction: str
    interval: int


class CreateSessionBody(BaseModel):
    conditions: dict[str, ConditionBody]
    seed: int = 0
    subject_tag: str | None = Field(default=None, max_length=200)


class ResponseBody(BaseModel):
    stimulus_id: str
    label: str


def create_app(store_dir, ui_dir=None) -> FastAPI:
    store = StudyStore(store_dir)
    app = FastAPI(title="agbench human study")
    app.state.store = store

    @app.exception_handler(StudyError)
    async def study_error_handler(request: Request, exc: StudyError):
        return JSONResponse(status_code=exc.status, content={"error": str(exc)})

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        session = store.create_session(
            conditions={k: v.model_dump() for k, v in body.conditions.items()},
            seed=body.seed,
            subject_tag=body.subject_tag,
        )
        return {
            "session_id": session.session_id,
            "total": session.total,
            "blocks": [
                {
                    "kind": b.kind,
                    "direction": b.direction,
                    "interval": b.interval,
                    "size": len(b.stimuli),
                    "allowed_labels": b.allowed_labels,
                }
                for b in session.blocks
            ],
        }

    @app.get("/sessions/{session_id}/next")
    def next_stimulus(session_id: str):
        return store.next_stimulus(session_id)

    @app.get("/stimuli/{token}.png")
    def stimulus(token: str):
        return Response(content=store.stimulus_bytes(token), media_type="image/png")

    @app.post("/sessions/{session_id}/responses")
    def record_response(session_id: str, body: ResponseBody):
        return store.record_response(session_id, body.stimulus_id, body.label)

    @app.get("/sessions/{session_id}/results")
    def results(session_id: str):
        return store.results(session_id)

    if ui_dir is not None:
        ui_path = Path(ui_dir)
        index = ui_path / "index.html"

        @app.get("/", include_in_schema=False)
        def root():
            return FileResponse(index)

        app.mount("/", StaticFiles(directory=ui_path), name="ui")

    return app
