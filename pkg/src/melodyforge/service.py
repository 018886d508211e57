"""HTTP generation service: JSON in, MIDI bytes out.

One process serves three things: ``POST /api/generate`` (bounded by a
concurrency semaphore, returning 429 when saturated), ``GET
/api/health`` (async, so it answers within its latency budget even
while every worker thread is busy generating), and optionally the
static studio UI at ``/``.  The model is loaded once at startup and
never mutated afterwards; each request owns its generation state.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .generate import GenerationRequest, InvalidRequest, generate_to_midi, parse_seed
from .model import ModelParams
from .training import CheckpointError, load_checkpoint

DEFAULT_PORT = 8643


class InvalidServiceConfig(ValueError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    checkpoint_path: Path | None = None
    host: str = "127.0.0.1"
    port: int = DEFAULT_PORT
    max_concurrent: int = 4
    max_seconds: float = 300.0
    static_dir: Path | None = None

    def __post_init__(self):
        if self.max_concurrent < 1:
            raise InvalidServiceConfig(f"max_concurrent must be >= 1, got {self.max_concurrent}")
        if self.max_seconds <= 0:
            raise InvalidServiceConfig(f"max_seconds must be positive, got {self.max_seconds}")


class GenerateBody(BaseModel):
    seed_notes: str = "A4"
    seconds: float = 120.0
    temperature: float = 1.0
    rng_seed: int = 0


def create_app(
    config: ServiceConfig = ServiceConfig(), params: ModelParams | None = None
) -> FastAPI:
    """Build the service; ``params`` short-circuits checkpoint loading."""
    if params is None and config.checkpoint_path is not None:
        params = load_checkpoint(Path(config.checkpoint_path).read_bytes()).params

    app = FastAPI(title="melodyforge", docs_url=None, redoc_url=None)
    app.state.params = params
    app.state.generation_slots = threading.Semaphore(config.max_concurrent)

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/api/health")
    async def health():
        loaded = app.state.params is not None
        dims = None
        if loaded:
            dims = {
                "vocab": app.state.params.dims.vocab,
                "hidden": app.state.params.dims.hidden,
            }
        return {"status": "ok", "model_loaded": loaded, "dims": dims}

    @app.post("/api/generate")
    def generate_endpoint(body: GenerateBody):
        # sync def: FastAPI runs this on the threadpool, keeping the
        # event loop (and /api/health) responsive during generation
        if app.state.params is None:
            return JSONResponse(status_code=503, content={"detail": "model not loaded"})
        if body.seconds > config.max_seconds:
            return JSONResponse(
                status_code=400,
                content={"detail": f"seconds exceeds limit of {config.max_seconds}"},
            )
        if not app.state.generation_slots.acquire(blocking=False):
            return JSONResponse(
                status_code=429,
                content={"detail": f"at capacity ({config.max_concurrent} concurrent generations)"},
            )
        try:
            request = GenerationRequest(
                seed_tokens=parse_seed(body.seed_notes),
                target_seconds=body.seconds,
                temperature=body.temperature,
                rng_seed=body.rng_seed,
            )
            data = generate_to_midi(request, app.state.params)
        except InvalidRequest as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        finally:
            app.state.generation_slots.release()
        return Response(
            content=data,
            media_type="audio/midi",
            headers={
                "X-Generation-Id": uuid.uuid4().hex,
                "Content-Disposition": 'attachment; filename="melody.mid"',
            },
        )

    if config.static_dir is not None and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="studio")

    return app


def run(config: ServiceConfig) -> None:  # pragma: no cover - wraps uvicorn
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="info")


__all__ = [
    "CheckpointError",
    "DEFAULT_PORT",
    "GenerateBody",
    "InvalidServiceConfig",
    "ServiceConfig",
    "create_app",
    "run",
]
