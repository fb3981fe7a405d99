"""HTTP surface over the gateway service.

Seven endpoints, JSON documents in and out. Every failure—including
malformed bodies and unknown routes—is shaped as the closed ApiError
vocabulary; no handler lets a stack trace reach a client.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .errors import ApiError, internal_error, not_found, validation_error
from .service import GatewayService

RUN_LIST_FORMAT = "emoadvisor.run-list/1"


def _error_response(err: ApiError) -> JSONResponse:
    return JSONResponse(status_code=err.http_status, content=err.to_document())


def create_app(service: GatewayService) -> FastAPI:
    """Wire the service into a FastAPI application."""
    app = FastAPI(title="emoadvisor gateway", docs_url=None, redoc_url=None)
    app.state.service = service

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, err: ApiError):
        return _error_response(err)

    @app.exception_handler(RequestValidationError)
    async def _request_invalid(request: Request, err: RequestValidationError):
        return _error_response(validation_error("request body is not valid JSON"))

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, err: StarletteHTTPException):
        if err.status_code == 404:
            return _error_response(not_found("no such endpoint"))
        if 400 <= err.status_code < 500:
            return _error_response(validation_error(str(err.detail)))
        return _error_response(internal_error("internal error"))

    @app.exception_handler(Exception)
    async def _unhandled(request: Request, err: Exception):
        return _error_response(internal_error("internal error"))

    @app.post("/runs", status_code=201)
    def create_run(body: dict | None = None):
        body = body or {}
        instance_seed = body.get("instance_seed", 0)
        descriptor = service.create_run(body.get("params"), instance_seed)
        return descriptor.to_document()

    @app.get("/runs")
    def list_runs():
        return {
            "format": RUN_LIST_FORMAT,
            "runs": [d.to_document() for d in service.list_runs()],
        }

    @app.get("/runs/{run_id}")
    def get_run(run_id: str):
        return service.get_run(run_id).to_document()

    @app.get("/runs/{run_id}/front")
    def get_front(run_id: str):
        return service.get_front_document(run_id)

    @app.get("/runs/{run_id}/analytics")
    def get_analytics(run_id: str):
        service.get_run(run_id)  # not_found beats conflict for unknown ids
        return {"run_id": run_id, "analytics": service.analytics(run_id)}

    @app.post("/runs/{run_id}/inference", status_code=201)
    def post_inference(run_id: str, body: dict | None = None):
        body = body or {}
        report = service.post_inference(
            run_id,
            selection=body.get("selection"),
            persona_doc=body.get("persona"),
            question=body.get("question", ""),
            template=body.get("template"),
            backend_mode=body.get("backend_mode"),
        )
        return report.to_document()

    @app.get("/reports/{prompt_hash}")
    def get_report(prompt_hash: str):
        return service.get_report(prompt_hash).to_document()

    return app
