"""FastAPI application exposing the squeezer computations.

Routes serialize through the same deterministic renderer as the CLI, so a
response body is byte-identical whether it came over HTTP or from a local
invocation with the same parameters.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from ..serialize import render_json
from . import handlers, models

__all__ = ["create_app", "app"]


def create_app() -> FastAPI:
    app = FastAPI(
        title="cyclosqueeze",
        description="Cyclic n-mode squeezing operator computations",
        version="0.1.0",
    )

    @app.exception_handler(ValueError)
    async def value_error_handler(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ArithmeticError)
    async def arithmetic_error_handler(_: Request, exc: ArithmeticError) -> JSONResponse:
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    def json_response(payload) -> Response:
        return Response(content=render_json(payload), media_type="application/json")

    @app.get("/v1/health")
    def health() -> Response:
        return json_response(models.HealthResponse())

    @app.post("/v1/matrices")
    def matrices(request: models.SqueezeRequest) -> Response:
        return json_response(handlers.matrices_report(request))

    @app.post("/v1/variances")
    def variances(request: models.SqueezeRequest) -> Response:
        return json_response(handlers.variances_report(request))

    @app.post("/v1/state")
    def state(request: models.SqueezeRequest) -> Response:
        return json_response(handlers.state_report(request))

    @app.post("/v1/wigner")
    def wigner(request: models.WignerRequest) -> Response:
        body, media_type = handlers.render_wigner(request)
        return Response(content=body, media_type=media_type)

    @app.post("/v1/identities")
    def identities(request: models.IdentitiesRequest) -> Response:
        return json_response(handlers.identities_report(request))

    @app.post("/v1/verify")
    def verify(request: models.VerifyRequest) -> Response:
        return json_response(handlers.verify_report(request))

    return app


app = create_app()
