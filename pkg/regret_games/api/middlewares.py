import time

from fastapi import FastAPI, Request
from starlette.middleware.base import RequestResponseEndpoint
from starlette.responses import Response

from regret_games.context import REQUEST_ID, new_request_id
from regret_games.log import access_logger, app_logger
from regret_games.models.common import Error
from regret_games.response import server_error


async def log_access(
    request: Request,
    call_next: RequestResponseEndpoint,
) -> Response:
    started_at = time.perf_counter()
    response = await call_next(request)
    access_logger.info(
        msg="",
        extra={
            "request_time": round(time.perf_counter() - started_at, 4),
            "status_code": response.status_code,
            "requested_url": request.url,
            "method": request.method,
        },
    )
    return response


async def guard_unhandled(
    request: Request,
    call_next: RequestResponseEndpoint,
) -> Response:
    try:
        return await call_next(request)
    except Exception as e:  # pylint: disable=W0703
        app_logger.exception(f"Caught unhandled exception: {e!r}")
        error = Error(
            error_key="server_error",
            error_message=(
                f"Internal server error {e.__class__.__name__} "
                f"while solving request {REQUEST_ID.get('-')}"
            ),
        )
        return server_error([error])


def add_middlewares(app: FastAPI, request_id_header: str) -> None:

    async def bind_request_id(
        request: Request,
        call_next: RequestResponseEndpoint,
    ) -> Response:
        request_id = request.headers.get(request_id_header) or new_request_id()
        token = REQUEST_ID.set(request_id)
        try:
            response = await call_next(request)
        finally:
            REQUEST_ID.reset(token)
        response.headers[request_id_header] = request_id
        return response

    # the last one added runs first
    for middleware in (guard_unhandled, log_access, bind_request_id):
        app.middleware("http")(middleware)
