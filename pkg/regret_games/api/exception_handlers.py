import typing as tp
from http import HTTPStatus

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from pydantic import ValidationError
from starlette.exceptions import HTTPException
from starlette.responses import JSONResponse

from regret_games.context import REQUEST_ID
from regret_games.exceptions import RegretGamesError
from regret_games.log import app_logger
from regret_games.models.common import Error
from regret_games.response import create_response, server_error


def _reply(
    status_code: int,
    errors: tp.List[Error],
    exc: Exception,
) -> JSONResponse:
    log = app_logger.error if status_code >= 500 else app_logger.info
    log(f"Request {REQUEST_ID.get('-')} failed with {status_code}: {exc!r}")
    return create_response(status_code, errors=errors)


async def default_error_handler(
    request: Request,
    exc: Exception,
) -> JSONResponse:
    app_logger.error(f"Default error handler caught: {exc!r}")
    error = Error(
        error_key="server_error",
        error_message=(
            f"Internal server error {exc.__class__.__name__} "
            f"while solving request {REQUEST_ID.get('-')}"
        ),
    )
    return server_error([error])


async def http_error_handler(
    request: Request,
    exc: HTTPException,
) -> JSONResponse:
    error = Error(
        error_key=f"http.{exc.status_code}",
        error_message=exc.detail,
    )
    return _reply(exc.status_code, [error], exc)


async def validation_error_handler(
    request: Request,
    exc: tp.Union[RequestValidationError, ValidationError],
) -> JSONResponse:
    errors = [
        Error(
            error_key=err["type"],
            error_message=err["msg"],
            error_loc=list(err["loc"]),
        )
        for err in exc.errors()
    ]
    return _reply(HTTPStatus.UNPROCESSABLE_ENTITY, errors, exc)


async def solver_error_handler(
    request: Request,
    exc: RegretGamesError,
) -> JSONResponse:
    error = Error(
        error_key=exc.error_key,
        error_message=exc.error_message,
        error_loc=exc.error_loc,
    )
    return _reply(exc.status_code, [error], exc)


def add_exception_handlers(app: FastAPI) -> None:
    app.add_exception_handler(HTTPException, http_error_handler)
    app.add_exception_handler(ValidationError, validation_error_handler)
    app.add_exception_handler(RequestValidationError, validation_error_handler)
    app.add_exception_handler(RegretGamesError, solver_error_handler)
    app.add_exception_handler(Exception, default_error_handler)
