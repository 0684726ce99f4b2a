import typing as tp
from fractions import Fraction
from http import HTTPStatus

import orjson
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .models.common import Error
from .utils import format_rational


def _default(o: tp.Any) -> tp.Any:
    if isinstance(o, BaseModel):
        return o.dict()
    if isinstance(o, Fraction):
        return format_rational(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o, key=str)
    raise TypeError(f"Type {type(o).__name__} is not JSON serializable")


class EnvelopeResponse(JSONResponse):
    """JSON body rendered by orjson; rationals are written as `p/q`."""

    media_type = "application/json"

    def render(self, content: tp.Any) -> bytes:
        return orjson.dumps(content, default=_default)


def create_response(
    status_code: int,
    message: tp.Optional[str] = None,
    data: tp.Optional[tp.Any] = None,
    errors: tp.Optional[tp.List[Error]] = None,
) -> JSONResponse:
    fields = {"message": message, "data": data, "errors": errors}
    content = {key: val for key, val in fields.items() if val is not None}
    return EnvelopeResponse(content, status_code=status_code)


def server_error(errors: tp.List[Error]) -> JSONResponse:
    return create_response(HTTPStatus.INTERNAL_SERVER_ERROR, errors=errors)
