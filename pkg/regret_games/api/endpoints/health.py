from http import HTTPStatus

from fastapi import APIRouter
from starlette.requests import Request
from starlette.responses import JSONResponse

from regret_games.api.services import get_solver_service
from regret_games.response import create_response

router = APIRouter()


@router.get(
    path="/ping",
    tags=["Health"],
)
async def ping(_: Request) -> JSONResponse:
    return create_response(message="pong", status_code=HTTPStatus.OK)


@router.get(
    path="/health",
    tags=["Health"],
)
async def health(request: Request) -> JSONResponse:
    """Reports the limits the solvers run under."""
    service = get_solver_service(request.app)
    limits = {
        "jobs": service.jobs,
        "search_budget": service.search_budget,
        "oracle_budget": service.oracle_budget,
        "lasso_bound": service.lasso_bound,
    }
    return create_response(status_code=HTTPStatus.OK, data=limits)
