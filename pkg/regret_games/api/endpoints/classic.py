from http import HTTPStatus

from fastapi import APIRouter, Request

from regret_games.api import responses
from regret_games.api.services import get_solver_service, run_blocking
from regret_games.formats import format_strategy, load
from regret_games.models.requests import ClassicRequest, ClassicResponse
from regret_games.utils import format_rational

router = APIRouter()


@router.post(
    path="/classic",
    tags=["Classic"],
    status_code=HTTPStatus.OK,
    response_model=ClassicResponse,
    responses={
        422: responses.unprocessable_entity,
    }
)
async def classic_value(
    request: Request,
    body: ClassicRequest,
) -> ClassicResponse:
    arena = load(body.model)
    service = get_solver_service(request.app)
    result = await run_blocking(
        service.classic, arena, body.what, body.payoff,
    )
    return ClassicResponse(
        value=format_rational(result.value),
        eve_strategy=format_strategy(arena, result.eve_strategy),
        adam_strategy=format_strategy(arena, result.adam_strategy, "adam"),
    )
