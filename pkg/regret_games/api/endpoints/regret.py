from http import HTTPStatus

from fastapi import APIRouter, Request

from regret_games.api import responses
from regret_games.api.services import get_solver_service, run_blocking
from regret_games.formats import format_strategy, load
from regret_games.log import app_logger
from regret_games.models.requests import (
    SpoilerBody,
    ThresholdRequest,
    ThresholdResponse,
    ValueRequest,
    ValueResponse,
)
from regret_games.utils import format_rational

router = APIRouter()


@router.post(
    path="/regret/value",
    tags=["Regret"],
    status_code=HTTPStatus.OK,
    response_model=ValueResponse,
    responses={
        422: responses.unprocessable_entity,
        503: responses.budget_exceeded,
    }
)
async def regret_value(
    request: Request,
    body: ValueRequest,
) -> ValueResponse:
    subject = load(body.model)
    service = get_solver_service(request.app)
    report = await run_blocking(
        service.value, subject, body.variant, body.payoff, body.memory,
    )
    app_logger.info(f"Regret value {format_rational(report.value)}")
    return ValueResponse(
        value=format_rational(report.value),
        strategy=format_strategy(subject, report.strategy),
    )


@router.post(
    path="/regret/threshold",
    tags=["Regret"],
    status_code=HTTPStatus.OK,
    response_model=ThresholdResponse,
    responses={
        422: responses.unprocessable_entity,
        503: responses.budget_exceeded,
    }
)
async def regret_threshold(
    request: Request,
    body: ThresholdRequest,
) -> ThresholdResponse:
    subject = load(body.model)
    service = get_solver_service(request.app)
    report = await run_blocking(
        service.threshold,
        subject,
        body.variant,
        body.payoff,
        body.bound_value,
        body.strict,
        body.memory,
        body.bits,
    )
    app_logger.info(f"Regret threshold answered {report.answer}")

    response = ThresholdResponse(answer=report.answer)
    if report.strategy is not None:
        response.strategy = format_strategy(subject, report.strategy)
    if report.spoiler is not None:
        response.spoiler = SpoilerBody(
            stem=list(report.spoiler.word.stem),
            cycle=list(report.spoiler.word.cycle),
            best_value=format_rational(report.spoiler.best_value),
            achieved_value=format_rational(report.spoiler.achieved_value),
        )
    return response
