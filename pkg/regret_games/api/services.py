import asyncio
import contextvars
import functools
import typing as tp

from fastapi import FastAPI

from regret_games.service import SolverService
from regret_games.settings import ServiceConfig

T = tp.TypeVar("T")


def get_solver_service(app: FastAPI) -> SolverService:
    return app.state.solver_service


def make_solver_service(config: ServiceConfig) -> SolverService:
    return SolverService.from_config(config.solver_config)


async def run_blocking(func: tp.Callable[..., T], *args: tp.Any) -> T:
    """Run a solver call in the default executor keeping the request id."""
    context = contextvars.copy_context()
    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(
        None, functools.partial(context.run, func, *args),
    )
