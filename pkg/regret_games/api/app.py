import asyncio
import typing as tp
from concurrent.futures.thread import ThreadPoolExecutor

import uvloop
from fastapi import FastAPI

from regret_games.log import app_logger, setup_logging
from regret_games.settings import ServiceConfig

from .endpoints import add_routes
from .exception_handlers import add_exception_handlers
from .middlewares import add_middlewares
from .services import make_solver_service

__all__ = ("create_app",)


def setup_asyncio(workers: int) -> None:
    uvloop.install()

    loop = asyncio.get_event_loop()

    # solver requests run here, off the event loop
    executor = ThreadPoolExecutor(
        max_workers=workers, thread_name_prefix="regret_games",
    )
    loop.set_default_executor(executor)

    def handler(_, context: tp.Dict[str, tp.Any]) -> None:
        message = "Caught asyncio exception: {message}".format_map(context)
        app_logger.warning(message)

    loop.set_exception_handler(handler)


def create_app(config: ServiceConfig) -> FastAPI:
    setup_logging(config)
    setup_asyncio(config.solver_workers)

    app = FastAPI(debug=False, title="Regret games")

    app.state.solver_service = make_solver_service(config)

    add_routes(app)
    add_middlewares(app, config.request_id_header)
    add_exception_handlers(app)

    app_logger.info("App created")
    return app
