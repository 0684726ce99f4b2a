from fastapi import FastAPI

from .classic import router as classic_router
from .health import router as health_router
from .regret import router as regret_router


def add_routes(app: FastAPI) -> None:
    for router in (
        health_router,
        regret_router,
        classic_router,
    ):
        app.include_router(router)
