# pylint: disable=redefined-outer-name

import typing as tp

import pytest
from _pytest.monkeypatch import MonkeyPatch
from fastapi import FastAPI
from starlette.testclient import TestClient

from regret_games.api.app import create_app
from regret_games.api.services import make_solver_service
from regret_games.models.arena import Arena
from regret_games.models.automaton import WeightedAutomaton
from regret_games.service import SolverService
from regret_games.settings import ServiceConfig, get_config

from .helpers import read_a0, read_g0, read_g1


@pytest.fixture
def set_env() -> tp.Generator[None, None, None]:
    monkeypatch = MonkeyPatch()
    monkeypatch.setenv("SOLVER_ORACLE_BUDGET", "5000000")
    monkeypatch.setenv("SOLVER_SEARCH_BUDGET", "200000")

    yield

    monkeypatch.undo()


@pytest.fixture
def service_config(set_env: None) -> ServiceConfig:
    return get_config()


@pytest.fixture
def solver_service(service_config: ServiceConfig) -> SolverService:
    return make_solver_service(service_config)


@pytest.fixture
def app(service_config: ServiceConfig) -> FastAPI:
    app = create_app(service_config)
    return app


@pytest.fixture
def client(app: FastAPI) -> TestClient:
    return TestClient(app=app)


@pytest.fixture
def g0() -> Arena:
    return read_g0()


@pytest.fixture
def g1() -> Arena:
    return read_g1()


@pytest.fixture
def a0() -> WeightedAutomaton:
    return read_a0()
