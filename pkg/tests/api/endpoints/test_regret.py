# pylint: disable=redefined-outer-name
import typing as tp
from http import HTTPStatus

import pytest
from _pytest.monkeypatch import MonkeyPatch
from starlette.testclient import TestClient

from regret_games.api.app import create_app
from regret_games.settings import get_config
from tests.constants import A0_PATH, G0_PATH, G1_PATH

VALUE_PATH = "/regret/value"
THRESHOLD_PATH = "/regret/threshold"


@pytest.fixture
def g0_text() -> str:
    return G0_PATH.read_text()


@pytest.fixture
def a0_text() -> str:
    return A0_PATH.read_text()


@pytest.mark.parametrize(
    "variant,payoff,expected_value",
    (
        ("any", "mp-inf", "1"),
        ("any", "liminf", "3/2"),
        ("any", "inf", "1/2"),
        ("memoryless", "mp-inf", "0"),
    ),
)
def test_regret_value_on_arena(
    client: TestClient,
    g0_text: str,
    variant: str,
    payoff: str,
    expected_value: str,
) -> None:
    body = {"model": g0_text, "variant": variant, "payoff": payoff}
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    resp_json = resp.json()
    assert set(resp_json.keys()) == {"value", "strategy"}
    assert resp_json["value"] == expected_value
    for line in resp_json["strategy"]:
        assert line.startswith("strategy eve ")


def test_regret_value_strategy_lines(
    client: TestClient,
    g0_text: str,
) -> None:
    body = {"model": g0_text, "variant": "any", "payoff": "mp-inf"}
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    assert "strategy eve v1 0 -> v2 0" in resp.json()["strategy"]


def test_memoryless_strategy_uses_memory(client: TestClient) -> None:
    body = {
        "model": G1_PATH.read_text(),
        "variant": "memoryless",
        "payoff": "mp-inf",
    }
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    resp_json = resp.json()
    assert resp_json["value"] == "0"
    memories = {line.split()[3] for line in resp_json["strategy"]}
    assert len(memories) > 1


def test_word_value_with_memory(client: TestClient, a0_text: str) -> None:
    body = {
        "model": a0_text,
        "variant": "word",
        "payoff": "mp-inf",
        "memory": 1,
    }
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    assert resp.json()["value"] == "1"


def test_word_mean_payoff_is_undecidable(
    client: TestClient,
    a0_text: str,
) -> None:
    body = {"model": a0_text, "variant": "word", "payoff": "mp-inf"}
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert resp.json()["errors"][0]["error_key"] == "request.undecidable"


def test_threshold_yes_with_strategy(
    client: TestClient,
    a0_text: str,
) -> None:
    body = {
        "model": a0_text,
        "variant": "word",
        "payoff": "liminf",
        "bound": "3/2",
        "strict": True,
    }
    with client:
        resp = client.post(THRESHOLD_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    resp_json = resp.json()
    assert resp_json["answer"] is True
    assert resp_json["strategy"]
    assert resp_json["spoiler"] is None


def test_threshold_no_with_spoiler(
    client: TestClient,
    a0_text: str,
) -> None:
    body = {
        "model": a0_text,
        "variant": "word",
        "payoff": "liminf",
        "bound": "1/2",
        "strict": True,
    }
    with client:
        resp = client.post(THRESHOLD_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    resp_json = resp.json()
    assert resp_json["answer"] is False
    assert resp_json["strategy"] is None
    spoiler = resp_json["spoiler"]
    assert set(spoiler.keys()) == {
        "stem", "cycle", "best_value", "achieved_value",
    }
    assert spoiler["cycle"]


@pytest.mark.parametrize(
    "strict,answer",
    ((True, False), (False, True)),
)
def test_threshold_on_arena(
    client: TestClient,
    g0_text: str,
    strict: bool,
    answer: bool,
) -> None:
    body = {
        "model": g0_text,
        "variant": "any",
        "payoff": "mp-inf",
        "bound": "1",
        "strict": strict,
    }
    with client:
        resp = client.post(THRESHOLD_PATH, json=body)

    assert resp.status_code == HTTPStatus.OK
    assert resp.json()["answer"] is answer


def test_dbp_needs_bits(client: TestClient, a0_text: str) -> None:
    body = {
        "model": a0_text,
        "variant": "dbp",
        "payoff": "mp-inf",
        "bound": "1",
    }
    with client:
        resp = client.post(THRESHOLD_PATH, json=body)
        assert resp.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
        assert resp.json()["errors"][0]["error_key"] == "parse.syntax"

        body["bits"] = 1
        resp = client.post(THRESHOLD_PATH, json=body)
        assert resp.status_code == HTTPStatus.OK
        assert resp.json()["answer"] is True


@pytest.mark.parametrize(
    "update,expected_error_loc",
    (
        ({"payoff": "average"}, ["body", "payoff"]),
        ({"variant": "lucky"}, ["body", "variant"]),
        ({"bound": "1/0"}, ["body", "bound"]),
        ({"bound": "0.5"}, ["body", "bound"]),
        ({"model": ""}, ["body", "model"]),
    ),
)
def test_threshold_validation_errors(
    client: TestClient,
    g0_text: str,
    update: tp.Dict[str, str],
    expected_error_loc: tp.List[str],
) -> None:
    body = {
        "model": g0_text,
        "variant": "any",
        "payoff": "mp-inf",
        "bound": "1",
    }
    body.update(update)
    with client:
        resp = client.post(THRESHOLD_PATH, json=body)

    assert resp.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert resp.json()["errors"][0]["error_loc"] == expected_error_loc


def test_model_parse_error(client: TestClient) -> None:
    body = {
        "model": "arena\nvertex v1 eve\nedge v1 v1 1\n",
        "variant": "any",
        "payoff": "mp-inf",
    }
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    error = resp.json()["errors"][0]
    assert error["error_key"] == "parse.syntax"
    assert "init" in error["error_message"]


def test_variant_needs_matching_model(
    client: TestClient,
    a0_text: str,
) -> None:
    body = {"model": a0_text, "variant": "any", "payoff": "mp-inf"}
    with client:
        resp = client.post(VALUE_PATH, json=body)

    assert resp.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert resp.json()["errors"][0]["error_key"] == "parse.syntax"


def test_search_budget_exceeded(a0_text: str) -> None:
    monkeypatch = MonkeyPatch()
    monkeypatch.setenv("SOLVER_SEARCH_BUDGET", "1")
    client = TestClient(app=create_app(get_config()))
    body = {
        "model": a0_text,
        "variant": "word",
        "payoff": "mp-inf",
        "memory": 1,
    }
    try:
        with client:
            resp = client.post(VALUE_PATH, json=body)
    finally:
        monkeypatch.undo()

    assert resp.status_code == HTTPStatus.SERVICE_UNAVAILABLE
    assert resp.json()["errors"][0]["error_key"] == "budget.exceeded"
