from http import HTTPStatus

from starlette.testclient import TestClient

from regret_games.settings import ServiceConfig


def test_ping(client: TestClient) -> None:
    with client:
        response = client.get("/ping")
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {"message": "pong"}


def test_request_id_is_echoed(
    client: TestClient,
    service_config: ServiceConfig,
) -> None:
    header = service_config.request_id_header
    with client:
        response = client.get("/ping", headers={header: "run-42"})
    assert response.headers[header] == "run-42"


def test_request_id_is_generated(
    client: TestClient,
    service_config: ServiceConfig,
) -> None:
    header = service_config.request_id_header
    with client:
        first = client.get("/ping").headers[header]
        second = client.get("/ping").headers[header]
    assert len(first) == 32
    assert first != second


def test_health_reports_solver_limits(
    client: TestClient,
    service_config: ServiceConfig,
) -> None:
    with client:
        response = client.get("/health")
    assert response.status_code == HTTPStatus.OK

    solver_config = service_config.solver_config
    assert response.json() == {
        "data": {
            "jobs": solver_config.jobs,
            "search_budget": 200_000,
            "oracle_budget": 5_000_000,
            "lasso_bound": solver_config.lasso_bound,
        }
    }
