import logging

from _pytest.monkeypatch import MonkeyPatch

from regret_games.context import REQUEST_ID
from regret_games.log import ContextFilter, get_config, key_value_format
from regret_games.settings import get_config as get_service_config


def test_cli_config_logs_to_stderr_only() -> None:
    config = get_config(get_service_config(), cli=True)
    assert set(config["handlers"]) == {"console"}
    assert config["handlers"]["console"]["stream"] == "ext://sys.stderr"
    assert "access" not in config["loggers"]


def test_service_config_has_access_loggers() -> None:
    config = get_config(get_service_config())
    assert config["loggers"]["access"]["handlers"] == ["access"]
    assert config["loggers"]["uvicorn.access"]["handlers"] == [
        "server.access"
    ]


def test_solver_level_from_env() -> None:
    monkeypatch = MonkeyPatch()
    monkeypatch.setenv("LOG_SOLVER_LEVEL", "DEBUG")
    try:
        config = get_config(get_service_config(), cli=True)
    finally:
        monkeypatch.undo()
    assert config["loggers"]["solver"]["level"] == "DEBUG"
    assert config["loggers"]["app"]["level"] == "INFO"


def test_key_value_format() -> None:
    assert key_value_format("levelname", "message") == (
        'level="%(levelname)s" message="%(message)s"'
    )


def test_context_filter_stamps_record() -> None:
    record = logging.LogRecord("solver", logging.INFO, "", 0, "x", (), None)
    token = REQUEST_ID.set("run-1")
    try:
        assert ContextFilter(service_name="regret_games").filter(record)
    finally:
        REQUEST_ID.reset(token)
    assert getattr(record, "service_name") == "regret_games"
    assert getattr(record, "request_id") == "run-1"
