"""
Logging setup for the service and the command line.

Every line is a sequence of key="value" pairs. The command line logs to
stderr only, so stdout carries nothing but the report.
"""

import logging.config
import typing as tp

from .context import REQUEST_ID
from .settings import ServiceConfig

app_logger = logging.getLogger("app")
access_logger = logging.getLogger("access")
solver_logger = logging.getLogger("solver")

RECORD_KEYS = {
    "asctime": "time",
    "levelname": "level",
    "name": "logger",
    "process": "pid",
}
CONTEXT_FIELDS = (
    "asctime", "levelname", "service_name", "name", "process", "request_id",
)
ACCESS_FIELDS = ("method", "requested_url", "status_code", "request_time")

Config = tp.Dict[str, tp.Any]


class ContextFilter(logging.Filter):
    """Stamps records with the service name and the current request id."""

    def __init__(self, name: str = "", service_name: str = "") -> None:
        self.service_name = service_name
        super().__init__(name)

    def filter(self, record: logging.LogRecord) -> bool:
        setattr(record, "service_name", self.service_name)
        setattr(record, "request_id", REQUEST_ID.get("-"))
        return super().filter(record)


def key_value_format(*fields: str) -> str:
    return " ".join(f'{RECORD_KEYS.get(f, f)}="%({f})s"' for f in fields)


def _logger(level: str, handler: str = "console") -> Config:
    return {"level": level, "handlers": [handler], "propagate": False}


def _handler(formatter: str, stream: str) -> Config:
    return {
        "class": "logging.StreamHandler",
        "formatter": formatter,
        "stream": f"ext://sys.{stream}",
        "filters": ["context"],
    }


def get_config(
    service_config: ServiceConfig,
    cli: bool = False,
) -> Config:
    log_config = service_config.log_config
    level = log_config.level
    datefmt = log_config.datetime_format

    loggers = {
        "root": _logger(level),
        app_logger.name: _logger(level),
        solver_logger.name: _logger(log_config.solver_level),
    }
    handlers = {"console": _handler("console", "stderr")}
    formatters = {
        "console": {
            "format": key_value_format(*CONTEXT_FIELDS, "message"),
            "datefmt": datefmt,
        },
    }
    if not cli:
        loggers.update({
            access_logger.name: _logger(level, "access"),
            "gunicorn.error": _logger("INFO"),
            "gunicorn.access": _logger("ERROR", "server.access"),
            "uvicorn.error": _logger("INFO"),
            "uvicorn.access": _logger("ERROR", "server.access"),
        })
        handlers["access"] = _handler("access", "stdout")
        handlers["server.access"] = _handler("server.access", "stdout")
        formatters["access"] = {
            "format": key_value_format(*CONTEXT_FIELDS, *ACCESS_FIELDS),
            "datefmt": datefmt,
        }
        formatters["server.access"] = {
            "format": key_value_format(
                "asctime", "levelname", "name", "process", "request_id",
                "message",
            ),
            "datefmt": datefmt,
        }

    return {
        "version": 1,
        "disable_existing_loggers": True,
        "loggers": loggers,
        "handlers": handlers,
        "formatters": formatters,
        "filters": {
            "context": {
                "()": "regret_games.log.ContextFilter",
                "service_name": service_config.service_name,
            },
        },
    }


def setup_logging(service_config: ServiceConfig, cli: bool = False) -> None:
    logging.config.dictConfig(get_config(service_config, cli))
