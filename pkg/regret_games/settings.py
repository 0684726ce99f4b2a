from enum import Enum

from pydantic import BaseSettings, PositiveInt


class Environment(str, Enum):
    TEST = "TEST"
    PRODUCTION = "PRODUCTION"


class Config(BaseSettings):

    class Config:
        case_sensitive = False


class LogConfig(Config):
    level: str = "INFO"
    solver_level: str = "INFO"
    datetime_format: str = "%Y-%m-%d %H:%M:%S"

    class Config:
        case_sensitive = False
        fields = {
            "level": {"env": ["log_level"]},
            "solver_level": {"env": ["log_solver_level"]},
        }


class SolverConfig(Config):
    oracle_budget: PositiveInt = 2_000_000
    search_budget: PositiveInt = 200_000
    jobs: PositiveInt = 1
    lasso_bound: PositiveInt = 8

    class Config:
        case_sensitive = False
        env_prefix = "solver_"


class ServiceConfig(Config):
    service_name: str = "regret_games"
    request_id_header: str = "X-Request-Id"
    environment: str = Environment.TEST
    solver_workers: PositiveInt = 4

    log_config: LogConfig
    solver_config: SolverConfig


def get_config() -> ServiceConfig:
    return ServiceConfig(
        log_config=LogConfig(),
        solver_config=SolverConfig(),
    )
