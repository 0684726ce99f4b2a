import typing as tp
from http import HTTPStatus


class RegretGamesError(Exception):
    exit_code: int = 1

    def __init__(
        self,
        status_code: int,
        error_key: str,
        error_message: str = "",
        error_loc: tp.Optional[tp.Sequence[tp.Any]] = None,
    ) -> None:
        self.error_key = error_key
        self.error_message = error_message
        self.error_loc = error_loc
        self.status_code = status_code
        super().__init__(error_message)


class ParseError(RegretGamesError):
    exit_code = 2

    def __init__(
        self,
        error_message: str,
        line: tp.Optional[int] = None,
        status_code: int = HTTPStatus.UNPROCESSABLE_ENTITY,
        error_key: str = "parse.syntax",
    ) -> None:
        error_loc = ("line", line) if line is not None else None
        if line is not None:
            error_message = f"line {line}: {error_message}"
        super().__init__(status_code, error_key, error_message, error_loc)
        self.line = line


class ArenaValidationError(RegretGamesError):
    exit_code = 2

    def __init__(
        self,
        error_message: str,
        status_code: int = HTTPStatus.UNPROCESSABLE_ENTITY,
        error_key: str = "arena.invalid",
        error_loc: tp.Optional[tp.Sequence[tp.Any]] = None,
    ) -> None:
        super().__init__(status_code, error_key, error_message, error_loc)


class AutomatonValidationError(RegretGamesError):
    exit_code = 2

    def __init__(
        self,
        error_message: str,
        status_code: int = HTTPStatus.UNPROCESSABLE_ENTITY,
        error_key: str = "automaton.invalid",
        error_loc: tp.Optional[tp.Sequence[tp.Any]] = None,
    ) -> None:
        super().__init__(status_code, error_key, error_message, error_loc)


class UnknownVertexError(RegretGamesError):
    exit_code = 2

    def __init__(
        self,
        vertex: tp.Any,
        status_code: int = HTTPStatus.NOT_FOUND,
        error_key: str = "vertex.unknown",
    ) -> None:
        super().__init__(
            status_code, error_key, f"Unknown vertex {vertex!r}", None,
        )


class StrategyError(RegretGamesError):
    exit_code = 2

    def __init__(
        self,
        error_message: str,
        status_code: int = HTTPStatus.UNPROCESSABLE_ENTITY,
        error_key: str = "strategy.invalid",
    ) -> None:
        super().__init__(status_code, error_key, error_message, None)


class UndecidableRequestError(RegretGamesError):
    exit_code = 3

    def __init__(
        self,
        error_message: str = (
            "Regret against word strategies is undecidable for mean-payoff; "
            "pass a memory bound"
        ),
        status_code: int = HTTPStatus.UNPROCESSABLE_ENTITY,
        error_key: str = "request.undecidable",
    ) -> None:
        super().__init__(status_code, error_key, error_message, None)


class BudgetExceededError(RegretGamesError):
    exit_code = 4

    def __init__(
        self,
        budget: int,
        what: str = "search",
        status_code: int = HTTPStatus.SERVICE_UNAVAILABLE,
        error_key: str = "budget.exceeded",
    ) -> None:
        super().__init__(
            status_code,
            error_key,
            f"Budget of {budget} nodes exceeded in {what}",
            None,
        )
        self.budget = budget


class Budget:
    """Counts explored nodes and raises once the limit is crossed."""

    def __init__(self, limit: int, what: str = "search") -> None:
        self.limit = limit
        self.what = what
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(self.limit, self.what)


class FormulaError(RegretGamesError):
    exit_code = 2

    def __init__(
        self,
        error_message: str,
        status_code: int = HTTPStatus.UNPROCESSABLE_ENTITY,
        error_key: str = "formula.invalid",
    ) -> None:
        super().__init__(status_code, error_key, error_message, None)
