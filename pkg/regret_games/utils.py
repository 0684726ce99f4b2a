import math
import typing as tp
from concurrent.futures.thread import ThreadPoolExecutor
from fractions import Fraction

T = tp.TypeVar("T")
R = tp.TypeVar("R")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse `p` or `p/q` with integer p, q; q must be positive."""
    head, sep, tail = text.partition("/")
    numerator = int(head)
    denominator = int(tail) if sep else 1
    if denominator <= 0:
        raise ValueError(f"Denominator of {text!r} must be positive")
    return Fraction(numerator, denominator)


def common_denominator(values: tp.Iterable[Fraction]) -> int:
    denominator = 1
    for value in values:
        denominator = denominator * value.denominator // math.gcd(
            denominator, value.denominator,
        )
    return denominator


def parallel_map(
    func: tp.Callable[[T], R],
    items: tp.Iterable[T],
    jobs: int = 1,
) -> tp.List[R]:
    """Map preserving input order; `jobs` > 1 runs in a thread pool."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(
        max_workers=jobs, thread_name_prefix="regret_games",
    ) as executor:
        return list(executor.map(func, items))
