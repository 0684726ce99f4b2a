"""
Command line entry point.

Reports go to stdout, logs to stderr. The exit status is 0 on success, 2
for malformed input, 3 for undecidable requests and 4 when a search
budget runs out.
"""

import argparse
import sys
import typing as tp
from fractions import Fraction
from pathlib import Path

from . import oracle, testgen
from .context import REQUEST_ID, new_request_id
from .exceptions import ParseError, RegretGamesError
from .formats import (
    format_spoiler,
    format_strategy,
    load,
    parse_dimacs,
    serialize_arena,
    serialize_automaton,
)
from .log import app_logger, setup_logging
from .models.arena import Arena
from .models.automaton import WeightedAutomaton
from .models.common import ClassicValue, PayoffKind, Variant
from .models.lasso import LassoWord
from .service import SolverService, Subject
from .settings import get_config
from .utils import format_rational, parse_rational

Out = tp.Callable[[str], None]


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected p or p/q, got {text!r}"
        ) from None


def _read(path: str) -> Subject:
    return load(Path(path).read_text())


def _arena(path: str) -> Arena:
    subject = _read(path)
    if not isinstance(subject, Arena):
        raise ParseError(f"{path} does not hold an arena")
    return subject


def _automaton(path: str) -> WeightedAutomaton:
    subject = _read(path)
    if not isinstance(subject, WeightedAutomaton):
        raise ParseError(f"{path} does not hold an automaton")
    return subject


def _write(args: argparse.Namespace, text: str, out: Out) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        out(text.rstrip("\n"))


def cmd_value(
    args: argparse.Namespace,
    service: SolverService,
    out: Out,
) -> None:
    subject = _read(args.file)
    report = service.value(subject, args.variant, args.payoff, args.memory)
    out(f"value {format_rational(report.value)}")
    for line in format_strategy(subject, report.strategy):
        out(line)


def cmd_threshold(
    args: argparse.Namespace,
    service: SolverService,
    out: Out,
) -> None:
    subject = _read(args.file)
    report = service.threshold(
        subject,
        args.variant,
        args.payoff,
        args.bound,
        args.strict,
        args.memory,
        args.bits,
    )
    out(f"result {'YES' if report.answer else 'NO'}")
    if report.strategy is not None:
        for line in format_strategy(subject, report.strategy):
            out(line)
    if report.spoiler is not None:
        for line in format_spoiler(report.spoiler):
            out(line)


def cmd_classic(
    args: argparse.Namespace,
    service: SolverService,
    out: Out,
) -> None:
    arena = _arena(args.file)
    result = service.classic(arena, args.what, args.payoff)
    out(f"value {format_rational(result.value)}")
    for line in format_strategy(arena, result.eve_strategy):
        out(line)
    for line in format_strategy(arena, result.adam_strategy, "adam"):
        out(line)


def cmd_oracle(
    args: argparse.Namespace,
    service: SolverService,
    out: Out,
) -> None:
    budget = service.oracle_budget
    if args.oracle == "regret-any":
        value = oracle.brute_regret_any(_arena(args.file), args.payoff, budget)
        out(f"value {format_rational(value)}")
    elif args.oracle == "cycle-forming":
        value = oracle.cycle_forming_value(
            _arena(args.file), args.payoff, budget,
        )
        out(f"value {format_rational(value)}")
    elif args.oracle == "word":
        upper, lower = oracle.brute_regret_word(
            _automaton(args.file),
            args.payoff,
            args.memory,
            args.bound or service.lasso_bound,
            budget,
        )
        out(f"upper {format_rational(upper)}")
        out(f"lower {format_rational(lower)}")
    else:
        word = LassoWord(
            stem=tuple(args.stem.split()), cycle=tuple(args.cycle.split()),
        )
        value = oracle.lasso_automaton_value(
            _automaton(args.file), word, args.payoff, budget,
        )
        out(f"value {format_rational(value)}")


def cmd_gen(
    args: argparse.Namespace,
    service: SolverService,
    out: Out,
) -> None:
    if args.generator == "sat":
        phi = parse_dimacs(Path(args.file).read_text())
        automaton = testgen.sat_reduction(phi, args.payoff)
        _write(args, serialize_automaton(automaton), out)
    elif args.generator == "value-gadget":
        arena = testgen.value_gadget(_arena(args.file), args.payoff)
        _write(args, serialize_arena(arena), out)
    elif args.generator == "random-automaton":
        automaton = testgen.random_automaton(
            args.vertices,
            args.outdeg,
            (args.low, args.high),
            args.alphabet.split(","),
            args.seed,
        )
        _write(args, serialize_automaton(automaton), out)
    else:
        arena = testgen.random_arena(
            args.vertices,
            args.outdeg,
            (args.low, args.high),
            args.eve_fraction,
            args.seed,
        )
        _write(args, serialize_arena(arena), out)


def _payoff(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--payoff",
        type=PayoffKind,
        choices=list(PayoffKind),
        required=True,
        metavar="|".join(p.value for p in PayoffKind),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regret-games",
        description="Regret minimization in weighted games and automata.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker threads for independent subproblems",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    value = commands.add_parser("value", help="least regret and a strategy")
    value.add_argument(
        "--variant",
        type=Variant,
        choices=[Variant.any, Variant.memoryless, Variant.word],
        required=True,
        metavar="any|memoryless|word",
    )
    _payoff(value)
    value.add_argument("--memory", type=int)
    value.add_argument("file")
    value.set_defaults(handler=cmd_value)

    threshold = commands.add_parser(
        "threshold", help="compare the regret with a bound",
    )
    threshold.add_argument(
        "--variant",
        type=Variant,
        choices=list(Variant),
        required=True,
        metavar="|".join(v.value for v in Variant),
    )
    _payoff(threshold)
    threshold.add_argument("--bound", type=_rational, required=True)
    threshold.add_argument("--strict", action="store_true")
    threshold.add_argument("--memory", type=int)
    threshold.add_argument("--bits", type=int)
    threshold.add_argument("file")
    threshold.set_defaults(handler=cmd_threshold)

    classic = commands.add_parser(
        "classic", help="antagonistic or cooperative value",
    )
    classic.add_argument(
        "--what",
        type=ClassicValue,
        choices=list(ClassicValue),
        required=True,
        metavar="aval|cval",
    )
    _payoff(classic)
    classic.add_argument("file")
    classic.set_defaults(handler=cmd_classic)

    reference = commands.add_parser(
        "oracle", help="brute-force reference values",
    )
    reference.add_argument(
        "oracle", choices=["regret-any", "cycle-forming", "word", "lasso"],
    )
    _payoff(reference)
    reference.add_argument("--memory", type=int, default=1)
    reference.add_argument("--bound", type=int, help="lasso word length")
    reference.add_argument("--stem", default="")
    reference.add_argument("--cycle", default="")
    reference.add_argument("file")
    reference.set_defaults(handler=cmd_oracle)

    gen = commands.add_parser("gen", help="write a generated instance")
    gen.add_argument(
        "generator",
        choices=["sat", "value-gadget", "random", "random-automaton"],
    )
    gen.add_argument(
        "--payoff",
        type=PayoffKind,
        choices=list(PayoffKind),
        default=PayoffKind.liminf,
    )
    gen.add_argument("--vertices", type=int, default=4)
    gen.add_argument("--outdeg", type=int, default=2)
    gen.add_argument("--low", type=int, default=-2)
    gen.add_argument("--high", type=int, default=2)
    gen.add_argument("--eve-fraction", type=_rational, default=Fraction(1, 2))
    gen.add_argument("--alphabet", default="a,b", help="comma separated")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")
    gen.add_argument("file", nargs="?")
    gen.set_defaults(handler=cmd_gen)
    return parser


def main(
    argv: tp.Optional[tp.Sequence[str]] = None,
    out: Out = print,
) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = get_config()
    setup_logging(config, cli=True)
    REQUEST_ID.set(new_request_id())
    service = SolverService.from_config(config.solver_config, args.jobs)

    needs_file = args.command == "gen" and args.generator in (
        "sat", "value-gadget",
    )
    if needs_file and not args.file:
        parser.error(f"gen {args.generator} needs an input file")
    if args.command == "oracle" and args.oracle == "lasso" and not args.cycle:
        parser.error("oracle lasso needs a nonempty --cycle")

    try:
        args.handler(args, service, out)
    except RegretGamesError as e:
        app_logger.info(f"Request failed: {e.error_key}: {e.error_message}")
        print(f"error: {e.error_message}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return ParseError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
