"""
Line-oriented text formats for arenas and automata.

Arena::

    arena
    vertex <id> eve|adam
    init <id>
    edge <src> <dst> <p[/q]> [<label>]

Automaton::

    automaton
    alphabet <symbol>...
    state <id>
    init <id>
    trans <src> <symbol> <dst> <p[/q]>

Blank lines and everything after `#` are ignored. Formulas use DIMACS CNF.
"""

import re
import typing as tp
from fractions import Fraction

from .exceptions import ParseError
from .models.arena import Arena, Edge
from .models.automaton import Transition, WeightedAutomaton
from .models.results import Spoiler
from .models.strategy import MooreStrategy
from .utils import format_rational, parse_rational

IDENTIFIER = re.compile(r"^[A-Za-z0-9_.\-]+$")

Line = tp.Tuple[int, tp.List[str]]


def _tokenize(text: str) -> tp.Iterator[Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content.split()


def _identifier(token: str, number: int) -> str:
    if not IDENTIFIER.match(token):
        raise ParseError(f"Invalid identifier {token!r}", number)
    return token


def _weight(token: str, number: int) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError:
        raise ParseError(f"Invalid weight {token!r}", number) from None


def _expect_header(lines: tp.List[Line], header: str) -> None:
    if not lines or lines[0][1] != [header]:
        number = lines[0][0] if lines else 1
        raise ParseError(f"Expected {header!r} header", number)


def _arity(tokens: tp.List[str], number: int, *allowed: int) -> None:
    if len(tokens) - 1 not in allowed:
        raise ParseError(
            f"{tokens[0]!r} takes {' or '.join(map(str, allowed))} "
            f"arguments, got {len(tokens) - 1}",
            number,
        )


def parse_arena(text: str) -> Arena:
    lines = list(_tokenize(text))
    _expect_header(lines, "arena")

    vertices: tp.List[str] = []
    eve: tp.Set[str] = set()
    edges: tp.List[tp.Tuple[int, tp.List[str]]] = []
    initial: tp.Optional[str] = None

    for number, tokens in lines[1:]:
        keyword = tokens[0]
        if keyword == "vertex":
            _arity(tokens, number, 2)
            vertex = _identifier(tokens[1], number)
            if vertex in vertices:
                raise ParseError(f"Duplicate vertex {vertex!r}", number)
            if tokens[2] not in ("eve", "adam"):
                raise ParseError(
                    f"Owner must be 'eve' or 'adam', got {tokens[2]!r}",
                    number,
                )
            vertices.append(vertex)
            if tokens[2] == "eve":
                eve.add(vertex)
        elif keyword == "init":
            _arity(tokens, number, 1)
            if initial is not None:
                raise ParseError("Initial vertex declared twice", number)
            initial = _identifier(tokens[1], number)
        elif keyword == "edge":
            _arity(tokens, number, 3, 4)
            edges.append((number, tokens))
        else:
            raise ParseError(f"Unknown keyword {keyword!r}", number)

    declared = set(vertices)
    parsed_edges = []
    for number, tokens in edges:
        source = _identifier(tokens[1], number)
        target = _identifier(tokens[2], number)
        for end in (source, target):
            if end not in declared:
                raise ParseError(f"Unknown vertex {end!r}", number)
        parsed_edges.append(
            Edge(
                source=source,
                target=target,
                weight=_weight(tokens[3], number),
                label=tokens[4] if len(tokens) == 5 else None,
            )
        )
    if initial is None:
        raise ParseError("Missing 'init' line")
    if initial not in declared:
        raise ParseError(f"Unknown initial vertex {initial!r}")

    return Arena(
        vertices=tuple(vertices),
        eve_vertices=frozenset(eve),
        edges=tuple(parsed_edges),
        initial=initial,
    )


def parse_automaton(text: str) -> WeightedAutomaton:
    lines = list(_tokenize(text))
    _expect_header(lines, "automaton")

    alphabet: tp.List[str] = []
    states: tp.List[str] = []
    transitions: tp.List[tp.Tuple[int, tp.List[str]]] = []
    initial: tp.Optional[str] = None

    for number, tokens in lines[1:]:
        keyword = tokens[0]
        if keyword == "alphabet":
            if len(tokens) < 2:
                raise ParseError(
                    "'alphabet' needs at least one symbol", number,
                )
            for token in tokens[1:]:
                letter = _identifier(token, number)
                if letter in alphabet:
                    raise ParseError(f"Duplicate symbol {letter!r}", number)
                alphabet.append(letter)
        elif keyword == "state":
            _arity(tokens, number, 1)
            state = _identifier(tokens[1], number)
            if state in states:
                raise ParseError(f"Duplicate state {state!r}", number)
            states.append(state)
        elif keyword == "init":
            _arity(tokens, number, 1)
            if initial is not None:
                raise ParseError("Initial state declared twice", number)
            initial = _identifier(tokens[1], number)
        elif keyword == "trans":
            _arity(tokens, number, 4)
            transitions.append((number, tokens))
        else:
            raise ParseError(f"Unknown keyword {keyword!r}", number)

    declared = set(states)
    letters = set(alphabet)
    parsed = []
    for number, tokens in transitions:
        source = _identifier(tokens[1], number)
        letter = _identifier(tokens[2], number)
        target = _identifier(tokens[3], number)
        for end in (source, target):
            if end not in declared:
                raise ParseError(f"Unknown state {end!r}", number)
        if letter not in letters:
            raise ParseError(f"Unknown symbol {letter!r}", number)
        parsed.append(
            Transition(
                source=source,
                letter=letter,
                target=target,
                weight=_weight(tokens[4], number),
            )
        )
    if initial is None:
        raise ParseError("Missing 'init' line")
    if initial not in declared:
        raise ParseError(f"Unknown initial state {initial!r}")

    return WeightedAutomaton(
        states=tuple(states),
        initial=initial,
        alphabet=tuple(alphabet),
        transitions=tuple(parsed),
    )


def serialize_arena(arena: Arena) -> str:
    lines = ["arena"]
    for vertex in arena.vertices:
        owner = "eve" if arena.is_eve(vertex) else "adam"
        lines.append(f"vertex {vertex} {owner}")
    lines.append(f"init {arena.initial}")
    for edge in arena.edges:
        weight = format_rational(edge.weight)
        line = f"edge {edge.source} {edge.target} {weight}"
        if edge.label is not None:
            line += f" {edge.label}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def serialize_automaton(automaton: WeightedAutomaton) -> str:
    lines = ["automaton", "alphabet " + " ".join(automaton.alphabet)]
    lines.extend(f"state {state}" for state in automaton.states)
    lines.append(f"init {automaton.initial}")
    for t in automaton.transitions:
        lines.append(
            f"trans {t.source} {t.letter} {t.target} "
            f"{format_rational(t.weight)}"
        )
    return "\n".join(lines) + "\n"


def load(text: str) -> tp.Union[Arena, WeightedAutomaton]:
    """Parse either format, dispatching on the header line."""
    for number, tokens in _tokenize(text):
        if tokens == ["arena"]:
            return parse_arena(text)
        if tokens == ["automaton"]:
            return parse_automaton(text)
        raise ParseError("Expected 'arena' or 'automaton' header", number)
    raise ParseError("Empty input")


def parse_dimacs(text: str) -> tp.Tuple[tp.Tuple[int, ...], ...]:
    """
    CNF in DIMACS form: `c` comment lines, an optional `p cnf <vars>
    <clauses>` line, then literals with each clause closed by 0.
    """
    clauses: tp.List[tp.Tuple[int, ...]] = []
    current: tp.List[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("c", "p", "%"):
            continue
        for token in tokens:
            try:
                literal = int(token)
            except ValueError:
                raise ParseError(
                    f"Invalid literal {token!r}", number,
                ) from None
            if literal == 0:
                if not current:
                    raise ParseError("Empty clause", number)
                clauses.append(tuple(current))
                current = []
            else:
                current.append(literal)
    if current:
        clauses.append(tuple(current))
    if not clauses:
        raise ParseError("Formula has no clauses")
    return tuple(clauses)


def serialize_dimacs(phi: tp.Sequence[tp.Sequence[int]]) -> str:
    count = max(abs(literal) for clause in phi for literal in clause)
    lines = [f"p cnf {count} {len(phi)}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in phi)
    return "\n".join(lines) + "\n"


def _token(value: tp.Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return "(" + ",".join(_token(v) for v in value) + ")"
    return str(value)


def format_strategy(
    subject: tp.Union[Arena, WeightedAutomaton],
    strategy: MooreStrategy,
    owner: str = "eve",
) -> tp.List[str]:
    """
    One `strategy <owner> <pos> <mem> -> <choice> <mem'>` line per move.

    On arenas the choice is the successor vertex; on automata it is the
    transition index and the position reads `state,letter`.
    """
    lines = []
    for (memory, position), picked in strategy.choice.items():
        following = strategy.next_memory(memory, picked)
        if isinstance(subject, Arena):
            if subject.is_eve(position) != (owner == "eve"):
                continue
            where = position
            target = subject.edges[picked].target
        else:
            where = ",".join(position)
            target = str(picked)
        lines.append(
            f"strategy {owner} {where} {_token(memory)} -> {target} "
            f"{_token(following)}"
        )
    return sorted(lines)


def format_spoiler(spoiler: Spoiler) -> tp.List[str]:
    return [
        "spoiler stem " + (" ".join(spoiler.word.stem) or "-"),
        "spoiler cycle " + " ".join(spoiler.word.cycle),
        f"spoiler best {format_rational(spoiler.best_value)}",
        f"spoiler achieved {format_rational(spoiler.achieved_value)}",
    ]
