"""
Brute-force reference computations.

Everything here enumerates plays, runs or strategies exhaustively and
closes a play at the first repeated position. Nothing is shared with the
solvers on purpose; every search runs under a node budget.
"""

import itertools
import typing as tp
from fractions import Fraction

from .exceptions import Budget
from .models.arena import Arena
from .models.automaton import WeightedAutomaton
from .models.common import PayoffKind
from .models.lasso import LassoWord
from .settings import get_config

Node = tp.Hashable


def _budget(limit: tp.Optional[int], what: str) -> Budget:
    if limit is None:
        limit = get_config().solver_config.oracle_budget
    return Budget(limit, what)


def _value(
    stem: tp.Sequence[Fraction],
    cycle: tp.Sequence[Fraction],
    p: PayoffKind,
) -> Fraction:
    if p is PayoffKind.inf:
        return min(list(stem) + list(cycle))
    if p is PayoffKind.sup:
        return max(list(stem) + list(cycle))
    if p is PayoffKind.liminf:
        return min(cycle)
    if p is PayoffKind.limsup:
        return max(cycle)
    return Fraction(sum(cycle, Fraction(0)), len(cycle))


def _prefix_independent(p: PayoffKind) -> None:
    if not p.is_prefix_independent:
        raise ValueError(
            f"Oracle needs a prefix-independent payoff: {p.value}"
        )


def _lasso_values(
    source: Node,
    successors: tp.Callable[[Node], tp.Iterable[tp.Tuple[Node, Fraction]]],
    p: PayoffKind,
    budget: Budget,
) -> tp.Iterator[Fraction]:
    """Values of all lassos from source that close at their first repeat."""
    path = [source]
    weights: tp.List[Fraction] = []
    on_path = {source: 0}

    def walk() -> tp.Iterator[Fraction]:
        for target, weight in successors(path[-1]):
            budget.spend()
            if target in on_path:
                start = on_path[target]
                yield _value(weights[:start], weights[start:] + [weight], p)
                continue
            on_path[target] = len(path)
            path.append(target)
            weights.append(weight)
            yield from walk()
            del on_path[target]
            path.pop()
            weights.pop()

    yield from walk()


def _arena_moves(
    g: Arena,
    allowed: tp.Optional[tp.Mapping[str, int]] = None,
) -> tp.Callable[[Node], tp.List[tp.Tuple[Node, Fraction]]]:
    def moves(vertex: Node) -> tp.List[tp.Tuple[Node, Fraction]]:
        name = tp.cast(str, vertex)
        ids = g.out_edges(name)
        if allowed is not None and name in allowed:
            ids = (allowed[name],)
        return [(g.edges[i].target, g.edges[i].weight) for i in ids]

    return moves


def cycle_forming_value(
    g: Arena,
    p: PayoffKind,
    budget: tp.Optional[int] = None,
) -> Fraction:
    """
    Value of the game stopped at the first repeated vertex, scored by the
    cycle it closes. Eve maximizes and Adam minimizes.
    """
    _prefix_independent(p)
    spent = _budget(budget, "cycle forming game")
    path: tp.List[str] = [g.initial]
    weights: tp.List[Fraction] = []

    def play() -> Fraction:
        vertex = path[-1]
        outcomes = []
        for i in g.out_edges(vertex):
            spent.spend()
            edge = g.edges[i]
            if edge.target in path:
                start = path.index(edge.target)
                outcomes.append(
                    _value((), weights[start:] + [edge.weight], p)
                )
                continue
            path.append(edge.target)
            weights.append(edge.weight)
            outcomes.append(play())
            path.pop()
            weights.pop()
        return max(outcomes) if g.is_eve(vertex) else min(outcomes)

    return play()


def _positional_strategies(g: Arena) -> tp.Iterator[tp.Dict[str, int]]:
    eve = [v for v in g.vertices if g.is_eve(v)]
    for picks in itertools.product(*(g.out_edges(v) for v in eve)):
        yield dict(zip(eve, picks))


def _reachable(
    source: str,
    moves: tp.Callable[[Node], tp.List[tp.Tuple[Node, Fraction]]],
) -> tp.Set[str]:
    seen = {source}
    stack = [source]
    while stack:
        for target, _ in moves(stack.pop()):
            if target not in seen:
                seen.add(tp.cast(str, target))
                stack.append(tp.cast(str, target))
    return seen


def brute_regret_any(
    g: Arena,
    p: PayoffKind,
    budget: tp.Optional[int] = None,
) -> Fraction:
    """
    Least regret over positional Eve strategies against any Adam.

    Adam leads the play to an Eve vertex, plays the worst from there, and
    compares with the best cooperative outcome of a sibling edge.
    """
    _prefix_independent(p)
    spent = _budget(budget, "regret enumeration")
    free = _arena_moves(g)
    cooperative = {
        v: max(_lasso_values(v, free, p, spent)) for v in g.vertices
    }
    best: tp.Optional[Fraction] = None
    for sigma in _positional_strategies(g):
        played = _arena_moves(g, sigma)
        regret = Fraction(0)
        for u in _reachable(g.initial, played):
            if not g.is_eve(u):
                continue
            worst = min(_lasso_values(u, played, p, spent))
            for j in g.out_edges(u):
                if j != sigma[u]:
                    regret = max(
                        regret, cooperative[g.edges[j].target] - worst,
                    )
        if best is None or regret < best:
            best = regret
    return tp.cast(Fraction, best)


def _word_moves(
    a: WeightedAutomaton,
    word: LassoWord,
) -> tp.Callable[[Node], tp.List[tp.Tuple[Node, Fraction]]]:
    length = len(word.stem) + len(word.cycle)

    def moves(node: Node) -> tp.List[tp.Tuple[Node, Fraction]]:
        state, position = tp.cast(tp.Tuple[str, int], node)
        following = position + 1 if position + 1 < length else len(word.stem)
        letter = word.letter(position)
        return [
            ((t.target, following), t.weight)
            for t in a.transitions
            if t.source == state and t.letter == letter
        ]

    return moves


def lasso_automaton_value(
    a: WeightedAutomaton,
    word: LassoWord,
    p: PayoffKind,
    budget: tp.Optional[int] = None,
) -> Fraction:
    """Best run value on the word, over runs through the word's positions."""
    spent = _budget(budget, "run enumeration")
    return max(_lasso_values((a.initial, 0), _word_moves(a, word), p, spent))


def lasso_accepted(
    a: WeightedAutomaton,
    marked: tp.AbstractSet[int],
    word: LassoWord,
    budget: tp.Optional[int] = None,
) -> bool:
    """Whether some run on the word takes marked transitions forever."""
    flags = {
        i: Fraction(1 if i in marked else 0)
        for i in range(len(a.transitions))
    }
    weighted = WeightedAutomaton(
        states=a.states,
        initial=a.initial,
        alphabet=a.alphabet,
        transitions=tuple(
            t.copy(update={"weight": flags[i]})
            for i, t in enumerate(a.transitions)
        ),
    )
    return lasso_automaton_value(
        weighted, word, PayoffKind.limsup, budget,
    ) == 1


def lasso_words(
    alphabet: tp.Sequence[str],
    bound: int,
) -> tp.Iterator[LassoWord]:
    """Lasso words with stem and cycle of total length at most `bound`."""
    for total in range(1, bound + 1):
        for letters in itertools.product(alphabet, repeat=total):
            for split in range(total):
                yield LassoWord(stem=letters[:split], cycle=letters[split:])


# (memory, state, letter) -> transition, (memory, letter) -> memory
_Plan = tp.Tuple[
    tp.Dict[tp.Tuple[int, str, str], int],
    tp.Dict[tp.Tuple[int, str], int],
]


def _plans(a: WeightedAutomaton, m: int) -> tp.Iterator[_Plan]:
    points = [
        (memory, state, letter)
        for memory in range(m)
        for state in a.states
        for letter in a.alphabet
    ]
    options = [
        [i for i, t in enumerate(a.transitions)
         if t.source == state and t.letter == letter]
        for _, state, letter in points
    ]
    updates = [
        (memory, letter) for memory in range(m) for letter in a.alphabet
    ]
    for picks in itertools.product(*options):
        choice = dict(zip(points, picks))
        for targets in itertools.product(range(m), repeat=len(updates)):
            yield choice, dict(zip(updates, targets))


def _record(
    p: PayoffKind,
    recorded: tp.Optional[Fraction],
    w: Fraction,
) -> tp.Tuple[tp.Optional[Fraction], Fraction]:
    if p is PayoffKind.inf:
        value = w if recorded is None else min(recorded, w)
        return value, value
    if p is PayoffKind.sup:
        value = w if recorded is None else max(recorded, w)
        return value, value
    return None, w


def _plan_regret(
    a: WeightedAutomaton,
    plan: _Plan,
    p: PayoffKind,
    budget: Budget,
) -> Fraction:
    """Worst gap over lassos of the product of a free run with the plan."""
    choice, update = plan
    recorded = p.recorded

    def moves(node: Node) -> tp.List[tp.Tuple[Node, Fraction]]:
        free, free_record, own, memory, own_record = tp.cast(
            tp.Tuple[str, tp.Any, str, int, tp.Any], node,
        )
        found = []
        for letter in a.alphabet:
            mine = a.transitions[choice[(memory, own, letter)]]
            next_own, own_weight = _record(p, own_record, mine.weight)
            for t in a.transitions:
                if t.source != free or t.letter != letter:
                    continue
                next_free, free_weight = _record(p, free_record, t.weight)
                found.append((
                    (
                        t.target,
                        next_free,
                        mine.target,
                        update[(memory, letter)],
                        next_own,
                    ),
                    (free_weight, own_weight),
                ))
        return found

    gaps = _pair_lasso_gaps(
        (a.initial, None, a.initial, 0, None), moves, recorded, budget,
    )
    return max(gaps)


def _pair_lasso_gaps(
    source: Node,
    moves: tp.Callable[
        [Node], tp.List[tp.Tuple[Node, tp.Tuple[Fraction, Fraction]]]
    ],
    p: PayoffKind,
    budget: Budget,
) -> tp.Iterator[Fraction]:
    path = [source]
    pairs: tp.List[tp.Tuple[Fraction, Fraction]] = []
    on_path = {source: 0}

    def walk() -> tp.Iterator[Fraction]:
        for target, pair in moves(path[-1]):
            budget.spend()
            if target in on_path:
                cycle = pairs[on_path[target]:] + [pair]
                yield (
                    _value((), [f for f, _ in cycle], p)
                    - _value((), [o for _, o in cycle], p)
                )
                continue
            on_path[target] = len(path)
            path.append(target)
            pairs.append(pair)
            yield from walk()
            del on_path[target]
            path.pop()
            pairs.pop()

    yield from walk()


def _word_position(word: LassoWord, depth: int) -> int:
    if depth < len(word.stem):
        return depth
    return len(word.stem) + (depth - len(word.stem)) % len(word.cycle)


def _informed_lower(
    a: WeightedAutomaton,
    p: PayoffKind,
    best: tp.Mapping[LassoWord, Fraction],
    bound: int,
    budget: Budget,
) -> Fraction:
    """
    Least worst gap over the given words for strategies of any memory.

    Eve picks a transition per letter read. Once the letters read single
    out one word, she follows the best run on the rest of it.
    """
    # equal ultimately periodic words agree on this many letters
    horizon = bound + bound * bound
    distinct: tp.Dict[tp.Tuple[str, ...], LassoWord] = {}
    for word in best:
        letters = tuple(word.letter(i) for i in range(horizon))
        distinct.setdefault(letters, word)
    solved: tp.Dict[tp.Tuple[tp.Any, ...], Fraction] = {}

    def rest(
        word: LassoWord, depth: int, state: str, record: tp.Any,
    ) -> Fraction:
        value = max(
            _lasso_values(
                (state, _word_position(word, depth)),
                _word_moves(a, word),
                p,
                budget,
            )
        )
        if record is None:
            return value
        if p is PayoffKind.inf:
            return min(record, value)
        return max(record, value)

    def solve(
        prefix: tp.Tuple[str, ...],
        group: tp.List[tp.Tuple[str, ...]],
        state: str,
        record: tp.Any,
    ) -> Fraction:
        key = (prefix, state, record)
        if key in solved:
            return solved[key]
        budget.spend()
        depth = len(prefix)
        if len(group) == 1:
            word = distinct[group[0]]
            result = best[word] - rest(word, depth, state, record)
        else:
            branches: tp.Dict[str, tp.List[tp.Tuple[str, ...]]] = {}
            for letters in group:
                branches.setdefault(letters[depth], []).append(letters)
            result = max(
                min(
                    solve(
                        prefix + (letter,),
                        following,
                        a.transitions[i].target,
                        _record(p, record, a.transitions[i].weight)[0],
                    )
                    for i in a.moves(state, letter)
                )
                for letter, following in branches.items()
            )
        solved[key] = result
        return result

    return solve((), list(distinct), a.initial, None)


def brute_regret_word(
    a: WeightedAutomaton,
    p: PayoffKind,
    m: int,
    bound: int,
    budget: tp.Optional[int] = None,
) -> tp.Tuple[Fraction, Fraction]:
    """
    Bounds on the regret against word strategies.

    `upper` is the least exact regret among memory-m strategies that update
    their memory on letters. `lower` is the least worst gap over lasso
    words of length at most `bound`, for strategies of any memory. The
    regret lies between the two.
    """
    spent = _budget(budget, "word regret enumeration")
    best = {
        word: lasso_automaton_value(a, word, p)
        for word in lasso_words(a.alphabet, bound)
    }
    upper: tp.Optional[Fraction] = None
    for plan in _plans(a, m):
        spent.spend()
        regret = _plan_regret(a, plan, p, spent)
        if upper is None or regret < upper:
            upper = regret
    lower = _informed_lower(a, p, best, bound, spent)
    return tp.cast(Fraction, upper), lower
