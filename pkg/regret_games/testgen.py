"""Instance generators: reduction gadgets, random arenas and automata."""

import itertools
import random
import typing as tp
from fractions import Fraction

from .exceptions import FormulaError
from .models.arena import Arena, Edge
from .models.automaton import Transition, WeightedAutomaton
from .models.common import PayoffKind

# Clauses of DIMACS-style literals: k stands for x_k and -k for its negation.
Clause = tp.Tuple[int, ...]
Formula = tp.Tuple[Clause, ...]

MAX_SAT_VARIABLES = 20

GADGET_INIT = "gadget.init"
GADGET_HUB = "gadget.hub"
GADGET_HIGH = "gadget.high"
GADGET_LOW = "gadget.low"


def _entry_weight(p: PayoffKind, bound: Fraction) -> Fraction:
    if p is PayoffKind.inf:
        return bound + 1
    if p is PayoffKind.sup:
        return -3 * bound - 2
    return Fraction(0)


def value_gadget(g: Arena, p: PayoffKind) -> Arena:
    """
    Arena whose regret encodes the antagonistic value of g.

    A new Eve vertex either enters g or moves to an Adam hub that picks a
    loop of weight W+1 or -3W-2, W being the largest absolute weight of g.
    Then aVal(g) = W + 1 - regret.
    """
    clash = {GADGET_INIT, GADGET_HUB, GADGET_HIGH, GADGET_LOW} & set(
        g.vertices
    )
    if clash:
        raise ValueError(f"Arena already uses gadget vertices {sorted(clash)}")
    bound = g.max_abs_weight
    entry = _entry_weight(p, bound)
    edges = list(g.edges) + [
        Edge(source=GADGET_INIT, target=g.initial, weight=entry),
        Edge(source=GADGET_INIT, target=GADGET_HUB, weight=entry),
        Edge(source=GADGET_HUB, target=GADGET_HIGH, weight=entry),
        Edge(source=GADGET_HUB, target=GADGET_LOW, weight=entry),
        Edge(source=GADGET_HIGH, target=GADGET_HIGH, weight=bound + 1),
        Edge(source=GADGET_LOW, target=GADGET_LOW, weight=-3 * bound - 2),
    ]
    return Arena(
        vertices=(GADGET_INIT,) + g.vertices + (
            GADGET_HUB, GADGET_HIGH, GADGET_LOW,
        ),
        eve_vertices=g.eve_vertices | {GADGET_INIT},
        edges=tuple(edges),
        initial=GADGET_INIT,
    )


def check_formula(phi: tp.Sequence[tp.Sequence[int]]) -> Formula:
    if not phi:
        raise FormulaError("Formula has no clauses")
    for i, clause in enumerate(phi, start=1):
        if not clause:
            raise FormulaError(f"Clause {i} is empty")
        if any(literal == 0 for literal in clause):
            raise FormulaError(f"Clause {i} uses literal 0")
    return tuple(tuple(clause) for clause in phi)


def variables(phi: Formula) -> int:
    return max(abs(literal) for clause in phi for literal in clause)


def brute_sat(phi: tp.Sequence[tp.Sequence[int]]) -> bool:
    """Truth-table satisfiability."""
    formula = check_formula(phi)
    count = variables(formula)
    if count > MAX_SAT_VARIABLES:
        raise FormulaError(
            f"Truth table over {count} variables is too large "
            f"(at most {MAX_SAT_VARIABLES})"
        )
    for values in itertools.product((False, True), repeat=count):
        if all(
            any(values[abs(lit) - 1] == (lit > 0) for lit in clause)
            for clause in formula
        ):
            return True
    return False


class _AutomatonBuilder:

    def __init__(self, alphabet: tp.Sequence[str], sink: str) -> None:
        self.alphabet = tuple(alphabet)
        self.sink = sink
        self.states: tp.List[str] = []
        self.transitions: tp.List[Transition] = []

    def state(self, name: str) -> str:
        if name not in self.states:
            self.states.append(name)
        return name

    def add(self, source: str, letter: str, target: str, weight: int) -> None:
        self.transitions.append(
            Transition(
                source=self.state(source),
                letter=letter,
                target=self.state(target),
                weight=weight,
            )
        )

    def loop(self, state: str, weight: int) -> None:
        for letter in self.alphabet:
            self.add(state, letter, state, weight)

    def build(self, initial: str) -> WeightedAutomaton:
        covered = {(t.source, t.letter) for t in self.transitions}
        missing = [
            Transition(source=q, letter=letter, target=self.sink, weight=0)
            for q in self.states
            for letter in self.alphabet
            if (q, letter) not in covered
        ]
        return WeightedAutomaton(
            states=tuple(self.states),
            initial=initial,
            alphabet=self.alphabet,
            transitions=tuple(self.transitions + missing),
        )


def sat_reduction(
    phi: tp.Sequence[tp.Sequence[int]],
    p: PayoffKind = PayoffKind.liminf,
) -> WeightedAutomaton:
    """
    Automaton where a positional strategy of regret below 1 reads off a
    satisfying valuation of phi.

    Adam announces a clause i, then `sep`, then i again. A deterministic
    branch reaches the sink of weight 1 exactly on `i sep i`; on the other
    branch Eve picks a variable of clause i and a truth value for it, and
    reaches a sink of weight 1 only if that literal satisfies the clause
    read last. The truth value states are shared by all clauses, so a run
    may also answer a clause it was not asked about. An entry gadget
    forces Eve onto the second branch: after one letter Adam may play
    `bail`, which pays 2 there and 0 on the first.
    Every other move falls into a sink of weight 0. Transitions outside
    the sinks weigh 2 for Inf, 0 for Sup and 1 otherwise.
    """
    formula = check_formula(phi)
    clauses = [str(i) for i in range(1, len(formula) + 1)]
    alphabet = ["bail", "sep"] + clauses
    path = {PayoffKind.inf: 2, PayoffKind.sup: 0}.get(p, 1)
    builder = _AutomatonBuilder(alphabet, sink="bottom.0")

    builder.state("entry")
    for letter in alphabet:
        builder.add("entry", letter, "clause.start", path)
        builder.add("entry", letter, "value.start", path)
    builder.add("clause.start", "bail", "bottom.0", path)
    builder.add("value.start", "bail", "bottom.2", path)

    for i, clause in zip(clauses, formula):
        builder.add("clause.start", i, f"clause.{i}", path)
        builder.add(f"clause.{i}", "sep", f"clause.{i}.sep", path)
        builder.add(f"clause.{i}.sep", i, "clause.sink", path)
        for var in sorted({abs(lit) for lit in clause}):
            builder.add("value.start", i, f"value.x{var}", path)

    for var in range(1, variables(formula) + 1):
        for truth in (True, False):
            chosen = f"value.x{var}.{'true' if truth else 'false'}"
            builder.add(f"value.x{var}", "sep", chosen, path)
            for i, clause in zip(clauses, formula):
                literal = var if truth else -var
                if literal in clause:
                    builder.add(chosen, i, "value.sink", path)

    builder.loop("clause.sink", 1)
    builder.loop("value.sink", 1)
    builder.loop("bottom.0", 0)
    builder.loop("bottom.2", 2)
    return builder.build("entry")


def random_arena(
    n_vertices: int,
    max_outdeg: int,
    weights: tp.Tuple[int, int],
    eve_fraction: Fraction,
    seed: int,
) -> Arena:
    """
    Total arena drawn from `seed` only.

    Weights are integers in the inclusive range `weights`; every vertex gets
    between one and `max_outdeg` distinct successors.
    """
    if n_vertices < 1 or max_outdeg < 1:
        raise ValueError("Arena needs a vertex and an edge per vertex")
    low, high = weights
    if low > high:
        raise ValueError(f"Empty weight range {weights}")
    rng = random.Random(seed)
    vertices = tuple(f"v{i}" for i in range(n_vertices))
    eve_count = round(Fraction(eve_fraction) * n_vertices)
    eve = frozenset(rng.sample(vertices, eve_count))
    edges = []
    for source in vertices:
        degree = rng.randint(1, min(max_outdeg, n_vertices))
        for target in rng.sample(vertices, degree):
            edges.append(
                Edge(
                    source=source,
                    target=target,
                    weight=rng.randint(low, high),
                )
            )
    return Arena(
        vertices=vertices,
        eve_vertices=eve,
        edges=tuple(edges),
        initial=vertices[0],
    )


def random_automaton(
    n_states: int,
    max_branching: int,
    weights: tp.Tuple[int, int],
    alphabet: tp.Sequence[str],
    seed: int,
) -> WeightedAutomaton:
    """
    Total automaton drawn from `seed` only.

    Every state reads every letter towards one to `max_branching` distinct
    successors, with integer weights in the inclusive range `weights`.
    """
    if n_states < 1 or max_branching < 1 or not alphabet:
        raise ValueError("Automaton needs a state, a letter and a move")
    low, high = weights
    if low > high:
        raise ValueError(f"Empty weight range {weights}")
    rng = random.Random(seed)
    states = tuple(f"q{i}" for i in range(n_states))
    transitions = []
    for source in states:
        for letter in alphabet:
            degree = rng.randint(1, min(max_branching, n_states))
            for target in rng.sample(states, degree):
                transitions.append(
                    Transition(
                        source=source,
                        letter=letter,
                        target=target,
                        weight=rng.randint(low, high),
                    )
                )
    return WeightedAutomaton(
        states=states,
        initial=states[0],
        alphabet=tuple(alphabet),
        transitions=tuple(transitions),
    )


def random_cnf(
    n_variables: int,
    n_clauses: int,
    width: int,
    seed: int,
) -> Formula:
    """Random formula with clauses over `width` distinct variables."""
    rng = random.Random(seed)
    width = min(width, n_variables)
    return tuple(
        tuple(
            var if rng.random() < 0.5 else -var
            for var in sorted(rng.sample(range(1, n_variables + 1), width))
        )
        for _ in range(n_clauses)
    )
