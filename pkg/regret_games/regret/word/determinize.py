"""
Deterministic automata for the word variant.

`determinize_liminf` runs one breakpoint monitor per weight threshold in
lockstep. `determinize_buchi_to_parity` follows Safra trees whose node
names are kept compact and ordered by age, which turns the tree dynamics
into transition priorities directly.
"""

import typing as tp
from collections import deque
from fractions import Fraction

import networkx as nx

from regret_games.log import solver_logger
from regret_games.models.automaton import WeightedAutomaton
from regret_games.models.monitors import (
    Acceptance,
    DeterministicParityAutomaton,
    DeterministicWeightedAutomaton,
    ThresholdMonitor,
)

StateSet = tp.FrozenSet[int]


def threshold_monitor(
    a: WeightedAutomaton,
    x: Fraction,
    kind: Acceptance = Acceptance.buchi,
) -> ThresholdMonitor:
    """Marks the transitions of weight at least x."""
    marked = frozenset(
        i for i, trans in enumerate(a.transitions) if trans.weight >= x
    )
    return ThresholdMonitor(
        automaton=a, threshold=x, marked=marked, acceptance=kind,
    )


class _Successors:
    """Subset successors on state indices, optionally through marked moves."""

    def __init__(
        self,
        a: WeightedAutomaton,
        marked: tp.Optional[tp.AbstractSet[int]] = None,
    ) -> None:
        index = {q: i for i, q in enumerate(a.states)}
        self.table: tp.Dict[tp.Tuple[int, str], tp.FrozenSet[int]] = {}
        for q in a.states:
            for letter in a.alphabet:
                self.table[(index[q], letter)] = frozenset(
                    index[a.transitions[i].target]
                    for i in a.moves(q, letter)
                    if marked is None or i in marked
                )

    def __call__(self, states: tp.Iterable[int], letter: str) -> StateSet:
        found: tp.Set[int] = set()
        for q in states:
            found |= self.table[(q, letter)]
        return frozenset(found)


LimInfState = tp.Tuple[StateSet, tp.Tuple[StateSet, ...]]


def determinize_liminf(a: WeightedAutomaton) -> DeterministicWeightedAutomaton:
    """
    Deterministic automaton with the same LimInf value on every word.

    The monitor for threshold x tracks the states reached by runs that used
    only transitions of weight >= x since its last breakpoint. It flags a
    breakpoint when that obligation set dies out and restarts from all
    reachable states. A word has value >= x iff that monitor flags finitely
    often. A transition outputs the threshold just below the smallest
    flagging one, or the largest weight when nothing flags.
    """
    thresholds = a.weights
    step = _Successors(a)
    good = [
        _Successors(a, threshold_monitor(a, x, Acceptance.cobuchi).marked)
        for x in thresholds
    ]
    start_set = frozenset([a.states.index(a.initial)])
    start: LimInfState = (start_set, (start_set,) * len(thresholds))
    ids = {start: 0}
    queue = deque([start])
    delta: tp.Dict[tp.Tuple[int, str], tp.Tuple[int, Fraction]] = {}
    while queue:
        reach, obligations = queue.popleft()
        for letter in a.alphabet:
            next_reach = step(reach, letter)
            next_obligations = []
            output = thresholds[-1]
            for i, obligation in enumerate(obligations):
                moved = good[i](obligation, letter)
                if not moved:
                    moved = next_reach
                    output = min(output, thresholds[max(i - 1, 0)])
                next_obligations.append(moved)
            key = (next_reach, tuple(next_obligations))
            if key not in ids:
                ids[key] = len(ids)
                queue.append(key)
            delta[(ids[(reach, obligations)], letter)] = (ids[key], output)

    solver_logger.debug(
        "LimInf determinization: states=%d, thresholds=%d",
        len(ids),
        len(thresholds),
    )
    return DeterministicWeightedAutomaton(
        size=len(ids), initial=0, alphabet=a.alphabet, delta=delta,
    )


class _Node(tp.NamedTuple):
    parent: int
    label: StateSet


# Nodes ordered by age; parent -1 marks the root.
Tree = tp.Tuple[_Node, ...]


class _Safra:

    def __init__(self, monitor: ThresholdMonitor) -> None:
        a = monitor.automaton
        self.step = _Successors(a)
        self.marked_step = _Successors(a, monitor.marked)
        self.neutral = 4 * len(a.states) + 1

    def _children(self, parents: tp.List[int]) -> tp.Dict[int, tp.List[int]]:
        children: tp.Dict[int, tp.List[int]] = {}
        for node, parent in enumerate(parents):
            if parent >= 0:
                children.setdefault(parent, []).append(node)
        return children

    def advance(self, tree: Tree, letter: str) -> tp.Tuple[Tree, int]:
        parents = [node.parent for node in tree]
        labels = [set(self.step(node.label, letter)) for node in tree]
        for i, node in enumerate(tree):
            parents.append(i)
            labels.append(set(self.marked_step(node.label, letter)))

        children = self._children(parents)

        def prune(node: int, forbidden: tp.Set[int]) -> None:
            labels[node] -= forbidden
            seen: tp.Set[int] = set()
            for child in children.get(node, []):
                prune(child, forbidden | seen)
                seen |= labels[child]

        prune(0, set())

        alive = [bool(label) for label in labels]
        marked = [False] * len(labels)
        for node in range(len(labels)):
            if not alive[node]:
                continue
            kids = [c for c in children.get(node, []) if alive[c]]
            covered = set().union(*(labels[c] for c in kids))
            if kids and covered == labels[node]:
                marked[node] = True
                stack = list(kids)
                while stack:
                    dropped = stack.pop()
                    alive[dropped] = False
                    stack.extend(children.get(dropped, []))

        names = {}
        for node in range(len(labels)):
            if alive[node]:
                names[node] = len(names)
        result = tuple(
            _Node(
                names[parents[node]] if parents[node] >= 0 else -1,
                frozenset(labels[node]),
            )
            for node in names
        )

        erased = min(
            (node + 1 for node in range(len(labels)) if not alive[node]),
            default=None,
        )
        accepted = min(
            (names[node] + 1 for node in names if marked[node]),
            default=None,
        )
        if accepted is not None and (erased is None or accepted < erased):
            return result, 2 * accepted
        if erased is not None:
            return result, 2 * erased - 1
        return result, self.neutral


def _cyclic_priorities(
    edges: tp.List[tp.Tuple[int, int, str, int]],
    base: int,
    assigned: tp.Dict[tp.Tuple[int, str], int],
) -> None:
    graph = nx.MultiDiGraph()
    for source, target, letter, priority in edges:
        graph.add_edge(source, target, key=letter, priority=priority)
    for component in nx.strongly_connected_components(graph):
        inner = [
            e for e in edges if e[0] in component and e[1] in component
        ]
        if not inner:
            continue
        least = min(e[3] for e in inner)
        value = base if base % 2 == least % 2 else base + 1
        rest = []
        for edge in inner:
            assigned[(edge[0], edge[2])] = value
            if edge[3] != least:
                rest.append(edge)
        _cyclic_priorities(rest, value, assigned)


def compress_priorities(
    dpa: DeterministicParityAutomaton,
) -> DeterministicParityAutomaton:
    """
    Same automaton with as few priorities as its cycles allow.

    Every cycle keeps the parity of its least priority. Transitions on no
    cycle get the largest priority in use.
    """
    edges = [
        (source, target, letter, priority)
        for (source, letter), (target, priority) in dpa.delta.items()
    ]
    assigned: tp.Dict[tp.Tuple[int, str], int] = {}
    _cyclic_priorities(edges, 0, assigned)
    top = max(assigned.values(), default=0)
    return DeterministicParityAutomaton(
        size=dpa.size,
        initial=dpa.initial,
        alphabet=dpa.alphabet,
        delta={
            key: (target, assigned.get(key, top))
            for key, (target, _) in dpa.delta.items()
        },
    )


def determinize_buchi_to_parity(
    monitor: ThresholdMonitor,
) -> DeterministicParityAutomaton:
    """
    Deterministic parity automaton accepting the monitor's Buchi language.

    Erasing the node named i emits 2i-1 and marking it emits 2i; names
    shift down only when an older node is erased. A word is accepted iff
    some name eventually stops shifting and is marked infinitely often.
    """
    a = monitor.automaton
    safra = _Safra(monitor)
    start: Tree = (_Node(-1, frozenset([a.states.index(a.initial)])),)
    ids = {start: 0}
    queue = deque([start])
    delta: tp.Dict[tp.Tuple[int, str], tp.Tuple[int, int]] = {}
    while queue:
        tree = queue.popleft()
        for letter in a.alphabet:
            following, priority = safra.advance(tree, letter)
            if following not in ids:
                ids[following] = len(ids)
                queue.append(following)
            delta[(ids[tree], letter)] = (ids[following], priority)

    dpa = compress_priorities(
        DeterministicParityAutomaton(
            size=len(ids), initial=0, alphabet=a.alphabet, delta=delta,
        )
    )
    solver_logger.debug(
        "Parity determinization at threshold %s: states=%d, max priority=%d",
        monitor.threshold,
        dpa.size,
        dpa.max_priority,
    )
    return dpa
