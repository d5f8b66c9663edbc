"""Exhaustive subset-space searches: desk-scale ground truth.

Both directions walk the full power set, so they are capped (by default at
20 states) and guarded by an explicit node limit.  Depths are exact shortest
distances; every stored back-pointer reconstructs a word of exactly that
depth.  The preimage direction prepends letters while walking back-pointers,
because ``(S . w^-1) . a^-1 == S . (aw)^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .automaton import Automaton, StateSet, Word
from .errors import BudgetExceededError, DEFAULT_NODE_BUDGET, DEFAULT_ORACLE_STATE_CAP

GOALS = ("extending", "totally-extending", "avoiding", "resizing")


@dataclass
class SubsetBfsResult:
    """Reached subsets with shortest depths and back-pointers.

    ``reached`` maps each subset bit pattern to ``(depth, letter, predecessor
    bits)``; the origin has letter/predecessor -1.  Insertion order equals
    generation order (FIFO, letters ascending), so iterating ``reached`` and
    taking the first match reproduces what an early-stopping search returns.
    """

    n: int
    origin: int
    direction: str  # "preimage" | "image"
    reached: dict[int, tuple[int, int, int]] = field(default_factory=dict)

    def depth(self, s: StateSet) -> Optional[int]:
        entry = self.reached.get(s.bits)
        return None if entry is None else entry[0]

    def word_to(self, bits: int) -> Word:
        """Reconstruct the word whose action produced the given subset."""
        letters: list[int] = []
        entry = self.reached[bits]
        while entry[1] >= 0:
            letters.append(entry[1])
            entry = self.reached[entry[2]]
        if self.direction == "image":
            letters.reverse()
        return Word(letters)

    def first_match(self, want: Callable[[int, int], bool]) -> Optional[tuple[Word, int, int]]:
        """First generated subset with ``want(bits, depth)``: (word, length, bits)."""
        for bits, (depth, _, _) in self.reached.items():
            if want(bits, depth):
                return self.word_to(bits), depth, bits
        return None


def _subset_bfs(aut: Automaton, start_bits: int, step, node_limit: int, state_cap: int,
                direction: str) -> SubsetBfsResult:
    if aut.n > state_cap:
        raise BudgetExceededError(
            f"power-set search refused: n={aut.n} exceeds cap {state_cap}")
    result = SubsetBfsResult(n=aut.n, origin=start_bits, direction=direction)
    reached = result.reached
    reached[start_bits] = (0, -1, -1)
    frontier = [start_bits]
    k = aut.k
    depth = 0
    while frontier:
        depth += 1
        next_frontier = []
        for bits in frontier:
            for a in range(k):
                child = step(bits, a)
                if child not in reached:
                    reached[child] = (depth, a, bits)
                    next_frontier.append(child)
                    if len(reached) > node_limit:
                        raise BudgetExceededError(
                            f"subset BFS exceeded node limit {node_limit}", len(reached))
        frontier = next_frontier
    return result


def backward_subset_bfs(aut: Automaton, s: StateSet, node_limit: int = DEFAULT_NODE_BUDGET,
                        state_cap: int = DEFAULT_ORACLE_STATE_CAP) -> SubsetBfsResult:
    """All subsets reachable from S by iterated single-letter preimages."""
    aut.check_set(s)
    return _subset_bfs(aut, s.bits, aut.preimage_bits, node_limit, state_cap, "preimage")


def forward_subset_bfs(aut: Automaton, t0: Optional[StateSet] = None,
                       node_limit: int = DEFAULT_NODE_BUDGET,
                       state_cap: int = DEFAULT_ORACLE_STATE_CAP) -> SubsetBfsResult:
    """All subsets reachable from T0 (default Q) by single-letter images."""
    if t0 is None:
        t0 = StateSet.full(aut.n)
    aut.check_set(t0)
    return _subset_bfs(aut, t0.bits, aut.image_bits, node_limit, state_cap, "image")


def goal_predicate(goal: str, aut: Automaton, s: StateSet) -> Callable[[int, int], bool]:
    size = s.size
    full = (1 << aut.n) - 1
    if goal == "extending":
        return lambda bits, depth: bits.bit_count() > size
    if goal == "totally-extending":
        return lambda bits, depth: bits == full
    if goal == "avoiding":
        return lambda bits, depth: bits == 0
    if goal == "resizing":
        return lambda bits, depth: depth > 0 and bits.bit_count() != size
    raise ValueError(f"unknown goal {goal!r}; expected one of {GOALS}")


def oracle_shortest(aut: Automaton, s: StateSet, goal: str,
                    node_limit: int = DEFAULT_NODE_BUDGET,
                    state_cap: int = DEFAULT_ORACLE_STATE_CAP,
                    result: Optional[SubsetBfsResult] = None) -> Optional[tuple[Word, int]]:
    """Shortest word for one of the preimage goals, or None.

    goal: "extending" (first preimage larger than S), "totally-extending"
    (preimage Q), "avoiding" (preimage of S shrinks to the empty set), or
    "resizing" (first preimage of a different size).  An already-computed
    ``backward_subset_bfs`` result for the same (automaton, S) may be passed
    to answer several goals from one search.
    """
    aut.check_set(s)
    if result is None:
        result = backward_subset_bfs(aut, s, node_limit, state_cap)
    hit = result.first_match(goal_predicate(goal, aut, s))
    if hit is None:
        return None
    word, length, _ = hit
    return word, length


def oracle_shortest_reset(aut: Automaton, node_limit: int = DEFAULT_NODE_BUDGET,
                          state_cap: int = DEFAULT_ORACLE_STATE_CAP) -> Optional[tuple[Word, int]]:
    """Exact shortest reset word via forward power-set BFS."""
    result = forward_subset_bfs(aut, None, node_limit, state_cap)
    hit = result.first_match(lambda bits, depth: bits.bit_count() == 1)
    if hit is None:
        return None
    word, length, _ = hit
    return word, length


def oracle_min_rank(aut: Automaton, node_limit: int = DEFAULT_NODE_BUDGET,
                    state_cap: int = DEFAULT_ORACLE_STATE_CAP) -> int:
    """Smallest image cardinality over all words (exhaustive)."""
    result = forward_subset_bfs(aut, None, node_limit, state_cap)
    return min(bits.bit_count() for bits in result.reached)
