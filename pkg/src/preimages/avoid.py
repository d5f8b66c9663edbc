"""Finding a word whose image misses a given subset of states.

The search follows the minimal-rank characterization: with u a word of
minimal rank, group states into classes by their image under u.  A word
avoiding S exists iff some z-subset of Q.u (z = number of classes meeting S)
can be driven to hit every such class outside S.  Since subsets of the
incompressible image Q.u never change size under the action, one
multi-source BFS over exact-size-z subsets decides the question; on success
the answer is u followed by the path word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .automaton import Automaton, StateSet, Word
from .errors import BudgetExceededError, DEFAULT_NODE_BUDGET
from .pairs import minimal_rank_word


@dataclass(frozen=True)
class RankPartition:
    """Partition of Q by the action of a minimal-rank word u.

    Two states share a class iff u maps them to the same state; class i is
    exactly ``representatives[i] . u^-1``.  ``z`` counts the classes that
    intersect the query subset S.
    """

    word: Word
    image: StateSet
    classes: tuple[StateSet, ...]
    class_index: tuple[int, ...]
    representatives: tuple[int, ...]
    z: int


def rank_partition(aut: Automaton, s: StateSet) -> RankPartition:
    aut.check_set(s)
    rank = minimal_rank_word(aut)
    u = tuple(rank.word)
    image_of: list[int] = list(range(aut.n))
    for a in u:
        succ = aut.by_letter[a]
        image_of = [succ[q] for q in image_of]

    reps = sorted(set(image_of))
    rep_index = {p: i for i, p in enumerate(reps)}
    class_bits = [0] * len(reps)
    class_index = [0] * aut.n
    for q, p in enumerate(image_of):
        ci = rep_index[p]
        class_index[q] = ci
        class_bits[ci] |= 1 << q

    z = sum(1 for bits in class_bits if bits & s.bits)
    assert len(reps) == rank.rank
    return RankPartition(
        word=rank.word,
        image=rank.image,
        classes=tuple(StateSet(aut.n, bits) for bits in class_bits),
        class_index=tuple(class_index),
        representatives=tuple(reps),
        z=z,
    )


def avoiding_word(aut: Automaton, s: StateSet, budget: int = DEFAULT_NODE_BUDGET,
                  stats: Optional[dict] = None) -> Optional[Word]:
    """A word w with (Q . w) disjoint from S, or None iff S is unavoidable.

    The empty subset is avoided by the empty word; S = Q is never avoidable
    because images are never empty.  A word is returned only after the goal
    test certifies one state per S-touching class, each outside S.
    """
    aut.check_set(s)
    if s.size == 0:
        return Word()
    if s.size == aut.n:
        return None

    part = rank_partition(aut, s)
    z = part.z
    s_bits = s.bits
    class_meets_s = tuple(bool(c.bits & s_bits) for c in part.classes)
    class_index = part.class_index

    def is_goal(states: tuple[int, ...]) -> bool:
        # Nodes hold at most one state per class, so counting suffices.
        hits = 0
        for q in states:
            if class_meets_s[class_index[q]] and not (s_bits >> q) & 1:
                hits += 1
        return hits == z

    image_states = sorted(part.image)
    visited: dict[int, tuple[int, int]] = {}
    queue: deque[tuple[int, tuple[int, ...]]] = deque()
    nodes = 0

    for source in combinations(image_states, z):
        bits = 0
        for q in source:
            bits |= 1 << q
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"avoid search exceeded budget {budget}", nodes)
        visited[bits] = (-1, -1)
        if is_goal(source):
            if stats is not None:
                stats["nodes"] = nodes
            return part.word
        queue.append((bits, source))

    while queue:
        bits, states = queue.popleft()
        for a in range(aut.k):
            succ = aut.by_letter[a]
            child_states = tuple(sorted({succ[q] for q in states}))
            child_bits = 0
            for q in child_states:
                child_bits |= 1 << q
            if child_bits in visited:
                continue
            assert len(child_states) == z, "image of a subset of the minimal image changed size"
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"avoid search exceeded budget {budget}", nodes)
            visited[child_bits] = (a, bits)
            if is_goal(child_states):
                if stats is not None:
                    stats["nodes"] = nodes
                letters: list[int] = []
                cur = child_bits
                while visited[cur][0] >= 0:
                    letter, parent = visited[cur]
                    letters.append(letter)
                    cur = parent
                letters.reverse()
                return part.word + Word(letters)
            queue.append((child_bits, child_states))

    if stats is not None:
        stats["nodes"] = nodes
    return None
