"""Extending and totally extending words for small subsets.

``shortest_extending_word_small`` searches the automaton whose nodes are the
subsets of at most |S| states.  A node A counts as *initial with letter a*
when the letter-preimage of A is larger than |S| (preimages of distinct
states are disjoint, so the size is a per-state table sum).  One multi-source
forward BFS from all initial nodes, stopped at the first node contained in
S, yields a shortest extending word: the initial letter followed by the path
word.  Restricting nodes to size at most |S| is sound because a shortest
extending word ``aw`` forces ``|S . w^-1| <= |S|``.

``totally_extending_word_small`` first drives Q to an incompressible image
via a minimal-rank word u, then searches the fixed-size image space for a
subset of S; the result ``u . path`` is correct but not necessarily
shortest.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from math import comb
from typing import Optional, Union

from .automaton import Automaton, StateSet, Word, apply_word, scc
from .errors import BudgetExceededError, DEFAULT_NODE_BUDGET, NotSynchronizingError
from .pairs import greedy_reset_word, is_synchronizing, minimal_rank_word


def _reconstruct(visited: dict[int, tuple[int, int]], goal_bits: int) -> list[int]:
    """Letters from a source node to ``goal_bits``, including the source's
    recorded initial letter at the front."""
    letters: list[int] = []
    bits = goal_bits
    while True:
        letter, parent = visited[bits]
        letters.append(letter)
        if parent < 0:
            break
        bits = parent
    letters.reverse()
    return letters


def shortest_extending_word_small(aut: Automaton, s: StateSet,
                                  budget: int = DEFAULT_NODE_BUDGET,
                                  stats: Optional[dict] = None) -> Optional[Word]:
    """A shortest word w with |S . w^-1| > |S|, or None if S is not extensible.

    Cost grows like O(|Sigma| n^|S|); the node budget turns runaway searches
    into a BudgetExceededError rather than a wrong answer.
    """
    aut.check_set(s)
    n, k = aut.n, aut.k
    size = s.size
    if size == 0 or size == n:
        return None

    estimate = sum(comb(n, j) for j in range(1, size + 1))
    if estimate > budget:
        raise BudgetExceededError(
            f"subset space of {estimate} nodes exceeds budget {budget}", estimate)

    # c[a][q] = |{q} . a^-1|
    counts = [[aut.preimage_masks(a)[q].bit_count() for q in range(n)] for a in range(k)]

    visited: dict[int, tuple[int, int]] = {}  # bits -> (letter into word, parent bits or -1)
    queue: deque[tuple[int, tuple[int, ...]]] = deque()
    s_bits = s.bits

    for subset_size in range(1, size + 1):
        for states in combinations(range(n), subset_size):
            for a in range(k):
                row = counts[a]
                if sum(row[q] for q in states) > size:
                    bits = 0
                    for q in states:
                        bits |= 1 << q
                    visited[bits] = (a, -1)
                    if bits & ~s_bits == 0:
                        if stats is not None:
                            stats["nodes"] = len(visited)
                        return Word(_reconstruct(visited, bits))
                    queue.append((bits, states))
                    break

    while queue:
        bits, states = queue.popleft()
        for a in range(k):
            succ = aut.by_letter[a]
            child_states = tuple(sorted({succ[q] for q in states}))
            child_bits = 0
            for q in child_states:
                child_bits |= 1 << q
            if child_bits in visited:
                continue
            visited[child_bits] = (a, bits)
            if len(visited) > budget:
                raise BudgetExceededError(f"extend search exceeded budget {budget}", len(visited))
            if child_bits & ~s_bits == 0:
                if stats is not None:
                    stats["nodes"] = len(visited)
                return Word(_reconstruct(visited, child_bits))
            queue.append((child_bits, child_states))

    if stats is not None:
        stats["nodes"] = len(visited)
    return None


def totally_extending_word_small(aut: Automaton, s: StateSet,
                                 budget: int = DEFAULT_NODE_BUDGET,
                                 stats: Optional[dict] = None) -> Optional[Word]:
    """A word w with S . w^-1 = Q, or None; not guaranteed shortest.

    None is definitive: the minimal rank exceeding |S| rules a totally
    extending word out, and otherwise the search space (images of the
    incompressible minimal image, all of the same size) is explored fully.
    """
    aut.check_set(s)
    rank = minimal_rank_word(aut)
    if rank.rank > s.size:
        return None

    s_bits = s.bits
    start = rank.image.bits
    if start & ~s_bits == 0:
        if stats is not None:
            stats["nodes"] = 1
        return rank.word

    visited: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue: deque[int] = deque([start])
    r = rank.rank
    while queue:
        bits = queue.popleft()
        for a in range(aut.k):
            child = aut.image_bits(bits, a)
            if child in visited:
                continue
            assert child.bit_count() == r, "image of an incompressible set changed size"
            visited[child] = (a, bits)
            if len(visited) > budget:
                raise BudgetExceededError(
                    f"totally-extending search exceeded budget {budget}", len(visited))
            if child & ~s_bits == 0:
                if stats is not None:
                    stats["nodes"] = len(visited)
                letters: list[int] = []
                cur = child
                while visited[cur][0] >= 0:
                    letter, parent = visited[cur]
                    letters.append(letter)
                    cur = parent
                letters.reverse()
                return rank.word + Word(letters)
            queue.append(child)

    if stats is not None:
        stats["nodes"] = len(visited)
    return None


def totally_extensible_synchronizing(aut: Automaton, s: StateSet, witness: bool = False
                                     ) -> Union[bool, tuple[bool, Optional[Word]]]:
    """Fast path for synchronizing automata: S is totally extensible iff it
    meets the unique sink component.

    Raises NotSynchronizingError otherwise.  The optional witness (reset
    word, then a path into S inside the sink component) is not shortest.
    """
    aut.check_set(s)
    if not is_synchronizing(aut):
        raise NotSynchronizingError("totally_extensible_synchronizing needs a synchronizing automaton")

    comps = scc(aut)
    sink_ids = comps.sink_components()
    assert len(sink_ids) == 1, "a synchronizing automaton has exactly one sink component"
    sink_members = comps.components[sink_ids[0]]
    decision = any(q in s for q in sink_members)
    if not witness:
        return decision
    if not decision:
        return False, None

    reset = greedy_reset_word(aut)
    p = next(iter(apply_word(aut, StateSet.full(aut.n), reset)))
    # BFS from p to the nearest state of S (all of S's sink states qualify).
    targets = s.bits
    prev: dict[int, tuple[int, int]] = {p: (-1, -1)}
    queue = deque([p])
    goal = p if (targets >> p) & 1 else -1
    while queue and goal < 0:
        q = queue.popleft()
        for a in range(aut.k):
            nxt = aut.rows[q][a]
            if nxt in prev:
                continue
            prev[nxt] = (a, q)
            if (targets >> nxt) & 1:
                goal = nxt
                break
            queue.append(nxt)
    assert goal >= 0, "sink component state must be reachable from the reset state"
    letters: list[int] = []
    cur = goal
    while prev[cur][0] >= 0:
        letter, parent = prev[cur]
        letters.append(letter)
        cur = parent
    letters.reverse()
    return True, reset + Word(letters)
