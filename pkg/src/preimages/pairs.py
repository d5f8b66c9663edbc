"""Pair-automaton machinery: compressible pairs and what they buy us.

The backward breadth-first search over the pair automaton yields, for every
unordered pair of states, the exact length of a shortest word merging the
pair (infinite when the pair can never be merged).  On top of the table sit
the synchronization check, a greedy reset word, minimal-rank words, and the
avoidability decision for single states.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automaton import Automaton, StateSet, Word, apply_word, scc


class PairTable:
    """Shortest compressing-word lengths for all unordered state pairs.

    ``dist`` is indexed by ``p * n + q`` with ``p < q``; -1 encodes
    "not compressible".  Back-pointers allow exact reconstruction of a
    shortest merging word per pair.
    """

    __slots__ = ("n", "dist", "_via")

    def __init__(self, n: int, dist: list[int], via: list[Optional[tuple[int, int]]]):
        self.n = n
        self.dist = dist
        self._via = via

    def _idx(self, p: int, q: int) -> int:
        if p == q:
            raise ValueError("a pair consists of two distinct states")
        if not (0 <= p < self.n and 0 <= q < self.n):
            raise ValueError("state out of range")
        if p > q:
            p, q = q, p
        return p * self.n + q

    def length(self, p: int, q: int) -> Optional[int]:
        """Length of a shortest word merging {p, q}, or None."""
        d = self.dist[self._idx(p, q)]
        return None if d < 0 else d

    def compressible(self, p: int, q: int) -> bool:
        return self.dist[self._idx(p, q)] >= 0

    def word(self, p: int, q: int) -> Optional[Word]:
        """A shortest word merging {p, q}; its length equals ``length(p, q)``."""
        i = self._idx(p, q)
        if self.dist[i] < 0:
            return None
        letters = []
        via = self._via[i]
        while via is not None:
            a, succ = via
            letters.append(a)
            via = self._via[succ] if succ >= 0 else None
        return Word(letters)

    def all_compressible(self) -> bool:
        n = self.n
        return all(self.dist[p * n + q] >= 0 for p in range(n) for q in range(p + 1, n))


def pair_table(aut: Automaton) -> PairTable:
    """Multi-source backward BFS from all directly merged pairs."""
    cached = aut._derived.get("pair_table")
    if cached is not None:
        return cached

    n, k = aut.n, aut.k
    rows = aut.rows
    dist = [-1] * (n * n)
    via: list[Optional[tuple[int, int]]] = [None] * (n * n)
    queue: deque[int] = deque()

    for p in range(n):
        row_p = rows[p]
        for q in range(p + 1, n):
            row_q = rows[q]
            for a in range(k):
                if row_p[a] == row_q[a]:
                    i = p * n + q
                    dist[i] = 1
                    via[i] = (a, -1)
                    queue.append(i)
                    break

    # inv[a][q] = states mapped to q by letter a
    inv: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for a in range(k):
        for p, q in enumerate(aut.by_letter[a]):
            inv[a][q].append(p)

    while queue:
        i = queue.popleft()
        d = dist[i]
        p, q = divmod(i, n)
        for a in range(k):
            for x in inv[a][p]:
                for y in inv[a][q]:
                    if x == y:
                        continue
                    j = x * n + y if x < y else y * n + x
                    if dist[j] < 0:
                        dist[j] = d + 1
                        via[j] = (a, i)
                        queue.append(j)

    table = PairTable(n, dist, via)
    aut._derived["pair_table"] = table
    return table


def is_synchronizing(aut: Automaton) -> bool:
    """True iff every pair of states is compressible (classic criterion)."""
    cached = aut._derived.get("synchronizing")
    if cached is None:
        cached = pair_table(aut).all_compressible()
        aut._derived["synchronizing"] = cached
    return cached


def known_synchronizing(aut: Automaton) -> Optional[bool]:
    """The cached synchronization flag, or None when not yet computed."""
    return aut._derived.get("synchronizing")


def _best_pair_in(bits: int, table: PairTable) -> Optional[tuple[int, int]]:
    """Compressible pair inside the given image with the shortest merging
    word; ties broken by smallest (p, q)."""
    states = []
    while bits:
        low = bits & -bits
        states.append(low.bit_length() - 1)
        bits ^= low
    best = None
    best_d = -1
    n = table.n
    for i, p in enumerate(states):
        base = p * n
        for q in states[i + 1:]:
            d = table.dist[base + q]
            if d >= 0 and (best is None or d < best_d):
                best, best_d = (p, q), d
    return best


def greedy_reset_word(aut: Automaton) -> Optional[Word]:
    """A reset word built by repeated pair compression (not the shortest).

    Returns None when the automaton is not synchronizing.
    """
    if not is_synchronizing(aut):
        return None
    table = pair_table(aut)
    bits = (1 << aut.n) - 1
    letters: list[int] = []
    guard = aut.n * aut.n * aut.n
    while bits.bit_count() > 1:
        p, q = _best_pair_in(bits, table)  # synchronizing => always found
        w = table.word(p, q)
        letters.extend(w)
        for a in w:
            bits = aut.image_bits(bits, a)
        if len(letters) > guard:
            raise AssertionError("greedy reset loop exceeded its length guard")
    return Word(letters)


@dataclass(frozen=True)
class RankResult:
    """A word of minimal rank together with its (incompressible) image."""

    word: Word
    image: StateSet
    rank: int


def minimal_rank_word(aut: Automaton) -> RankResult:
    """Iterated pair compression from Q until the image is incompressible.

    The resulting image size equals the minimal rank over all words: any
    word's image contains an image of the incompressible set, which no word
    can shrink.
    """
    cached = aut._derived.get("min_rank")
    if cached is not None:
        return cached

    table = pair_table(aut)
    bits = (1 << aut.n) - 1
    letters: list[int] = []
    while bits.bit_count() > 1:
        pair = _best_pair_in(bits, table)
        if pair is None:
            break
        w = table.word(*pair)
        letters.extend(w)
        for a in w:
            bits = aut.image_bits(bits, a)
    result = RankResult(Word(letters), StateSet(aut.n, bits), bits.bit_count())
    aut._derived["min_rank"] = result
    return result


def induced_automaton(aut: Automaton, component: tuple[int, ...]) -> Automaton:
    """Sub-automaton on a sink component (all transitions stay inside)."""
    relabel = {q: i for i, q in enumerate(component)}
    rows = []
    for q in component:
        row = []
        for a in range(aut.k):
            p = aut.rows[q][a]
            if p not in relabel:
                raise ValueError("component is not closed under the transitions")
            row.append(relabel[p])
        rows.append(row)
    return Automaton(rows)


def avoidable_state(aut: Automaton, q: int, witness: bool = False):
    """Is there a word whose image misses state ``q``?

    Decision logic: with a cached positive synchronization flag the answer is
    "q is not a sink state"; otherwise states outside every sink component
    are avoidable, and a state inside a sink component is avoidable iff it
    belongs to a compressible pair of that component's sub-automaton.

    With ``witness=True`` returns ``(decision, word-or-None)`` where the word
    comes from the subset-avoidance search on ``{q}``.
    """
    if not 0 <= q < aut.n:
        raise ValueError(f"state {q} out of range [0, {aut.n})")

    flag = known_synchronizing(aut)
    if flag:
        decision = not all(aut.rows[q][a] == q for a in range(aut.k))
    else:
        comps = scc(aut)
        cid = comps.component_of[q]
        if not comps.sink_flags[cid]:
            decision = True
        else:
            component = comps.components[cid]
            if len(component) == 1:
                decision = False
            else:
                sub = induced_automaton(aut, component)
                sub_q = component.index(q)
                table = pair_table(sub)
                decision = any(table.compressible(sub_q, p) for p in range(sub.n) if p != sub_q)

    if not witness:
        return decision
    if not decision:
        return False, None
    from . import avoid  # local import; avoid builds on this module

    word = avoid.avoiding_word(aut, StateSet.from_states(aut.n, [q]))
    assert word is not None and q not in apply_word(aut, StateSet.full(aut.n), word)
    return True, word
