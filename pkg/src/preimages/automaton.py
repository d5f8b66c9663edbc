"""Complete deterministic automata, state sets, words, and their actions.

States are 0-based integers ``0..n-1`` and letters 0-based integers
``0..k-1``; letter ``i`` is pretty-printed as the ``(i+1)``-th lowercase
letter whenever the alphabet has at most 26 letters.  Words act on states
left to right: ``q . uv == (q . u) . v``, which fixes the composition order
of preimages as ``S . (uv)^-1 == (S . v^-1) . u^-1`` everywhere.

All values here are immutable after construction, so they can be shared
freely between threads; derived analyses are memoized on the automaton
(idempotent, hence harmless under concurrent recomputation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def letter_name(a: int, k: int) -> str:
    """Display name of letter ``a`` in a ``k``-letter alphabet."""
    if k <= 26:
        return chr(ord("a") + a)
    return str(a)


class Word:
    """An immutable sequence of letter indices."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters: tuple[int, ...] = tuple(letters)

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse ``"ba"`` into letter indices (``a`` = 0, ``b`` = 1, ...).

        Also accepts whitespace-separated decimal indices for big alphabets.
        """
        text = text.strip()
        if text == "":
            return cls()
        if any(ch.isspace() or ch.isdigit() for ch in text):
            return cls(int(tok) for tok in text.split())
        return cls(ord(ch) - ord("a") for ch in text)

    def text(self, k: Optional[int] = None) -> str:
        """Render with letter names for alphabets of at most 26 letters."""
        if k is None:
            k = (max(self.letters) + 1) if self.letters else 1
        if k <= 26:
            return "".join(chr(ord("a") + a) for a in self.letters)
        return " ".join(str(a) for a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + tuple(other))

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"


EPSILON = Word()


class StateSet:
    """A subset of the states of an ``n``-state automaton.

    Backed by a bit vector (``bits`` has bit ``q`` set iff state ``q`` is a
    member); cardinality is computed once at construction.  Instances are
    immutable; set operations return fresh values and insist that both
    operands are bound to the same ``n``.
    """

    __slots__ = ("n", "bits", "size")

    def __init__(self, n: int, bits: int):
        if n < 0:
            raise ValueError("state count must be non-negative")
        if bits < 0 or bits >> n:
            raise ValueError(f"bit pattern {bits:#x} out of range for n={n}")
        self.n = n
        self.bits = bits
        self.size = bits.bit_count()

    @classmethod
    def from_states(cls, n: int, states: Iterable[int]) -> "StateSet":
        bits = 0
        for q in states:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range [0, {n})")
            bits |= 1 << q
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "StateSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls(n, (1 << n) - 1)

    def _check_peer(self, other: "StateSet") -> None:
        if self.n != other.n:
            raise ValueError(f"state sets bound to different automata sizes ({self.n} vs {other.n})")

    def __contains__(self, q: int) -> bool:
        return 0 <= q < self.n and (self.bits >> q) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "StateSet") -> "StateSet":
        self._check_peer(other)
        return StateSet(self.n, self.bits | other.bits)

    def __and__(self, other: "StateSet") -> "StateSet":
        self._check_peer(other)
        return StateSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "StateSet") -> "StateSet":
        self._check_peer(other)
        return StateSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "StateSet":
        return StateSet(self.n, ((1 << self.n) - 1) ^ self.bits)

    def issubset(self, other: "StateSet") -> bool:
        self._check_peer(other)
        return self.bits & ~other.bits == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, StateSet) and self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return "{%s}" % ",".join(str(q) for q in self)


class Automaton:
    """A complete DFA given by its transition table.

    ``rows[q][a]`` is the successor of state ``q`` under letter ``a``; the
    table is total and every entry must lie in ``[0, n)``.  The instance is
    immutable; expensive derived analyses (preimage masks, SCCs, the pair
    table, ...) are memoized in ``_derived``.
    """

    __slots__ = ("n", "k", "rows", "by_letter", "_derived")

    def __init__(self, rows: Sequence[Sequence[int]]):
        n = len(rows)
        if n < 1:
            raise ValueError("automaton needs at least one state")
        k = len(rows[0])
        if k < 1:
            raise ValueError("automaton needs at least one letter")
        table = []
        for q, row in enumerate(rows):
            row = tuple(row)
            if len(row) != k:
                raise ValueError(f"row {q} has {len(row)} entries, expected {k}")
            for a, p in enumerate(row):
                if not 0 <= p < n:
                    raise ValueError(f"transition ({q},{a}) -> {p} out of range [0, {n})")
            table.append(row)
        self.n = n
        self.k = k
        self.rows = tuple(table)
        self.by_letter = tuple(tuple(table[q][a] for q in range(n)) for a in range(k))
        self._derived: dict = {}

    def delta(self, q: int, a: int) -> int:
        return self.rows[q][a]

    def preimage_masks(self, a: int) -> tuple[int, ...]:
        """For letter ``a``: bit mask of ``{p : p.a == q}`` per target state ``q``."""
        masks = self._derived.get("pre_masks")
        if masks is None:
            masks = []
            for letter in range(self.k):
                row = [0] * self.n
                for p, q in enumerate(self.by_letter[letter]):
                    row[q] |= 1 << p
                masks.append(tuple(row))
            masks = tuple(masks)
            self._derived["pre_masks"] = masks
        return masks[a]

    def check_word(self, w: Word) -> None:
        for a in w:
            if not 0 <= a < self.k:
                raise ValueError(f"letter {a} out of range [0, {self.k})")

    def check_set(self, s: StateSet) -> None:
        if s.n != self.n:
            raise ValueError(f"state set bound to n={s.n}, automaton has n={self.n}")

    def image_bits(self, bits: int, a: int) -> int:
        out = 0
        succ = self.by_letter[a]
        while bits:
            low = bits & -bits
            out |= 1 << succ[low.bit_length() - 1]
            bits ^= low
        return out

    def preimage_bits(self, bits: int, a: int) -> int:
        out = 0
        masks = self.preimage_masks(a)
        while bits:
            low = bits & -bits
            out |= masks[low.bit_length() - 1]
            bits ^= low
        return out

    def state_set(self, states: Iterable[int]) -> StateSet:
        return StateSet.from_states(self.n, states)

    def __eq__(self, other) -> bool:
        return isinstance(other, Automaton) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Automaton(n={self.n}, k={self.k})"


def apply_word(aut: Automaton, s: StateSet, w: Word) -> StateSet:
    """Image ``S . w`` of a set under a word (never grows the set)."""
    aut.check_set(s)
    aut.check_word(w)
    bits = s.bits
    for a in w:
        bits = aut.image_bits(bits, a)
    return StateSet(aut.n, bits)


def preimage_word(aut: Automaton, s: StateSet, w: Word) -> StateSet:
    """Preimage ``S . w^-1``, i.e. all states that ``w`` maps into ``S``.

    Letters are peeled from the right: ``S . (uv)^-1 == (S . v^-1) . u^-1``.
    """
    aut.check_set(s)
    aut.check_word(w)
    bits = s.bits
    for a in reversed(tuple(w)):
        bits = aut.preimage_bits(bits, a)
    return StateSet(aut.n, bits)


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components of the transition digraph.

    Components are numbered by their smallest member state; ``component_of``
    maps each state to its component id, and ``sink_flags[c]`` is true when
    no transition leaves component ``c``.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    sink_flags: tuple[bool, ...]

    def sink_components(self) -> list[int]:
        return [c for c, is_sink in enumerate(self.sink_flags) if is_sink]


def scc(aut: Automaton) -> SccDecomposition:
    """Tarjan's algorithm (iterative), with deterministic component numbering."""
    cached = aut._derived.get("scc")
    if cached is not None:
        return cached

    n, k = aut.n, aut.k
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    raw_components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # Explicit DFS stack of (state, next letter to try).
        work = [(root, 0)]
        while work:
            v, ai = work[-1]
            if ai == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while ai < k:
                w = aut.rows[v][ai]
                ai += 1
                if index[w] == -1:
                    work[-1] = (v, ai)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    if index[w] < lowlink[v]:
                        lowlink[v] = index[w]
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                raw_components.append(comp)
            if work:
                parent = work[-1][0]
                if lowlink[v] < lowlink[parent]:
                    lowlink[parent] = lowlink[v]

    raw_components.sort(key=lambda comp: comp[0])
    component_of = [0] * n
    for cid, comp in enumerate(raw_components):
        for q in comp:
            component_of[q] = cid
    sink_flags = []
    for cid, comp in enumerate(raw_components):
        sink = all(component_of[aut.rows[q][a]] == cid for q in comp for a in range(k))
        sink_flags.append(sink)

    result = SccDecomposition(
        component_of=tuple(component_of),
        components=tuple(tuple(c) for c in raw_components),
        sink_flags=tuple(sink_flags),
    )
    aut._derived["scc"] = result
    return result


def is_strongly_connected(aut: Automaton) -> bool:
    return len(scc(aut).components) == 1


def is_permutation_automaton(aut: Automaton) -> bool:
    """True iff every letter acts as a bijection on the states."""
    return all(len(set(images)) == aut.n for images in aut.by_letter)


def sink_state(aut: Automaton) -> Optional[int]:
    """The smallest state fixed by every letter, or None.

    Several such states can only coexist in a non-synchronizing automaton;
    returning the smallest keeps the output deterministic.
    """
    for q in range(aut.n):
        if all(aut.rows[q][a] == q for a in range(aut.k)):
            return q
    return None
