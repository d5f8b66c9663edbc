"""Small reference automata used throughout the tests and demos."""

from .automaton import Automaton


def cerny_automaton(n: int = 4) -> Automaton:
    """The classic slowly-synchronizing n-state automaton.

    Letter ``a`` is the cyclic shift ``q -> q+1 (mod n)``; letter ``b`` fixes
    every state except the last, which it sends to state 0.  Its shortest
    reset word has length ``(n-1)^2``.
    """
    if n < 2:
        raise ValueError("need at least two states")
    rows = []
    for q in range(n):
        a = (q + 1) % n
        b = 0 if q == n - 1 else q
        rows.append([a, b])
    return Automaton(rows)


def perm3() -> Automaton:
    """Three states; ``a`` a 3-cycle, ``b`` swaps states 0 and 1."""
    return Automaton([[1, 1], [2, 0], [0, 2]])


def chain2() -> Automaton:
    """Two states over one letter: 0 -> 1 -> 1 (state 1 absorbing)."""
    return Automaton([[1], [1]])
