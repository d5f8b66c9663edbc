"""Extending-word searches and the synchronizing fast path."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from preimages import (BudgetExceededError, NotSynchronizingError, StateSet, Word,
                       apply_word, backward_subset_bfs, is_strongly_connected,
                       is_synchronizing, preimage_word, random_automaton,
                       shortest_extending_word_small, totally_extending_word_small,
                       totally_extensible_synchronizing)
from preimages.oracle import goal_predicate


def test_extend_worked_example(c4):
    assert shortest_extending_word_small(c4, c4.state_set([1, 2])) == Word.from_text("ba")


def test_extend_trivial_cases(p3, ch2):
    assert shortest_extending_word_small(p3, p3.state_set([0])) is None
    assert shortest_extending_word_small(ch2, ch2.state_set([1])) == Word.from_text("a")


def test_extend_edge_subsets(c4):
    assert shortest_extending_word_small(c4, StateSet.empty(4)) is None
    assert shortest_extending_word_small(c4, StateSet.full(4)) is None


def test_extend_budget_is_an_error_not_an_answer(c4):
    with pytest.raises(BudgetExceededError):
        shortest_extending_word_small(c4, c4.state_set([1, 2]), budget=2)


def test_extend_matches_oracle_decision_and_length():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 7)
        aut = random_automaton(n, rng.randint(1, 3), seed=rng.randrange(10**9))
        s = StateSet(n, rng.randrange(1 << n))
        w = shortest_extending_word_small(aut, s)
        res = backward_subset_bfs(aut, s)
        hit = res.first_match(goal_predicate("extending", aut, s))
        if hit is None:
            assert w is None
        else:
            assert w is not None and len(w) == hit[1]
            assert preimage_word(aut, s, w).size > s.size


def test_extend_deep_instances_match_oracle():
    """Cycle with one merging defect: the only extending route walks the
    whole cycle, so shortest extending words reach length n."""
    from preimages import Automaton

    for n in range(3, 13):
        aut = Automaton([[(q + 1) % n, 0 if q == 1 else q] for q in range(n)])
        s = StateSet.from_states(n, [n - 1])
        w = shortest_extending_word_small(aut, s)
        hit = backward_subset_bfs(aut, s).first_match(goal_predicate("extending", aut, s))
        assert w is not None and len(w) == hit[1] == n
        assert preimage_word(aut, s, w).size > 1


def test_totally_extending_examples(c4, p3, ch2):
    assert totally_extending_word_small(p3, p3.state_set([0, 1])) is None
    w = totally_extending_word_small(ch2, ch2.state_set([1]))
    assert w == Word.from_text("a")
    assert preimage_word(ch2, ch2.state_set([1]), w).size == 2
    w = totally_extending_word_small(c4, c4.state_set([0]))
    assert w is not None
    assert apply_word(c4, StateSet.full(4), w) == c4.state_set([0])


def test_totally_extending_matches_oracle_decision():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 7)
        aut = random_automaton(n, rng.randint(1, 3), seed=rng.randrange(10**9))
        s = StateSet(n, rng.randrange(1 << n))
        w = totally_extending_word_small(aut, s)
        res = backward_subset_bfs(aut, s)
        oracle_says = res.first_match(goal_predicate("totally-extending", aut, s))
        assert (w is None) == (oracle_says is None)
        if w is not None:
            assert preimage_word(aut, s, w).size == n


def test_totally_extensible_synchronizing(c4, ch2, p3):
    assert totally_extensible_synchronizing(c4, c4.state_set([2]))
    assert not totally_extensible_synchronizing(ch2, ch2.state_set([0]))
    ok, w = totally_extensible_synchronizing(ch2, ch2.state_set([1]), witness=True)
    assert ok and w == Word.from_text("a")
    with pytest.raises(NotSynchronizingError):
        totally_extensible_synchronizing(p3, p3.state_set([0]))


def test_totally_extensible_synchronizing_witnesses_verify():
    rng = random.Random(13)
    done = 0
    while done < 60:
        n = rng.randint(2, 7)
        aut = random_automaton(n, rng.randint(2, 3), seed=rng.randrange(10**9))
        if not is_synchronizing(aut):
            continue
        done += 1
        bits = rng.randrange(1, 1 << n)
        s = StateSet(n, bits)
        got = totally_extensible_synchronizing(aut, s, witness=True)
        decision, w = got
        if decision:
            assert preimage_word(aut, s, w).size == n
        else:
            assert w is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(2, 6), st.data())
def test_strongly_connected_synchronizing_every_proper_subset_totally_extensible(seed, n, data):
    aut = random_automaton(n, 2, seed=seed)
    if not (is_synchronizing(aut) and is_strongly_connected(aut)):
        return
    bits = data.draw(st.integers(1, (1 << n) - 2))
    s = StateSet(n, bits)
    assert totally_extensible_synchronizing(aut, s)
    assert totally_extending_word_small(aut, s) is not None
