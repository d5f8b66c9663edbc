import pytest

from preimages import cerny_automaton, chain2, perm3


@pytest.fixture
def c4():
    return cerny_automaton(4)


@pytest.fixture
def p3():
    return perm3()


@pytest.fixture
def ch2():
    return chain2()
