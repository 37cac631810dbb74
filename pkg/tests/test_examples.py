import random

import pytest

from sepnom.atoms import ID, Subst, compose, swap
from sepnom.automata import check_sb_equivariance
from sepnom.examples import (
    AUTOMATA,
    BOT,
    FIFO_ALPHABET,
    NUCLEAR,
    POP,
    STAR,
    FifoConfig,
    fifo_automaton,
    fifo_states,
    nuclear_witness,
    put,
)
from sepnom.nominal import (
    AtomLeaf,
    Product,
    Tup,
    is_equivariant,
    is_member,
    word,
)


def test_fifo_transitions():
    F = fifo_automaton(FifoConfig(3))
    full = word(1, 2, 3)
    assert F.delta(full, put(4)) == BOT
    assert F.delta(word(1, 2), POP) == word(2)
    assert F.delta(word(1, 2), put(1)) == word(1, 2, 1)
    assert F.delta(Tup(), POP) == BOT
    assert F.delta(BOT, put(1)) == BOT
    assert F.out(Tup()) == BOT
    assert F.out(word(5, 6)) == AtomLeaf(5)


def test_fifo_config_validates():
    with pytest.raises(ValueError):
        FifoConfig(-1)
    assert fifo_automaton(2).name == fifo_automaton(FifoConfig(2)).name


@pytest.mark.parametrize("n", [0, 1, 3])
def test_fifo_components_equivariant(n):
    F = fifo_automaton(n)
    Q = fifo_states(n)
    QS = Product(Q, FIFO_ALPHABET)
    assert is_equivariant(lambda qa: F.delta(qa[0], qa[1]), QS, Q, samples=300).ok
    assert is_equivariant(F.out, Q, F.output, samples=300).ok


@pytest.mark.parametrize("n", [1, 3])
def test_fifo_language_sb_equivariant(n):
    assert check_sb_equivariance(fifo_automaton(n), samples=400).ok


def test_registry():
    assert set(AUTOMATA) >= {"fifo", "repeat", "lastletter"}
    assert AUTOMATA["fifo"](3).name == "fifo3"


def test_nuclear_witness_example():
    m1, m2 = nuclear_witness(0, {0})
    assert m1 == ID
    assert NUCLEAR.act(m1, AtomLeaf(0)) == AtomLeaf(0)
    assert NUCLEAR.act(m2, AtomLeaf(0)) == STAR
    (b1, b2), = m2.mapping
    assert not {b1, b2} & {0}


def test_nuclear_witness_for_many_sets():
    rng = random.Random(0)
    for _ in range(300):
        C = set(rng.sample(range(12), rng.randint(0, 6)))
        a = rng.randrange(12)
        m1, m2 = nuclear_witness(a, C)
        assert all(m1(c) == m2(c) for c in C)
        assert NUCLEAR.act(m1, AtomLeaf(a)) != NUCLEAR.act(m2, AtomLeaf(a))


def test_star_fixed_by_everything():
    for m in [ID, swap(1, 2), Subst({1: 2}), Subst({3: 3, 4: 1})]:
        assert NUCLEAR.act(m, STAR) == STAR


def test_nuclear_action_laws():
    rng = random.Random(1)
    vals = [STAR] + [AtomLeaf(a) for a in range(5)]
    for _ in range(500):
        m = Subst((a, rng.randrange(5)) for a in range(5))
        n = Subst((a, rng.randrange(5)) for a in range(5))
        v = rng.choice(vals)
        assert NUCLEAR.members(v)
        assert NUCLEAR.act(ID, v) == v
        assert NUCLEAR.act(compose(m, n), v) == NUCLEAR.act(m, NUCLEAR.act(n, v))
