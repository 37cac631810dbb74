import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from sepnom.atoms import ID, Subst, compose, extend_injection, swap
from sepnom.examples import fifo_automaton, fifo_states, FIFO_ALPHABET
from sepnom.nominal import (
    A,
    ONE,
    AtomLeaf,
    Coproduct,
    Discrete,
    Free,
    FreeElem,
    Label,
    MembershipError,
    Power,
    Product,
    SepPower,
    SepProduct,
    SepWordsUpTo,
    Tag,
    Tagged,
    Tup,
    WordsUpTo,
    act,
    check_member,
    decomposition,
    dimension,
    from_json,
    instantiate,
    is_equivariant,
    is_member,
    orbit_shape,
    orbits,
    partial_injections,
    random_perm,
    representative,
    sample_value,
    set_partitions,
    shape_id,
    support,
    support_order,
    to_json,
    word,
)
from sepnom.suites import bell_bruteforce, partial_injection_count

DESCS = [
    A,
    ONE,
    Product(A, A),
    SepProduct(A, A),
    Power(A, 3),
    SepPower(A, 3),
    WordsUpTo(A, 3),
    SepWordsUpTo(A, 3),
    Coproduct(Discrete("s"), A),
    Coproduct(A, A),
    fifo_states(3),
    FIFO_ALPHABET,
    Product(Tag("Put", A), WordsUpTo(A, 2)),
    Free(Product(A, A)),
]


def test_support_examples():
    assert support(Tup([AtomLeaf(1), AtomLeaf(2), AtomLeaf(1)])) == {1, 2}
    assert support(Label("⊥")) == set()
    assert support(word(1, 2, 1)) == {1, 2}
    assert support_order(word(3, 1, 3, 2)) == (3, 1, 2)


def test_act_examples():
    v = word(1, 2)
    P = Product(A, A)
    assert act(ID, v, P) == v
    assert act(swap(1, 2), v, P) == word(2, 1)
    assert act(Subst({2: 1}), v, P) == word(1, 1)


def test_act_rejects_substitution_on_separated_sets():
    with pytest.raises(ValueError):
        act(Subst({2: 1}), word(1, 2), SepProduct(A, A))
    # permutations are fine
    assert act(swap(1, 2), word(1, 2), SepProduct(A, A)) == word(2, 1)


def test_orbit_shape_examples():
    A3 = Power(A, 3)
    assert orbit_shape(word(1, 1, 2), A3) == orbit_shape(word(3, 3, 7), A3)
    A2 = Power(A, 2)
    assert orbit_shape(word(1, 2), A2) != orbit_shape(word(1, 1), A2)
    assert len(orbits(A3)) == 5


def test_orbit_count_examples():
    assert len(orbits(Product(A, A))) == 2
    assert len(orbits(SepProduct(A, A))) == 1
    assert len(orbits(WordsUpTo(A, 3))) == 1 + 1 + 2 + 5
    assert len(orbits(ONE)) == 1


def test_representative_examples():
    P = Product(A, A)
    assert representative(orbit_shape(word(7, 7), P)) == word(0, 0)
    bot = Label("⊥")
    assert representative(orbit_shape(bot, Discrete("⊥"))) == bot
    W = WordsUpTo(A, 3)
    assert representative(orbit_shape(word(5, 9, 5), W)) == word(0, 1, 0)


def test_dimension_examples():
    assert dimension(A) == 1 and decomposition(A) == (0, 1)
    X = Coproduct(Discrete("s"), A)
    assert dimension(X) == 1 and decomposition(X) == (1, 1)
    assert dimension(WordsUpTo(A, 3)) == 3
    with pytest.raises(ValueError):
        decomposition(Product(A, A))


def test_is_equivariant_examples():
    P = Product(A, A)
    assert is_equivariant(lambda v: v[0], P, A).ok
    const = is_equivariant(lambda v: AtomLeaf(0), P, A)
    assert not const.ok and const.counterexample is not None
    F = fifo_automaton(3)
    QS = Product(fifo_states(3), FIFO_ALPHABET)
    assert is_equivariant(lambda qa: F.delta(qa[0], qa[1]), QS, fifo_states(3), samples=300).ok
    assert is_equivariant(F.out, fifo_states(3), F.output, samples=300).ok


def test_membership():
    assert is_member(word(1, 2), SepProduct(A, A))
    assert not is_member(word(1, 1), SepProduct(A, A))
    assert is_member(word(1, 1), Product(A, A))
    assert not is_member(word(1, 2, 3, 4), WordsUpTo(A, 3))
    assert is_member(Tagged("Put", AtomLeaf(3)), FIFO_ALPHABET)
    with pytest.raises(MembershipError):
        check_member(Label("nope"), FIFO_ALPHABET)


def test_overlapping_coproduct_is_tagged():
    X = Coproduct(A, A)
    assert len(orbits(X)) == 2
    assert {s.path for s in orbits(X)} == {"L", "R"}


def test_orbits_sorted_and_deterministic():
    for X in DESCS:
        os_ = orbits(X)
        assert list(os_) == sorted(os_)
        assert len(set(os_)) == len(os_)
        assert [shape_id(s) for s in os_] == [shape_id(s) for s in orbits(X)]


@pytest.mark.parametrize("X", DESCS, ids=lambda X: type(X).__name__)
def test_representatives_are_canonical_members(X):
    for s in orbits(X):
        r = representative(s)
        assert is_member(r, X)
        assert orbit_shape(r, X) == s
        assert support_order(r) == tuple(range(s.dim))


@pytest.mark.parametrize("n", range(6))
def test_power_orbits_are_bell(n):
    assert len(orbits(Power(A, n))) == bell_bruteforce(n)
    assert len(list(set_partitions(n))) == bell_bruteforce(n)
    assert len(orbits(SepPower(A, n))) == 1


@pytest.mark.parametrize("k,j", list(itertools.product(range(4), repeat=2)))
def test_product_orbits_count_partial_injections(k, j):
    X, Y = SepPower(A, k), SepPower(A, j)
    expect = partial_injection_count(k, j)
    assert len(orbits(Product(X, Y))) == expect
    assert len(list(partial_injections(k, j))) == expect


@pytest.mark.parametrize("X,Y", [(A, A), (WordsUpTo(A, 2), A), (fifo_states(2), Power(A, 2))])
def test_separated_product_counts_multiply(X, Y):
    assert len(orbits(SepProduct(X, Y))) == len(orbits(X)) * len(orbits(Y))


def _alignment_perm(v, w):
    """Perm sending v's support order to w's, if lengths agree."""
    sv, sw = support_order(v), support_order(w)
    if len(sv) != len(sw):
        return None
    try:
        return extend_injection(dict(zip(sv, sw)))
    except ValueError:
        return None


@settings(max_examples=150)
@given(st.integers(0, 10 ** 6))
def test_orbit_shape_is_perfect_invariant(seed):
    rng = random.Random(seed)
    X = rng.choice(DESCS[:-1])
    v, w = sample_value(X, rng, 4), sample_value(X, rng, 4)
    g = _alignment_perm(v, w)
    same = g is not None and act(g, v, X) == w
    assert (orbit_shape(v, X) == orbit_shape(w, X)) == same


@settings(max_examples=150)
@given(st.integers(0, 10 ** 6))
def test_action_laws(seed):
    rng = random.Random(seed)
    X = rng.choice([d for d in DESCS if d.has_sb_action])
    v = sample_value(X, rng, 6)
    m = Subst((a, rng.randrange(6)) for a in range(6))
    n = Subst((a, rng.randrange(6)) for a in range(6))
    assert act(ID, v, X) == v
    assert act(compose(m, n), v, X) == act(m, act(n, v, X), X)
    assert is_member(act(m, v, X), X)


@settings(max_examples=150)
@given(st.integers(0, 10 ** 6))
def test_transfer_support(seed):
    rng = random.Random(seed)
    X = rng.choice(DESCS)
    v = sample_value(X, rng, 6)
    g = random_perm(rng, range(8))
    assert support(act(g, v, X)) == {g(a) for a in support(v)}


@pytest.mark.parametrize("X", DESCS, ids=lambda X: type(X).__name__)
def test_json_roundtrip(X):
    rng = random.Random(1)
    for _ in range(30):
        v = sample_value(X, rng)
        assert from_json(to_json(v), X) == v


def test_json_formats():
    assert to_json(AtomLeaf(3)) == {"kind": "atom", "id": 3}
    assert to_json(Label("Pop")) == {"kind": "label", "name": "Pop"}
    assert to_json(Tagged("Put", AtomLeaf(1))) == {
        "kind": "tagged", "name": "Put", "child": {"kind": "atom", "id": 1}}
    P = Product(A, A)
    e = FreeElem(orbit_shape(word(0, 1), P), (4, 4))
    assert to_json(e) == {"base": "(0,1)", "images": [4, 4]}
    with pytest.raises(ValueError):
        from_json(to_json(e))


def test_instantiate_needs_distinct_atoms():
    s = orbit_shape(word(0, 1), Product(A, A))
    assert instantiate(s, [5, 2]) == word(5, 2)
    with pytest.raises(ValueError):
        instantiate(s, [5, 5])
