import random

import pytest
from hypothesis import given, settings, strategies as st

from sepnom.atoms import ID, Subst, compose, swap
from sepnom.examples import fifo_states
from sepnom.free import (
    DimensionError,
    act_free,
    counit,
    flat,
    free_elem,
    free_map,
    monoidal_p,
    monoidal_p_inv,
    one_dim_isos,
    orbits_free,
    sharp,
    sim_oracle,
    unit,
    unit_inverse,
)
from sepnom.nominal import (
    A,
    ONE,
    AtomLeaf,
    Coproduct,
    Discrete,
    Free,
    FreeElem,
    Label,
    Power,
    Product,
    SepPower,
    SepProduct,
    SepWordsUpTo,
    Tup,
    WordsUpTo,
    act,
    from_json,
    is_member,
    orbit_shape,
    orbits,
    random_perm,
    sample_value,
    to_json,
    word,
)
from sepnom.suites import bell_bruteforce, normal_form_agreement

A2s = SepProduct(A, A)
PAIR = orbit_shape(word(0, 1), A2s)
ATOM = orbit_shape(AtomLeaf(0), A)


def rand_subst(rng, pool=6):
    return Subst((a, rng.randrange(pool)) for a in range(pool))


def test_free_elem_examples():
    x = word(0, 1)
    assert free_elem(ID, x, A2s) == FreeElem(PAIR, (0, 1))
    assert free_elem(Subst({1: 0}), x, A2s) == FreeElem(PAIR, (0, 0))
    assert free_elem(swap(0, 5), x, A2s) == free_elem(ID, word(5, 1), A2s)
    assert free_elem(ID, word(5, 1), A2s).images == (5, 1)


def test_free_elem_length_checked():
    with pytest.raises(ValueError):
        FreeElem(PAIR, (0,))


def test_sim_oracle_examples():
    m = Subst({0: 3})
    assert sim_oracle(m, word(0, 1), m, word(0, 1), A2s)
    assert not sim_oracle(ID, word(0, 1), ID, word(1, 0), A2s)
    # (m, g.x) ~ (m.g, x)
    g = swap(0, 4)
    assert sim_oracle(m, act(g, word(0, 1)), compose(m, g), word(0, 1), A2s)


def test_normal_form_matches_oracle_sample():
    rep = normal_form_agreement(seed=3, samples=300)
    assert rep.ok, rep.counterexample


def test_act_free_examples():
    e = FreeElem(PAIR, (0, 1))
    assert act_free(ID, e) == e
    assert act_free(Subst({0: 3}), e) == FreeElem(PAIR, (3, 1))
    assert act_free(Subst({1: 0}), e) == FreeElem(PAIR, (0, 0))


def test_unit_examples():
    assert unit(AtomLeaf(3), A) == FreeElem(ATOM, (3,))
    bot = Label("⊥")
    e = unit(bot, Discrete("⊥"))
    assert e.images == () and e.base == orbit_shape(bot, Discrete("⊥"))
    assert unit(word(0, 1), A2s) == FreeElem(PAIR, (0, 1))


def test_counit_examples():
    assert counit(FreeElem(ATOM, (7,)), A) == AtomLeaf(7)
    A2 = Power(A, 2)
    pair = orbit_shape(word(0, 1), A2)
    assert counit(FreeElem(pair, (0, 0)), A2) == word(0, 0)
    for v in [AtomLeaf(2), word(3, 3), word(1, 4)]:
        X = A if isinstance(v, AtomLeaf) else A2
        assert counit(unit(v, X), X) == v
    with pytest.raises(ValueError):
        counit(FreeElem(PAIR, (0, 1)), A2s)


def test_sharp_flat_examples():
    e = FreeElem(ATOM, (5,))
    assert sharp(lambda x: x, A)(e) == counit(e, A)
    first = sharp(lambda v: v[0], A)
    assert first(FreeElem(PAIR, (5, 5))) == AtomLeaf(5)
    embed = flat(lambda e: counit(e, A), A)
    assert embed(AtomLeaf(9)) == AtomLeaf(9)


ADJ_CASES = [
    (A, A, lambda x: x),
    (A2s, A, lambda v: v[1]),
    (Product(A, A), A, lambda v: v[0]),
    (Product(A, A), fifo_states(3), lambda v: v),
    (A2s, fifo_states(3), lambda v: Tup((v[1], v[0], v[1]))),
]


@pytest.mark.parametrize("X,Y,f", ADJ_CASES)
def test_adjunction_roundtrips(X, Y, f):
    rng = random.Random(11)
    fs = sharp(f, Y)
    FX = Free(X)
    for _ in range(200):
        x = sample_value(X, rng)
        assert flat(fs, X)(x) == f(x)
        e = sample_value(FX, rng)
        n = rand_subst(rng, 10)
        assert fs(act_free(n, e)) == act(n, fs(e), Y)
        # h = sharp f is Sb-equivariant, so sharp(flat h) == h
        assert sharp(flat(fs, X), Y)(e) == fs(e)
        # triangle identity: counit_F o F(unit) = id
        Fu = free_map(lambda x: unit(x, X), FX)
        assert sharp(lambda z: z, FX)(Fu(e)) == e


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_functor_laws(seed):
    rng = random.Random(seed)
    X = Product(A, A)
    e = sample_value(Free(X), rng)
    assert free_map(lambda x: x, X)(e) == e
    f = lambda v: v[0]
    g = lambda a: word(a.a, a.a)
    composed = free_map(lambda v: g(f(v)), Power(A, 2))(e)
    assert composed == free_map(g, Power(A, 2))(free_map(f, A)(e))


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_act_free_laws(seed):
    rng = random.Random(seed)
    e = sample_value(Free(WordsUpTo(A, 3)), rng)
    m, n = rand_subst(rng), rand_subst(rng)
    assert act_free(ID, e) == e
    assert act_free(compose(m, n), e) == act_free(m, act_free(n, e))
    # the generic action agrees
    assert act(m, e, Free(WordsUpTo(A, 3))) == act_free(m, e)


def test_monoidal_examples():
    a, b = AtomLeaf(2), AtomLeaf(5)
    assert monoidal_p(free_elem(ID, word(2, 5), A2s), A, A) == (unit(a, A), unit(b, A))
    assert monoidal_p(FreeElem(PAIR, (3, 3)), A, A) == (FreeElem(ATOM, (3,)), FreeElem(ATOM, (3,)))
    e = monoidal_p_inv(unit(a, A), unit(a, A), A, A)
    assert e == FreeElem(PAIR, (2, 2))
    e = monoidal_p_inv(unit(a, A), unit(b, A), A, A)
    assert e == free_elem(ID, word(2, 5), A2s)


@pytest.mark.parametrize("X,Y", [(A, A), (WordsUpTo(A, 2), A), (SepPower(A, 2), WordsUpTo(A, 2))])
def test_monoidal_inverse_pair(X, Y):
    rng = random.Random(5)
    S = SepProduct(X, Y)
    for _ in range(200):
        e = sample_value(Free(S), rng)
        assert monoidal_p_inv(*monoidal_p(e, X, Y), X, Y) == e
        e1, e2 = sample_value(Free(X), rng), sample_value(Free(Y), rng)
        assert monoidal_p(monoidal_p_inv(e1, e2, X, Y), X, Y) == (e1, e2)
    assert len(orbits(Free(S))) == len(orbits(Product(Free(X), Free(Y))))


def test_free_unit_is_singleton():
    assert len(orbits(Free(ONE))) == 1
    assert orbits(Free(ONE))[0].dim == 0


def test_orbits_free_examples():
    assert len(orbits_free(A)) == 1
    assert len(orbits_free(Product(A, A))) == 3
    for n in range(6):
        assert len(orbits_free(SepPower(A, n))) == bell_bruteforce(n)


@pytest.mark.parametrize("n", range(5))
def test_free_of_separated_words(n):
    assert len(orbits_free(SepWordsUpTo(A, n))) == len(orbits(WordsUpTo(A, n)))


@pytest.mark.parametrize("X", [A, ONE, Coproduct(Discrete("s"), A), Coproduct(A, Discrete(("x", "y")))])
def test_one_dim_isos_pass(X):
    rep = one_dim_isos(X, samples=200)
    assert rep.ok, rep.to_dict()


def test_one_dim_isos_reject_dimension_two():
    with pytest.raises(DimensionError) as exc:
        one_dim_isos(Product(A, A))
    assert exc.value.witness == orbit_shape(word(0, 1), Product(A, A))
    with pytest.raises(DimensionError):
        unit_inverse(FreeElem(PAIR, (1, 1)), A2s)


def test_free_json_roundtrip():
    X = Free(Product(A, A))
    rng = random.Random(2)
    for _ in range(50):
        e = sample_value(X, rng)
        assert is_member(e, X)
        assert from_json(to_json(e), X) == e


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_normal_form_equality_matches_oracle(seed):
    rng = random.Random(seed)
    X = rng.choice([A2s, Product(A, A), WordsUpTo(A, 3)])
    x1 = sample_value(X, rng, 4)
    g = random_perm(rng, range(6))
    x2 = act(g, x1, X) if rng.random() < 0.7 else sample_value(X, rng, 4)
    m1, m2 = rand_subst(rng, 6), rand_subst(rng, 6)
    if rng.random() < 0.5:
        m1 = compose(m2, g)
    same = free_elem(m1, x1, X) == free_elem(m2, x2, X)
    assert same == sim_oracle(m1, x1, m2, x2, X)
