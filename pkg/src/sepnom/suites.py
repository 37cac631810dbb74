"""Seeded property suites behind ``sepnom verify``.

Each suite is a function ``(seed, samples) -> list[CheckReport]``.  Every
property draws from its own RNG seeded by (seed, property name), so results
do not depend on which other suites ran first.
"""

from __future__ import annotations

import itertools
import random

from . import atoms as at
from .atoms import ID, Perm, Subst, compose, extend_injection, fresh, inverse, swap
from .automata import (
    check_language_equivariance,
    extend_language,
    reachable_orbits,
    restrict,
    run,
    run_from,
    run_separated,
    run_state,
    sample_word,
    SeparationError,
)
from .examples import (
    FIFO_ALPHABET,
    FIFO_OUTPUT,
    NUCLEAR,
    STAR,
    fifo_automaton,
    fifo_states,
    last_letter_automaton,
    nuclear_witness,
    repeat_automaton,
)
from .free import (
    DimensionError,
    act_free,
    counit,
    flat,
    free_elem,
    free_map,
    monoidal_p,
    monoidal_p_inv,
    one_dim_isos,
    sharp,
    sim_oracle,
    unit,
)
from .nominal import (
    A,
    ONE,
    AtomLeaf,
    CheckReport,
    Coproduct,
    Discrete,
    Free,
    Power,
    Product,
    SepPower,
    SepProduct,
    SepWordsUpTo,
    Tag,
    Tup,
    WordsUpTo,
    act,
    describe,
    is_equivariant,
    is_member,
    orbit_shape,
    orbits,
    random_perm,
    random_subst,
    representative,
    sample_value,
    support,
    support_order,
)

SB_SETS = [
    A,
    Product(A, A),
    WordsUpTo(A, 3),
    Coproduct(Discrete("s"), A),
    Free(SepProduct(A, A)),
    Free(Product(A, A)),
    fifo_states(3),
]
PERM_SETS = [
    SepProduct(A, A),
    SepWordsUpTo(A, 3),
    Product(SepProduct(A, A), A),
    Coproduct(SepPower(A, 2), Power(A, 2)),
]


def _rng(seed, name):
    return random.Random(f"{seed}:{name}")


def _random_subst(rng, pool=6):
    return random_subst(rng, rng.sample(range(pool), rng.randint(0, pool)), range(pool))


def bell_bruteforce(n: int) -> int:
    """Count set partitions of an n-set as distinct kernels of maps n -> n."""
    kernels = set()
    for f in itertools.product(range(n), repeat=n):
        blocks = {}
        for i, v in enumerate(f):
            blocks.setdefault(v, []).append(i)
        kernels.add(frozenset(frozenset(b) for b in blocks.values()))
    return len(kernels) if n else 1


def partial_injection_count(k: int, j: int) -> int:
    count = 0
    for f in itertools.product([None, *range(j)], repeat=k):
        hit = [v for v in f if v is not None]
        if len(hit) == len(set(hit)):
            count += 1
    return count


# -- actions --------------------------------------------------------------------


def suite_actions(seed=0, samples=500):
    out = []

    r = CheckReport("compose is associative with two-sided unit id")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        m, n, p = (_random_subst(rng) for _ in range(3))
        r.samples += 1
        if compose(compose(m, n), p) != compose(m, compose(n, p)):
            r.fail(m=m, n=n, p=p)
        if compose(ID, m) != m or compose(m, ID) != m:
            r.fail(m=m, reason="unit law")
    out.append(r)

    r = CheckReport("apply(compose(m,n),a) = apply(m,apply(n,a))")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        m, n = _random_subst(rng), _random_subst(rng)
        a = rng.randrange(8)
        r.samples += 1
        if at.apply(compose(m, n), a) != at.apply(m, at.apply(n, a)):
            r.fail(m=m, n=n, a=a)
    out.append(r)

    r = CheckReport("Perm closed under compose and inverse")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        g, h = random_perm(rng, range(6)), random_perm(rng, range(3, 9))
        r.samples += 1
        gh = compose(g, h)
        if not (isinstance(gh, Perm) and gh.is_perm):
            r.fail(g=g, h=h)
        if compose(g, inverse(g)) != ID or compose(inverse(g), g) != ID:
            r.fail(g=g, reason="inverse")
    out.append(r)

    r = CheckReport("action laws act(id,v)=v, act(mn,v)=act(m,act(n,v)), closure")
    rng = _rng(seed, r.name)
    for i in range(samples):
        X = (SB_SETS + PERM_SETS)[i % (len(SB_SETS) + len(PERM_SETS))]
        v = sample_value(X, rng, 6)
        if X.has_sb_action:
            m, n = _random_subst(rng, 7), _random_subst(rng, 7)
        else:
            m, n = random_perm(rng, range(7)), random_perm(rng, range(7))
        r.samples += 1
        if act(ID, v, X) != v:
            r.fail(X=X, v=v, reason="identity")
        if act(compose(m, n), v, X) != act(m, act(n, v, X), X):
            r.fail(X=X, v=v, m=m, n=n)
        if not is_member(act(m, v, X), X):
            r.fail(X=X, v=v, m=m, reason="left the set")
    out.append(r)

    r = CheckReport("act_free is an Sb-action on F(X)")
    rng = _rng(seed, r.name)
    FX = [Free(A), Free(Product(A, A)), Free(SepWordsUpTo(A, 3))]
    for i in range(samples):
        e = sample_value(FX[i % len(FX)], rng, 6)
        m, n = _random_subst(rng, 7), _random_subst(rng, 7)
        r.samples += 1
        if act_free(ID, e) != e or act_free(compose(m, n), e) != act_free(m, act_free(n, e)):
            r.fail(e=e, m=m, n=n)
    out.append(r)

    r = CheckReport("extend_injection agrees with f on dom(f)")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        dom = rng.sample(range(8), rng.randint(0, 5))
        f = dict(zip(dom, rng.sample(range(8), len(dom))))
        g = extend_injection(f)
        r.samples += 1
        if any(g(a) != b for a, b in f.items()) or not g.is_perm:
            r.fail(f=str(f), g=g)
    out.append(r)

    r = CheckReport("fresh atoms avoid the given set and are distinct")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        avoid = set(rng.sample(range(12), rng.randint(0, 8)))
        k = rng.randint(0, 5)
        fr = fresh(avoid, k)
        r.samples += 1
        if len(fr) != k or len(set(fr)) != k or set(fr) & avoid:
            r.fail(avoid=sorted(avoid), count=k, got=list(fr))
    out.append(r)
    return out


# -- supports -------------------------------------------------------------------


def _perm_fixing(rng, C, pool):
    return random_perm(rng, [a for a in pool if a not in C])


def _subst_pair_agreeing(rng, C, pool):
    m1 = random_subst(rng, pool)
    m2 = Subst((a, m1(a) if a in C else rng.choice(pool)) for a in pool)
    return m1, m2


def suite_supports(seed=0, samples=1000, trials=24):
    out = []
    sets = SB_SETS + PERM_SETS

    r = CheckReport("supp(g.x) = g.supp(x)")
    rng = _rng(seed, r.name)
    for i in range(samples):
        X = sets[i % len(sets)]
        x = sample_value(X, rng, 8)
        g = random_perm(rng, range(10))
        r.samples += 1
        if support(act(g, x, X)) != frozenset(g(a) for a in support(x)):
            r.fail(X=X, x=x, g=g)
    out.append(r)

    r = CheckReport("support is least: fixed by Perm(supp), movable on each atom")
    rng = _rng(seed, r.name)
    for X in sets:
        for s in orbits(X):
            v = representative(s)
            C = support(v)
            pool = list(range(len(C) + 4))
            r.samples += 1
            for _ in range(4):
                g = _perm_fixing(rng, C, pool)
                if act(g, v, X) != v:
                    r.fail(X=X, v=v, g=g)
            for a in C:
                g = swap(a, fresh(C, 1)[0])
                if act(g, v, X) == v:
                    r.fail(X=X, v=v, atom=a, reason="atom not needed")
    out.append(r)

    r = CheckReport("Perm-support iff Sb-support on renaming sets")
    rng = _rng(seed, r.name)
    sb_sets = [X for X in SB_SETS]
    for i in range(samples):
        X = sb_sets[i % len(sb_sets)]
        x = sample_value(X, rng, 6)
        supp = sorted(support(x))
        C = set(rng.sample(supp, rng.randint(0, len(supp)))) | set(rng.sample(range(6, 9), 1))
        if rng.random() < 0.4:
            C |= set(supp)
        pool = list(range(12))
        perm_ok = all(act(_perm_fixing(rng, C, pool), x, X) == x for _ in range(trials))
        sb_ok = True
        for _ in range(trials):
            m1, m2 = _subst_pair_agreeing(rng, C, pool)
            if act(m1, x, X) != act(m2, x, X):
                sb_ok = False
                break
        r.samples += 1
        if perm_ok != sb_ok or perm_ok != (set(supp) <= C):
            r.fail(X=X, x=x, C=sorted(C), perm_support=perm_ok, sb_support=sb_ok)
    out.append(r)

    r = CheckReport("equivariant maps preserve supports")
    maps = [
        (lambda p: p[0], Product(A, A), A),
        (lambda p: Tup((p[1], p[0])), SepProduct(A, A), SepProduct(A, A)),
        (lambda w: Tup(w.children[::-1]), WordsUpTo(A, 3), WordsUpTo(A, 3)),
        (lambda x: unit(x, Product(A, A)), Product(A, A), Free(Product(A, A))),
    ]
    for i, (f, X, Y) in enumerate(maps):
        sub = is_equivariant(f, X, Y, max(1, samples // len(maps)), seed=f"{seed}:{i}")
        r.samples += sub.samples
        if not sub.ok:
            r.fail(X=X, Y=Y, **sub.counterexample)
    out.append(r)

    r = CheckReport("orbit_shape is a perfect orbit invariant")
    rng = _rng(seed, r.name)
    for i in range(samples):
        X = sets[i % len(sets)]
        v, w = sample_value(X, rng, 3), sample_value(X, rng, 3)
        sv, sw = support_order(v), support_order(w)
        related = False
        if len(sv) == len(sw):
            g = extend_injection(dict(zip(sv, sw)))
            related = act(g, v) == w
        r.samples += 1
        if (orbit_shape(v, X) == orbit_shape(w, X)) != related:
            r.fail(X=X, v=v, w=w)
    out.append(r)

    r = CheckReport("|orbits(X * Y)| = |orbits(X)| |orbits(Y)|")
    small = [A, Product(A, A), WordsUpTo(A, 2), Coproduct(Discrete("s"), A), SepProduct(A, A)]
    for X, Y in itertools.product(small, repeat=2):
        r.samples += 1
        if len(orbits(SepProduct(X, Y))) != len(orbits(X)) * len(orbits(Y)):
            r.fail(X=X, Y=Y)
    out.append(r)

    r = CheckReport("|orbits(A^(k) x A^(j))| = #partial injections")
    for k, j in itertools.product(range(4), repeat=2):
        r.samples += 1
        got = len(orbits(Product(SepPower(A, k), SepPower(A, j))))
        if got != partial_injection_count(k, j):
            r.fail(k=k, j=j, got=got, expected=partial_injection_count(k, j))
    out.append(r)
    return out


# -- adjunction -------------------------------------------------------------------


def _adjunction_maps():
    st = fifo_states(3)
    return [
        ("id", A, A, lambda x: x),
        ("pi1", SepProduct(A, A), A, lambda p: p[0]),
        ("pi2", Product(A, A), A, lambda p: p[1]),
        ("queue1", A, st, lambda x: Tup((x,))),
        ("queue2", SepProduct(A, A), st, lambda p: Tup(p.children)),
        ("queue3", Product(A, A), st, lambda p: Tup((p[1], p[0], p[1]))),
    ]


def _random_presentation(rng, e):
    """A pair (m, x) with [m, x] = e other than the canonical one."""
    x0 = representative(e.base)
    g = random_perm(rng, range(e.base.dim + 4))
    m0 = Subst(enumerate(e.images))
    noise = {a: rng.randrange(20) for a in range(e.base.dim + 4)
             if a not in {g(i) for i in range(e.base.dim)}}
    m = Subst({**noise, **{a: compose(m0, inverse(g))(a) for a in
                           (g(i) for i in range(e.base.dim))}})
    return m, act(g, x0)


def suite_adjunction(seed=0, samples=500):
    out = []
    for name, X, Y, f in _adjunction_maps():
        tag = f"[{name}: {describe(X)} -> {describe(Y)}]"
        FX = Free(X)
        fs = sharp(f, Y)
        rng = _rng(seed, tag)

        pre = is_equivariant(f, X, Y, samples, seed=f"{seed}:{tag}", name=f"f equivariant {tag}")
        out.append(pre)

        r1 = CheckReport(f"flat(sharp f) = f {tag}")
        r2 = CheckReport(f"sharp(flat h) = h {tag}")
        r3 = CheckReport(f"sharp f is Sb-equivariant {tag}")
        r4 = CheckReport(f"uniqueness: other h with h.unit = f agree with sharp f {tag}")
        r5 = CheckReport(f"triangle counit_FX . F(unit) = id {tag}")
        r6 = CheckReport(f"triangle counit_Y . unit_UY = id {tag}")
        h = lambda e: counit(free_map(f, Y)(e), Y)  # noqa: E731
        fflat = flat(fs, X)
        Funit = free_map(lambda x: unit(x, X), FX)
        for _ in range(samples):
            x = sample_value(X, rng, 6)
            e = sample_value(FX, rng, 6)
            n = _random_subst(rng, 8)
            y = sample_value(Y, rng, 6)
            for r in (r1, r2, r3, r4, r5, r6):
                r.samples += 1
            if fflat(x) != f(x):
                r1.fail(x=x, flat_sharp=fflat(x), f=f(x))
            if sharp(flat(h, X), Y)(e) != h(e):
                r2.fail(e=e)
            if fs(act_free(n, e)) != act(n, fs(e), Y):
                r3.fail(e=e, n=n)
            m, x2 = _random_presentation(rng, e)
            if free_elem(m, x2, X) != e:
                r4.fail(e=e, m=m, x=x2, reason="presentation not equivalent")
            elif h(e) != fs(e) or act(m, f(x2), Y) != fs(e):
                r4.fail(e=e, m=m, x=x2)
            if counit(Funit(e), FX) != e:
                r5.fail(e=e)
            if counit(unit(y, Y), Y) != y:
                r6.fail(y=y)
        out += [r1, r2, r3, r4, r5, r6]

    r = CheckReport("unit is Perm-equivariant")
    for i, X in enumerate([A, SepProduct(A, A), Product(A, A)]):
        sub = is_equivariant(lambda x, X=X: unit(x, X), X, Free(X), samples, seed=f"{seed}:u{i}")
        r.samples += sub.samples
        if not sub.ok:
            r.fail(**sub.counterexample)
    out.append(r)

    r = CheckReport("functor laws F(id) = id, F(g.f) = F(g).F(f)")
    rng = _rng(seed, r.name)
    P = Product(A, A)
    flip = lambda p: Tup((p[1], p[0]))  # noqa: E731
    first = lambda p: p[0]  # noqa: E731
    for _ in range(samples):
        e = sample_value(Free(P), rng, 6)
        r.samples += 1
        if free_map(lambda x: x, P)(e) != e:
            r.fail(e=e, reason="identity")
        if free_map(lambda p: first(flip(p)), A)(e) != free_map(first, A)(free_map(flip, P)(e)):
            r.fail(e=e)
    out.append(r)

    out.append(normal_form_agreement(seed, max(samples, 1000)))
    return out


def normal_form_agreement(seed=0, samples=1000) -> CheckReport:
    """Normal-form equality against the brute-force permutation search."""
    r = CheckReport("FreeElem equality agrees with the ~ oracle")
    rng = _rng(seed, r.name)
    sets = [SepProduct(A, A), Product(A, A), WordsUpTo(A, 3), A, Coproduct(Discrete("s"), A)]
    same = 0
    for i in range(samples):
        X = sets[i % len(sets)]
        x1 = sample_value(X, rng, 5)
        m1 = _random_subst(rng, 6)
        if rng.random() < 0.5:
            g = random_perm(rng, range(7))
            x2 = act(g, x1)
            keep = {g(a) for a in support(x1)}
            m2 = Subst({**{a: rng.randrange(6) for a in range(7) if a not in keep},
                        **{a: m1(inverse(g)(a)) for a in keep}})
        else:
            x2 = sample_value(X, rng, 3)
            m2 = _random_subst(rng, 4)
        nf = free_elem(m1, x1, X) == free_elem(m2, x2, X)
        same += nf
        r.samples += 1
        if nf != sim_oracle(m1, x1, m2, x2, X):
            r.fail(X=X, m1=m1, x1=x1, m2=m2, x2=x2, normal_form_equal=nf)
    r.witness = {"equivalent_pairs": same, "inequivalent_pairs": samples - same}
    return r


# -- monoidal -------------------------------------------------------------------


def suite_monoidal(seed=0, samples=500):
    out = []
    pairs = [(A, A), (A, SepProduct(A, A)), (Product(A, A), A), (WordsUpTo(A, 2), A)]

    r1 = CheckReport("p . p_inv = id on F(X) x F(Y)")
    r2 = CheckReport("p_inv . p = id on F(X * Y)")
    rng = _rng(seed, r1.name)
    for i in range(samples):
        X, Y = pairs[i % len(pairs)]
        e1, e2 = sample_value(Free(X), rng, 5), sample_value(Free(Y), rng, 5)
        e = sample_value(Free(SepProduct(X, Y)), rng, 5)
        r1.samples += 1
        r2.samples += 1
        if monoidal_p(monoidal_p_inv(e1, e2, X, Y), X, Y) != (e1, e2):
            r1.fail(X=X, Y=Y, e1=e1, e2=e2)
        if monoidal_p_inv(*monoidal_p(e, X, Y), X, Y) != e:
            r2.fail(X=X, Y=Y, e=e)
    out += [r1, r2]

    r = CheckReport("|orbits F(X * Y)| = |orbits F(X) x F(Y)|")
    for X, Y in pairs:
        r.samples += 1
        lhs = len(orbits(Free(SepProduct(X, Y))))
        rhs = len(orbits(Product(Free(X), Free(Y))))
        if lhs != rhs:
            r.fail(X=X, Y=Y, lhs=lhs, rhs=rhs)
    out.append(r)

    r = CheckReport("F(1) is a singleton")
    r.samples = 1
    if len(orbits(Free(ONE))) != 1 or orbits(Free(ONE))[0].dim != 0:
        r.fail(orbits=list(orbits(Free(ONE))))
    out.append(r)

    r = CheckReport("|orbits F(A^(n))| = |orbits A^n| = Bell(n), n <= 5")
    for n in range(6):
        r.samples += 1
        got, plain, bell = len(orbits(Free(SepPower(A, n)))), len(orbits(Power(A, n))), bell_bruteforce(n)
        if not got == plain == bell:
            r.fail(n=n, free=got, power=plain, bell=bell)
    out.append(r)

    r = CheckReport("|orbits F(A^(<=n))| = |orbits A^(<=n)|, n <= 4")
    for n in range(5):
        r.samples += 1
        lhs, rhs = len(orbits(Free(SepWordsUpTo(A, n)))), len(orbits(WordsUpTo(A, n)))
        if lhs != rhs:
            r.fail(n=n, free=lhs, words=rhs)
    out.append(r)

    r = CheckReport("F(A) = A and F(A x A) = A^2 + A by orbit count")
    r.samples = 2
    if len(orbits(Free(A))) != 1 or len(orbits(Free(Product(A, A)))) != 3:
        r.fail(FA=len(orbits(Free(A))), FAxA=len(orbits(Free(Product(A, A)))))
    out.append(r)
    return out


# -- one-dimensional --------------------------------------------------------------

ONE_DIM_CASES = [
    (A, (0, 1)),
    (Coproduct(Discrete("s"), A), (1, 1)),
    (Product(Discrete(("s", "t")), A), (0, 2)),
    (Discrete(("x", "y")), (2, 0)),
    (FIFO_ALPHABET, (1, 1)),
]


def suite_onedim(seed=0, samples=500):
    out = []
    for X, expected in ONE_DIM_CASES:
        rep = one_dim_isos(X, samples, seed)
        for c in rep.checks:
            c.name = f"{c.name} [{describe(X)}]"
            out.append(c)
        r = CheckReport(f"decomposition (|Y|, |I|) of {describe(X)}", 1)
        if rep.decomposition != expected:
            r.fail(got=list(rep.decomposition), expected=list(expected))
        out.append(r)

    r = CheckReport("dimension-2 sets are rejected with a witness orbit", 1)
    try:
        one_dim_isos(Product(A, A), 1, seed)
        r.fail(reason="A x A accepted")
    except DimensionError as exc:
        if exc.witness.dim != 2:
            r.fail(witness=exc.witness)
        r.witness = {"orbit": str(exc.witness)}
    out.append(r)
    return out


# -- automata -------------------------------------------------------------------


def suite_automata(seed=0, samples=500):
    out = []
    F3 = fifo_automaton(3)
    Q3 = fifo_states(3)

    out.append(is_equivariant(lambda p: F3.delta(p[0], p[1]), Product(Q3, FIFO_ALPHABET), Q3,
                              samples, seed=f"{seed}:delta", name="FIFO delta Perm-equivariant"))
    out.append(is_equivariant(F3.out, Q3, FIFO_OUTPUT, samples, seed=f"{seed}:out",
                              name="FIFO output Perm-equivariant"))
    out.append(check_language_equivariance(F3, samples, seed, "perm",
                                           name="FIFO language Perm-equivariant"))
    out.append(check_language_equivariance(F3, samples, seed, "sb",
                                           name="FIFO language Sb-equivariant"))
    out.append(check_language_equivariance(last_letter_automaton(), samples, seed, "sb",
                                           name="last-letter language Sb-equivariant"))

    inner = check_language_equivariance(repeat_automaton(), samples, seed, "sb")
    r = CheckReport("repeat acceptor is not Sb-equivariant", inner.samples)
    if inner.ok:
        r.fail(reason="no counterexample found")
    else:
        r.witness = inner.counterexample
    out.append(r)

    r = CheckReport("reachable orbits: 1 + sum Bell(k) nominal, n + 2 separated, n <= 5")
    for n in range(6):
        Fn = fifo_automaton(n)
        r.samples += 1
        nom, sep = len(reachable_orbits(Fn)), len(reachable_orbits(restrict(Fn)))
        expected = 1 + sum(bell_bruteforce(k) for k in range(n + 1))
        if nom != expected or sep != n + 2:
            r.fail(n=n, nominal=nom, separated=sep, expected_nominal=expected)
    out.append(r)

    r = CheckReport("R(A_*) within R(A), n <= 4")
    for n in range(5):
        Fn = fifo_automaton(n)
        r.samples += 1
        if not set(reachable_orbits(restrict(Fn))) <= set(reachable_orbits(Fn)):
            r.fail(n=n)
    out.append(r)

    r = CheckReport("reachable orbits independent of worklist order")
    for n in range(5):
        for Fn in (fifo_automaton(n), restrict(fifo_automaton(n))):
            r.samples += 1
            if set(reachable_orbits(Fn)) != set(reachable_orbits(Fn, lifo=True)):
                r.fail(n=n, kind=Fn.kind)
    out.append(r)

    r = CheckReport("l(q, uv) = l(delta*(q, u), v)")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        q = sample_value(Q3, rng, 4)
        u, v = sample_word(FIFO_ALPHABET, rng, 4), sample_word(FIFO_ALPHABET, rng, 4)
        r.samples += 1
        if run_from(F3, q, u + v) != run_from(F3, run_state(F3, q, u), v):
            r.fail(q=q, u=u, v=v)
    out.append(r)

    r = CheckReport("run_separated defined exactly on separated words, agreeing with run")
    rng = _rng(seed, r.name)
    S3 = restrict(F3)
    for _ in range(samples):
        w = sample_word(FIFO_ALPHABET, rng, 6, pool=5)
        sep = all(not (support(a) & support(b)) for a, b in itertools.combinations(w, 2))
        r.samples += 1
        try:
            got = run_separated(S3, w)
        except SeparationError:
            if sep:
                r.fail(word=w, reason="rejected a separated word")
            continue
        if not sep:
            r.fail(word=w, reason="accepted a non-separated word")
        elif got != run(F3, w):
            r.fail(word=w, separated=got, full=run(F3, w))
    out.append(r)
    return out


# -- extension ------------------------------------------------------------------


def suite_extension(seed=0, samples=1000, n=3):
    out = []
    Fn = fifo_automaton(n)
    Sn = restrict(Fn)

    r = CheckReport(f"extend_language(restrict(fifo{n})) = run(fifo{n}), |w| <= 6")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        w = sample_word(FIFO_ALPHABET, rng, 6, pool=4)
        r.samples += 1
        ext, full = extend_language(Sn, w), run(Fn, w)
        if ext != full:
            r.fail(word=w, extended=ext, full=full)
    out.append(r)

    r = CheckReport("extension independent of the fresh atoms chosen")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        w = sample_word(FIFO_ALPHABET, rng, 6, pool=4)
        shift = rng.randint(1, 50)
        r.samples += 1
        if extend_language(Sn, w) != extend_language(Sn, w, avoid=range(shift)):
            r.fail(word=w, shift=shift)
    out.append(r)

    r = CheckReport("extension equals the separated run on separated words")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        w = sample_word(FIFO_ALPHABET, rng, 6, pool=12)
        if len({a for l in w for a in support(l)}) != sum(len(support(l)) for l in w):
            continue
        r.samples += 1
        if extend_language(Sn, w) != run_separated(Sn, w):
            r.fail(word=w)
    out.append(r)

    r = CheckReport("extension matches full run for n in 0..5")
    rng = _rng(seed, r.name)
    for k in range(6):
        Fk = fifo_automaton(k)
        Sk = restrict(Fk)
        for _ in range(max(1, samples // 10)):
            w = sample_word(FIFO_ALPHABET, rng, 7, pool=3)
            r.samples += 1
            if extend_language(Sk, w) != run(Fk, w):
                r.fail(n=k, word=w)
    out.append(r)
    return out


# -- counterexamples ------------------------------------------------------------


def suite_counterexamples(seed=0, samples=500):
    out = []

    r = CheckReport("nuclear set: every finite C has a witness m1|C = m2|C, m1.a != m2.a")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        C = set(rng.sample(range(15), rng.randint(0, 8)))
        a = rng.choice(sorted(C)) if C and rng.random() < 0.7 else rng.randrange(15)
        C.add(a)
        m1, m2 = nuclear_witness(a, C)
        r.samples += 1
        if not m1.restrict_eq(m2, C) or NUCLEAR.act(m1, AtomLeaf(a)) == NUCLEAR.act(m2, AtomLeaf(a)):
            r.fail(C=sorted(C), a=a, m1=m1, m2=m2)
    out.append(r)

    r = CheckReport("nuclear set: {a} is a Perm-support of a")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        a = rng.randrange(10)
        g = random_perm(rng, [b for b in range(12) if b != a])
        r.samples += 1
        if NUCLEAR.act(g, AtomLeaf(a)) != AtomLeaf(a):
            r.fail(a=a, g=g)
    out.append(r)

    r = CheckReport("nuclear set satisfies the Sb-set laws, * fixed by all m")
    rng = _rng(seed, r.name)
    for _ in range(samples):
        v = STAR if rng.random() < 0.2 else AtomLeaf(rng.randrange(6))
        if rng.random() < 0.5:
            m, n = random_perm(rng, range(6)), random_perm(rng, range(6))
        else:
            m, n = _random_subst(rng), _random_subst(rng)
        r.samples += 1
        if NUCLEAR.act(ID, v) != v or NUCLEAR.act(compose(m, n), v) != NUCLEAR.act(m, NUCLEAR.act(n, v)):
            r.fail(v=v, m=m, n=n)
        if NUCLEAR.act(m, STAR) != STAR:
            r.fail(m=m, reason="* moved")
    out.append(r)

    inner = is_equivariant(lambda x: AtomLeaf(0), A, A, samples, seed=seed)
    r = CheckReport("constant map to an atom is not equivariant", inner.samples)
    if inner.ok:
        r.fail(reason="no counterexample found")
    else:
        r.witness = inner.counterexample
    out.append(r)
    return out


SUITES = {
    "actions": suite_actions,
    "supports": suite_supports,
    "adjunction": suite_adjunction,
    "monoidal": suite_monoidal,
    "onedim": suite_onedim,
    "automata": suite_automata,
    "extension": suite_extension,
    "counterexamples": suite_counterexamples,
}


def run_suite(name: str, seed: int = 0, samples: int = 500) -> dict:
    if name == "all":
        parts = [run_suite(n, seed, samples) for n in SUITES]
        props = [p for part in parts for p in part["properties"]]
    elif name in SUITES:
        props = [r.to_dict() for r in SUITES[name](seed, samples)]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    return {
        "suite": name,
        "seed": seed,
        "samples": samples,
        "ok": all(p["ok"] for p in props),
        "properties": props,
    }
