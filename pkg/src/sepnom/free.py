"""The free renaming set F(X) over a nominal set X, and the adjunction F -| U.

Elements of F(X) are classes [m, x].  Because every orbit of X has trivial
stabilizer, a class is determined by the orbit of x together with the
m-images of x's support atoms, which is what :class:`FreeElem` stores.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .atoms import ID, Subst, extend_injection, fresh, swap
from .nominal import (
    CheckReport,
    FreeElem,
    Free,
    SepProduct,
    Tup,
    act,
    check_member,
    decomposition,
    describe,
    dimension,
    orbit_shape,
    orbits,
    random_subst,
    representative,
    sample_value,
    support,
    support_order,
)

__all__ = [
    "FreeElem", "free_elem", "sim_oracle", "act_free", "unit", "counit",
    "free_map", "sharp", "flat", "monoidal_p", "monoidal_p_inv",
    "orbits_free", "one_dim_isos", "unit_inverse", "DimensionError",
]


def _images_subst(e: FreeElem) -> Subst:
    # canonical support atom i of the base representative goes to images[i]
    return Subst(enumerate(e.images))


def free_elem(m: Subst, x, X) -> FreeElem:
    """Normal form of [m, x]."""
    check_member(x, X)
    return FreeElem(orbit_shape(x, X), (m(a) for a in support_order(x)))


def sim_oracle(m1: Subst, x1, m2: Subst, x2, X) -> bool:
    """Decide (m1, x1) ~ (m2, x2) by searching for a witnessing permutation g.

    Tries every bijection supp(x1) -> supp(x2), extends it to a permutation
    and checks g.x1 == x2 and m1 == m2.g on supp(x1).
    """
    check_member(x1, X)
    check_member(x2, X)
    C1, C2 = sorted(support(x1)), sorted(support(x2))
    if len(C1) != len(C2):
        return False
    for targets in itertools.permutations(C2):
        g = extend_injection(dict(zip(C1, targets)))
        if act(g, x1) == x2 and all(m1(c) == m2(g(c)) for c in C1):
            return True
    return False


def act_free(n: Subst, e: FreeElem) -> FreeElem:
    return FreeElem(e.base, (n(a) for a in e.images))


def unit(x, X) -> FreeElem:
    return free_elem(ID, x, X)


def counit(e: FreeElem, Y):
    if not Y.has_sb_action:
        raise ValueError(f"{describe(Y)} carries no substitution action")
    return act(_images_subst(e), representative(e.base), Y)


def free_map(f, Y):
    """F(f): [m, x] -> [m, f(x)], landing in F(Y)."""
    def Ff(e):
        return free_elem(_images_subst(e), f(representative(e.base)), Y)
    return Ff


def sharp(f, Y):
    """Transpose of f: X -> U(Y); sends [m, x] to m.f(x)."""
    def f_sharp(e):
        return act(_images_subst(e), f(representative(e.base)), Y)
    return f_sharp


def flat(h, X):
    """Transpose of h: F(X) -> Y; sends x to h([id, x])."""
    def h_flat(x):
        return h(unit(x, X))
    return h_flat


def monoidal_p(e: FreeElem, X, Y) -> tuple[FreeElem, FreeElem]:
    """F(X * Y) -> F(X) x F(Y), [m, (x, y)] -> ([m, x], [m, y])."""
    pair = representative(e.base)
    if not (isinstance(pair, Tup) and len(pair) == 2):
        raise ValueError(f"{e} is not over a separated product")
    m = _images_subst(e)
    return free_elem(m, pair[0], X), free_elem(m, pair[1], Y)


def monoidal_p_inv(e1: FreeElem, e2: FreeElem, X, Y) -> FreeElem:
    x = representative(e1.base)
    y = representative(e2.base)
    j = e2.base.dim
    new = fresh(support(x), j)
    g = extend_injection(dict(zip(range(j), new)))
    m = dict(enumerate(e1.images))
    m.update(zip(new, e2.images))
    return free_elem(Subst(m), Tup((x, act(g, y))), SepProduct(X, Y))


def orbits_free(X):
    return orbits(Free(X))


# -- one-dimensional isomorphisms ---------------------------------------------


class DimensionError(ValueError):
    def __init__(self, X, witness):
        super().__init__(f"{describe(X)} has dimension > 1, witness orbit {witness}")
        self.witness = witness


def unit_inverse(e: FreeElem, X):
    """Preimage of ``e`` under the unit, for bases of dimension <= 1.

    With supp(x) = {a} and b = m(a), [m, x] = [id, (a b).x].
    """
    x = representative(e.base)
    if e.base.dim == 0:
        return x
    if e.base.dim > 1:
        raise DimensionError(X, e.base)
    return act(swap(0, e.images[0]), x, X)


@dataclass
class OneDimReport:
    descriptor: str
    dimension: int
    decomposition: tuple[int, int]
    checks: list[CheckReport] = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def to_dict(self):
        return {
            "descriptor": self.descriptor,
            "dimension": self.dimension,
            "decomposition": list(self.decomposition),
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }


def one_dim_isos(X, samples: int = 500, seed: int = 0, pool: int = 8) -> OneDimReport:
    """Check that unit (and counit, for renaming sets) are bijections."""
    for s in orbits(X):
        if s.dim > 1:
            raise DimensionError(X, s)
    rng = random.Random(f"{seed}:onedim:{describe(X)}")
    report = OneDimReport(describe(X), dimension(X), decomposition(X))
    FX = Free(X)

    counts = CheckReport("orbit counts |X| = |UF(X)|", 1)
    if len(orbits(X)) != len(orbits(FX)):
        counts.fail(X=len(orbits(X)), FX=len(orbits(FX)))
    report.checks.append(counts)

    surj = CheckReport("unit surjective")
    inj = CheckReport("unit injective")
    elems = [representative(s) for s in orbits(FX)]
    elems += [sample_value(FX, rng, pool) for _ in range(samples)]
    for e in elems:
        surj.samples += 1
        x = unit_inverse(e, X)
        if unit(x, X) != e:
            surj.fail(e=e, preimage=x)
    for _ in range(samples):
        inj.samples += 1
        x1, x2 = sample_value(X, rng, 3), sample_value(X, rng, 3)
        if (unit(x1, X) == unit(x2, X)) != (x1 == x2):
            inj.fail(x1=x1, x2=x2)
    report.checks += [surj, inj]

    if X.has_sb_action:
        cu = CheckReport("counit bijective")
        for e in elems:
            cu.samples += 1
            y = counit(e, X)
            if unit(y, X) != e or counit(unit(y, X), X) != y:
                cu.fail(e=e, counit=y)
        lem = CheckReport("m.y equals some g.y")
        for _ in range(samples):
            lem.samples += 1
            y = sample_value(X, rng, pool)
            m = random_subst(rng, range(pool + 2))
            supp = sorted(support(y))
            g = swap(supp[0], m(supp[0])) if supp else ID
            if act(m, y, X) != act(g, y, X):
                lem.fail(y=y, m=m, g=g)
        report.checks += [cu, lem]
    return report
