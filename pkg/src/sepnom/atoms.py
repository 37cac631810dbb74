"""Atoms, finite substitutions and finite permutations.

Atoms are plain non-negative ints.  A :class:`Subst` is a map on atoms that
moves only finitely many of them; a :class:`Perm` is a bijective one.
Both are stored normalized (no ``a -> a`` entries), so ``==`` is extensional
equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

Atom = int


class Subst:
    __slots__ = ("mapping", "_table", "_hash")

    def __init__(self, mapping: Mapping[Atom, Atom] | Iterable[tuple[Atom, Atom]] = ()):
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        table = {}
        for a, b in items:
            if a < 0 or b < 0:
                raise ValueError(f"atoms are non-negative ints, got {a}->{b}")
            if a in table and table[a] != b:
                raise ValueError(f"atom {a} mapped twice")
            table[a] = b
        self.mapping = tuple(sorted((a, b) for a, b in table.items() if a != b))
        self._table = dict(self.mapping)
        self._hash = hash(self.mapping)

    def __call__(self, a: Atom) -> Atom:
        return self._table.get(a, a)

    def as_dict(self) -> dict[Atom, Atom]:
        return dict(self.mapping)

    @property
    def domain(self) -> frozenset[Atom]:
        """Atoms that are actually moved."""
        return frozenset(a for a, _ in self.mapping)

    @property
    def image(self) -> frozenset[Atom]:
        return frozenset(b for _, b in self.mapping)

    @property
    def is_perm(self) -> bool:
        # a finite substitution is injective iff it permutes its domain
        return self.domain == self.image and len(self.image) == len(self.mapping)

    def restrict_eq(self, other: Subst, C: Iterable[Atom]) -> bool:
        """True when ``self`` and ``other`` agree on every atom of ``C``."""
        return all(self(c) == other(c) for c in C)

    def __mul__(self, inner: Subst) -> Subst:
        return compose(self, inner)

    def __eq__(self, other):
        return isinstance(other, Subst) and self.mapping == other.mapping

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{a}->{b}" for a, b in self.mapping)
        return f"{type(self).__name__}({{{body}}})"

    def __str__(self):
        return "{" + ", ".join(f"{a}->{b}" for a, b in self.mapping) + "}"


class Perm(Subst):
    __slots__ = ()

    def __init__(self, mapping: Mapping[Atom, Atom] | Iterable[tuple[Atom, Atom]] = ()):
        super().__init__(mapping)
        if not Subst.is_perm.fget(self):
            raise ValueError(f"not a finite bijection: {Subst.__str__(self)}")

    @property
    def is_perm(self) -> bool:
        return True


ID = Perm()


def as_perm(m: Subst) -> Perm:
    return m if isinstance(m, Perm) else Perm(m.mapping)


def apply(m: Subst, a: Atom) -> Atom:
    return m(a)


def compose(outer: Subst, inner: Subst) -> Subst:
    """``outer . inner``, i.e. first ``inner`` then ``outer``."""
    outer_d, inner_d = outer.as_dict(), inner.as_dict()
    dom = set(outer_d) | set(inner_d)
    table = {}
    for a in dom:
        b = inner_d.get(a, a)
        table[a] = outer_d.get(b, b)
    if isinstance(outer, Perm) and isinstance(inner, Perm):
        return Perm(table)
    return Subst(table)


def swap(a: Atom, b: Atom) -> Perm:
    return Perm({a: b, b: a})


def inverse(g: Subst) -> Perm:
    if not g.is_perm:
        raise ValueError(f"{g} is not invertible")
    return Perm((b, a) for a, b in g.mapping)


def extend_injection(f: Mapping[Atom, Atom]) -> Perm:
    """Smallest permutation agreeing with the partial injection ``f``.

    Atoms that are hit by ``f`` but not in its domain are sent, in ascending
    order, to the atoms of the domain that ``f`` does not hit.
    """
    if len(set(f.values())) != len(f):
        raise ValueError(f"not injective: {dict(f)}")
    dom, img = set(f), set(f.values())
    table = dict(f)
    for src, dst in zip(sorted(img - dom), sorted(dom - img)):
        table[src] = dst
    return Perm(table)


def kernel_partition(m: Subst, C: Iterable[Atom]) -> tuple[tuple[Atom, ...], ...]:
    """Blocks of ``C`` collapsed together by ``m``, sorted by least element."""
    blocks: dict[Atom, list[Atom]] = {}
    for c in sorted(set(C)):
        blocks.setdefault(m(c), []).append(c)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def fresh(avoid: Iterable[Atom], count: int) -> tuple[Atom, ...]:
    """The ``count`` smallest atoms not in ``avoid``."""
    avoid = set(avoid)
    out = []
    a = 0
    while len(out) < count:
        if a not in avoid:
            out.append(a)
        a += 1
    return tuple(out)
