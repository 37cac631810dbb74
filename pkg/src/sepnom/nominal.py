"""Concrete nominal values and orbit-finite set descriptors.

Every set built from the constructors below has orbits of the form A^(k)
with trivial stabilizer, so the orbit of a value is pinned down by its
shape: which coproduct branches it went through, the value tree with its
atoms blanked out, and the equality pattern of its atom occurrences read
depth-first.  Everything else in the package leans on that fact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterator

from .atoms import Atom, Perm, Subst


# -- values -------------------------------------------------------------------


@dataclass(frozen=True)
class AtomLeaf:
    a: Atom

    def __post_init__(self):
        if not isinstance(self.a, int) or self.a < 0:
            raise TypeError(f"atoms are non-negative ints, got {self.a!r}")

    def __repr__(self):
        return f"AtomLeaf({self.a})"


@dataclass(frozen=True)
class Label:
    name: str


@dataclass(frozen=True)
class Tup:
    children: tuple = ()

    def __init__(self, children=()):
        object.__setattr__(self, "children", tuple(children))

    def __len__(self):
        return len(self.children)

    def __getitem__(self, i):
        return self.children[i]


@dataclass(frozen=True)
class Tagged:
    name: str
    child: Any


@dataclass(frozen=True)
class FreeElem:
    """Normal form of a class [m, x] of F(X).

    ``base`` is the orbit of x, ``images`` lists m applied to the canonical
    support atoms 0..k-1 of that orbit's representative.
    """

    base: OrbitShape
    images: tuple[Atom, ...]

    def __init__(self, base, images):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "images", tuple(images))
        if len(self.images) != base.dim:
            raise ValueError(f"{base.dim} images expected, got {len(self.images)}")


def word(*atoms: Atom) -> Tup:
    return Tup(AtomLeaf(a) for a in atoms)


def atom_seq(v) -> list[Atom]:
    """Atom occurrences, depth-first, left to right."""
    out: list[Atom] = []
    _collect(v, out)
    return out


def _collect(v, out):
    if isinstance(v, AtomLeaf):
        out.append(v.a)
    elif isinstance(v, Tup):
        for c in v.children:
            _collect(c, out)
    elif isinstance(v, Tagged):
        _collect(v.child, out)
    elif isinstance(v, FreeElem):
        out.extend(v.images)
    elif not isinstance(v, Label):
        raise TypeError(f"not a nominal value: {v!r}")


def support(v) -> frozenset[Atom]:
    return frozenset(atom_seq(v))


def support_order(v) -> tuple[Atom, ...]:
    """Support atoms in order of first occurrence."""
    return tuple(dict.fromkeys(atom_seq(v)))


def separated(x, y) -> bool:
    return not (support(x) & support(y))


def rename(v, f: Callable[[Atom], Atom]):
    """Replace every atom ``a`` in ``v`` by ``f(a)``."""
    if isinstance(v, AtomLeaf):
        return AtomLeaf(f(v.a))
    if isinstance(v, Label):
        return v
    if isinstance(v, Tup):
        return Tup(rename(c, f) for c in v.children)
    if isinstance(v, Tagged):
        return Tagged(v.name, rename(v.child, f))
    if isinstance(v, FreeElem):
        return FreeElem(v.base, (f(a) for a in v.images))
    raise TypeError(f"not a nominal value: {v!r}")


# -- descriptors --------------------------------------------------------------


class SetDesc:
    """Base class of set descriptors."""

    has_sb_action = True

    def __str__(self):
        return describe(self)


@dataclass(frozen=True)
class Atoms(SetDesc):
    pass


@dataclass(frozen=True)
class Unit(SetDesc):
    pass


@dataclass(frozen=True)
class Discrete(SetDesc):
    labels: tuple[str, ...]

    def __init__(self, labels):
        if isinstance(labels, str):
            labels = (labels,)
        object.__setattr__(self, "labels", tuple(sorted(set(labels))))


@dataclass(frozen=True)
class Tag(SetDesc):
    """Values ``Tagged(name, x)`` for x in ``base``."""

    name: str
    base: SetDesc

    @property
    def has_sb_action(self):
        return self.base.has_sb_action


@dataclass(frozen=True)
class Product(SetDesc):
    left: SetDesc
    right: SetDesc

    @property
    def has_sb_action(self):
        return self.left.has_sb_action and self.right.has_sb_action


@dataclass(frozen=True)
class SepProduct(SetDesc):
    left: SetDesc
    right: SetDesc
    has_sb_action = False


@dataclass(frozen=True)
class Coproduct(SetDesc):
    """Disjoint union.

    Values are left untagged when the two sides are syntactically disjoint
    (e.g. atoms + labels); otherwise they are wrapped as ``inl``/``inr``.
    """

    left: SetDesc
    right: SetDesc
    tagged: bool = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tagged", bool(_heads(self.left) & _heads(self.right)))

    @property
    def has_sb_action(self):
        return self.left.has_sb_action and self.right.has_sb_action


@dataclass(frozen=True)
class Power(SetDesc):
    """Words of length exactly ``n``."""

    base: SetDesc
    n: int

    @property
    def has_sb_action(self):
        return self.base.has_sb_action


@dataclass(frozen=True)
class SepPower(SetDesc):
    """Separated words of length exactly ``n``."""

    base: SetDesc
    n: int
    has_sb_action = False


@dataclass(frozen=True)
class WordsUpTo(SetDesc):
    base: SetDesc
    n: int

    @property
    def has_sb_action(self):
        return self.base.has_sb_action


@dataclass(frozen=True)
class SepWordsUpTo(SetDesc):
    base: SetDesc
    n: int
    has_sb_action = False


@dataclass(frozen=True)
class Free(SetDesc):
    base: SetDesc


A = Atoms()
ONE = Unit()


def _heads(X) -> frozenset:
    # outermost syntax of the values of X; used to decide Coproduct tagging
    match X:
        case Atoms():
            return frozenset({"atom"})
        case Unit():
            return frozenset({("tup", 0)})
        case Discrete(labels):
            return frozenset(("label", s) for s in labels)
        case Tag(name, _):
            return frozenset({("tag", name)})
        case Product() | SepProduct():
            return frozenset({("tup", 2)})
        case Power(_, n) | SepPower(_, n):
            return frozenset({("tup", n)})
        case WordsUpTo(_, n) | SepWordsUpTo(_, n):
            return frozenset(("tup", i) for i in range(n + 1))
        case Coproduct(left, right):
            if X.tagged:
                return frozenset({("tag", "inl"), ("tag", "inr")})
            return _heads(left) | _heads(right)
        case Free():
            return frozenset({"free"})
    raise TypeError(f"not a set descriptor: {X!r}")


def describe(X) -> str:
    match X:
        case Atoms():
            return "A"
        case Unit():
            return "1"
        case Discrete(labels):
            return "D{" + ",".join(labels) + "}"
        case Tag(name, base):
            return f"tag({name},{describe(base)})"
        case Product(l, r):
            return f"prod({describe(l)},{describe(r)})"
        case SepProduct(l, r):
            return f"sep({describe(l)},{describe(r)})"
        case Coproduct(l, r):
            return f"sum({describe(l)},{describe(r)})"
        case Power(b, n):
            return f"pow({describe(b)},{n})"
        case SepPower(b, n):
            return f"seppow({describe(b)},{n})"
        case WordsUpTo(b, n):
            return f"wordsle({describe(b)},{n})"
        case SepWordsUpTo(b, n):
            return f"sepwordsle({describe(b)},{n})"
        case Free(b):
            return f"free({describe(b)})"
    raise TypeError(f"not a set descriptor: {X!r}")


# -- membership and orbit shapes ----------------------------------------------


class MembershipError(ValueError):
    pass


def _pairwise_separated(vs) -> bool:
    seen: set[Atom] = set()
    for v in vs:
        s = support(v)
        if s & seen:
            return False
        seen |= s
    return True


def path_of(v, X) -> str | None:
    """Coproduct branches taken by ``v`` inside ``X``; None if ``v`` is not a member."""
    match X:
        case Atoms():
            return "" if isinstance(v, AtomLeaf) else None
        case Unit():
            return "" if v == Tup() else None
        case Discrete(labels):
            return "" if isinstance(v, Label) and v.name in labels else None
        case Tag(name, base):
            if isinstance(v, Tagged) and v.name == name:
                return path_of(v.child, base)
            return None
        case Product(l, r) | SepProduct(l, r):
            if not (isinstance(v, Tup) and len(v) == 2):
                return None
            if isinstance(X, SepProduct) and not separated(v[0], v[1]):
                return None
            return _join(path_of(v[0], l), path_of(v[1], r))
        case Coproduct(l, r):
            if X.tagged:
                if isinstance(v, Tagged) and v.name in ("inl", "inr"):
                    sub = l if v.name == "inl" else r
                    p = path_of(v.child, sub)
                    return None if p is None else ("L" if v.name == "inl" else "R") + p
                return None
            p = path_of(v, l)
            if p is not None:
                return "L" + p
            p = path_of(v, r)
            return None if p is None else "R" + p
        case Power(b, n) | SepPower(b, n):
            if not (isinstance(v, Tup) and len(v) == n):
                return None
            return _word_path(v, b, isinstance(X, SepPower))
        case WordsUpTo(b, n) | SepWordsUpTo(b, n):
            if not (isinstance(v, Tup) and len(v) <= n):
                return None
            return _word_path(v, b, isinstance(X, SepWordsUpTo))
        case Free(b):
            if not isinstance(v, FreeElem):
                return None
            return "" if v.base in _orbit_set(b) else None
    raise TypeError(f"not a set descriptor: {X!r}")


def _join(*paths):
    if any(p is None for p in paths):
        return None
    return "".join(paths)


def _word_path(v, b, sep):
    if sep and not _pairwise_separated(v.children):
        return None
    return _join(*(path_of(c, b) for c in v.children))


def is_member(v, X) -> bool:
    return path_of(v, X) is not None


def check_member(v, X):
    if path_of(v, X) is None:
        raise MembershipError(f"{render(v)} is not a member of {describe(X)}")


@dataclass(frozen=True)
class OrbitShape:
    """Canonical orbit identifier: branch path, atom-free skeleton, equality pattern."""

    path: str
    skeleton: tuple
    pattern: tuple[int, ...]

    @property
    def dim(self) -> int:
        return max(self.pattern, default=0)

    def sort_key(self):
        return (self.path, self.skeleton, self.pattern)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return shape_id(self)


def _skeleton(v) -> tuple:
    if isinstance(v, AtomLeaf):
        return ("a",)
    if isinstance(v, Label):
        return ("l", v.name)
    if isinstance(v, Tup):
        return ("t",) + tuple(_skeleton(c) for c in v.children)
    if isinstance(v, Tagged):
        return ("g", v.name, _skeleton(v.child))
    if isinstance(v, FreeElem):
        return ("f", v.base, len(v.images))
    raise TypeError(f"not a nominal value: {v!r}")


def equality_pattern(seq) -> tuple[int, ...]:
    """Number entries by first occurrence, starting at 1."""
    ids: dict = {}
    return tuple(ids.setdefault(x, len(ids) + 1) for x in seq)


def orbit_shape(v, X) -> OrbitShape:
    p = path_of(v, X)
    if p is None:
        raise MembershipError(f"{render(v)} is not a member of {describe(X)}")
    return OrbitShape(p, _skeleton(v), equality_pattern(atom_seq(v)))


def representative(s: OrbitShape):
    """Orbit member whose support atoms are 0..k-1 in first-occurrence order."""
    it = iter(p - 1 for p in s.pattern)
    return _fill(s.skeleton, it)


def _fill(sk, it):
    kind = sk[0]
    if kind == "a":
        return AtomLeaf(next(it))
    if kind == "l":
        return Label(sk[1])
    if kind == "t":
        return Tup(_fill(c, it) for c in sk[1:])
    if kind == "g":
        return Tagged(sk[1], _fill(sk[2], it))
    if kind == "f":
        return FreeElem(sk[1], [next(it) for _ in range(sk[2])])
    raise ValueError(f"bad skeleton {sk!r}")


# -- orbit enumeration ----------------------------------------------------------


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Equality patterns of length n (restricted growth strings from 1)."""
    def go(prefix, k):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(1, k + 2):
            yield from go(prefix + [b], max(k, b))
    yield from go([], 0)


def partial_injections(j: int, k: int) -> Iterator[dict[int, int]]:
    """All partial injections from range(j) into range(k)."""
    def go(i, used, acc):
        if i == j:
            yield dict(acc)
            return
        yield from go(i + 1, used, acc)
        for t in range(k):
            if t not in used:
                acc[i] = t
                yield from go(i + 1, used | {t}, acc)
                del acc[i]
    yield from go(0, frozenset(), {})


def _extend(prefix: tuple, letter, sep: bool) -> Iterator[tuple]:
    # prefix and letter are canonical (atoms 0..k-1 / 0..j-1); align letter
    # onto the prefix support via every allowed matching
    k = len(support(Tup(prefix)))
    j = len(support(letter))
    matchings = [{}] if sep else partial_injections(j, k)
    for match in matchings:
        table = {}
        nxt = k
        for i in range(j):
            if i in match:
                table[i] = match[i]
            else:
                table[i] = nxt
                nxt += 1
        yield prefix + (rename(letter, table.__getitem__),)


def _reps(X) -> list:
    match X:
        case Atoms():
            return [AtomLeaf(0)]
        case Unit():
            return [Tup()]
        case Discrete(labels):
            return [Label(s) for s in labels]
        case Tag(name, base):
            return [Tagged(name, r) for r in _reps(base)]
        case Product(l, r) | SepProduct(l, r):
            sep = isinstance(X, SepProduct)
            out = []
            for x in _reps(l):
                for y in _reps(r):
                    out.extend(Tup(w) for w in _extend((x,), y, sep))
            return out
        case Coproduct(l, r):
            if X.tagged:
                return [Tagged("inl", v) for v in _reps(l)] + [Tagged("inr", v) for v in _reps(r)]
            return _reps(l) + _reps(r)
        case Power(b, n) | SepPower(b, n):
            return [Tup(w) for w in _words(b, n, isinstance(X, SepPower))]
        case WordsUpTo(b, n) | SepWordsUpTo(b, n):
            sep = isinstance(X, SepWordsUpTo)
            return [Tup(w) for i in range(n + 1) for w in _words(b, i, sep)]
        case Free(b):
            return [
                FreeElem(s, [p - 1 for p in pat])
                for s in orbits(b)
                for pat in set_partitions(s.dim)
            ]
    raise TypeError(f"not a set descriptor: {X!r}")


def _words(b, n, sep):
    letters = _reps(b)
    layer = [()]
    for _ in range(n):
        layer = [w for prefix in layer for y in letters for w in _extend(prefix, y, sep)]
    return layer


@lru_cache(maxsize=None)
def orbits(X) -> tuple[OrbitShape, ...]:
    """All orbits of ``X``, sorted by (path, skeleton, pattern)."""
    shapes = {orbit_shape(r, X) for r in _reps(X)}
    return tuple(sorted(shapes, key=OrbitShape.sort_key))


@lru_cache(maxsize=None)
def _orbit_set(X) -> frozenset:
    return frozenset(orbits(X))


def dimension(X) -> int:
    return max((s.dim for s in orbits(X)), default=0)


def decomposition(X) -> tuple[int, int]:
    """(|Y|, |I|) with X = Y + sum_I A; only meaningful when dimension(X) <= 1."""
    dims = [s.dim for s in orbits(X)]
    if any(d > 1 for d in dims):
        raise ValueError(f"{describe(X)} has dimension {max(dims)} > 1")
    return dims.count(0), dims.count(1)


# -- actions ------------------------------------------------------------------


def act(m: Subst, v, X=None):
    """Apply ``m`` atom-wise to ``v``.

    With a descriptor, non-bijective substitutions are refused on sets that
    carry only a permutation action (separated products and words).
    """
    if X is not None and not m.is_perm and not X.has_sb_action:
        raise ValueError(f"{describe(X)} has no action of the non-injective {m}")
    return rename(v, m)


# -- sampling -----------------------------------------------------------------


def random_perm(rng: random.Random, pool) -> Perm:
    pool = sorted(set(pool))
    shuffled = pool[:]
    rng.shuffle(shuffled)
    return Perm(zip(pool, shuffled))


def random_subst(rng: random.Random, pool, targets=None) -> Subst:
    pool = sorted(set(pool))
    targets = pool if targets is None else sorted(set(targets))
    return Subst((a, rng.choice(targets)) for a in pool)


def instantiate(s: OrbitShape, atoms) -> Any:
    """Orbit member with support atoms ``atoms`` in first-occurrence order."""
    atoms = list(atoms)
    if len(atoms) != s.dim or len(set(atoms)) != len(atoms):
        raise ValueError(f"need {s.dim} distinct atoms, got {atoms}")
    return rename(representative(s), atoms.__getitem__)


def sample_value(X, rng: random.Random, pool: int = 8):
    s = rng.choice(orbits(X))
    return instantiate(s, rng.sample(range(max(pool, s.dim)), s.dim))


@dataclass
class CheckReport:
    name: str
    samples: int = 0
    ok: bool = True
    counterexample: dict | None = None
    # for checks that succeed by exhibiting something (e.g. a non-equivariance)
    witness: dict | None = None

    def fail(self, **info):
        if self.ok:
            self.ok = False
            self.counterexample = {k: _show(v) for k, v in info.items()}

    def to_dict(self):
        d = {
            "property": self.name,
            "samples": self.samples,
            "ok": self.ok,
            "counterexample": self.counterexample,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _show(v):
    if isinstance(v, (AtomLeaf, Label, Tup, Tagged, FreeElem)):
        return render(v)
    if isinstance(v, (Subst, OrbitShape, SetDesc)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    return v


def is_equivariant(f, X, Y, samples: int = 200, seed: int = 0, monoid: str = "perm",
                   pool: int = 8, name: str = "equivariance") -> CheckReport:
    """Sample (m, x) and test f(m.x) == m.f(x) and supp f(x) within supp x."""
    rng = random.Random(seed)
    rep = CheckReport(name)
    for _ in range(samples):
        x = sample_value(X, rng, pool)
        atoms = range(pool + 2)
        m = random_perm(rng, atoms) if monoid == "perm" else random_subst(rng, atoms)
        rep.samples += 1
        fx = f(x)
        lhs, rhs = f(act(m, x, X)), act(m, fx, Y)
        if lhs != rhs:
            rep.fail(x=x, m=m, f_of_mx=lhs, m_of_fx=rhs)
        elif not support(fx) <= support(x):
            rep.fail(x=x, fx=fx, reason="support not preserved")
    return rep


# -- rendering / json -----------------------------------------------------------


def render(v) -> str:
    if isinstance(v, AtomLeaf):
        return str(v.a)
    if isinstance(v, Label):
        return v.name
    if isinstance(v, Tup):
        return "(" + ",".join(render(c) for c in v.children) + ")"
    if isinstance(v, Tagged):
        return f"{v.name}({render(v.child)})"
    if isinstance(v, FreeElem):
        imgs = ",".join(map(str, v.images))
        return f"[{shape_id(v.base)}|{imgs}]"
    raise TypeError(f"not a nominal value: {v!r}")


def shape_id(s: OrbitShape) -> str:
    body = render(representative(s))
    return f"{s.path}:{body}" if s.path else body


def to_json(v):
    if isinstance(v, AtomLeaf):
        return {"kind": "atom", "id": v.a}
    if isinstance(v, Label):
        return {"kind": "label", "name": v.name}
    if isinstance(v, Tup):
        return {"kind": "tuple", "children": [to_json(c) for c in v.children]}
    if isinstance(v, Tagged):
        return {"kind": "tagged", "name": v.name, "child": to_json(v.child)}
    if isinstance(v, FreeElem):
        return {"base": shape_id(v.base), "images": list(v.images)}
    raise TypeError(f"not a nominal value: {v!r}")


def from_json(d, X=None):
    """Inverse of :func:`to_json`.  Free elements need the descriptor ``X``
    (or a Free descriptor inside it) to resolve their base shape id."""
    if "base" in d:
        if X is None:
            raise ValueError("descriptor needed to decode a free element")
        bases = {shape_id(s): s for s in _free_bases(X)}
        return FreeElem(bases[d["base"]], d["images"])
    kind = d["kind"]
    if kind == "atom":
        return AtomLeaf(d["id"])
    if kind == "label":
        return Label(d["name"])
    if kind == "tuple":
        return Tup(from_json(c, X) for c in d["children"])
    if kind == "tagged":
        return Tagged(d["name"], from_json(d["child"], X))
    raise ValueError(f"unknown node kind {kind!r}")


def _free_bases(X):
    out = []
    def walk(Y):
        if isinstance(Y, Free):
            out.extend(orbits(Y.base))
        for attr in ("left", "right", "base"):
            sub = getattr(Y, attr, None)
            if isinstance(sub, SetDesc):
                walk(sub)
    walk(X)
    return out


def shape_json(s: OrbitShape) -> dict:
    return {
        "id": shape_id(s),
        "path": s.path,
        "dimension": s.dim,
        "pattern": list(s.pattern),
        "representative": to_json(representative(s)),
    }
