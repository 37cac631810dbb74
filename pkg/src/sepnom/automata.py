"""Nominal and separated Moore automata.

A nominal automaton reads any letter in any state.  A separated one only
takes a transition when the state and the letter have disjoint supports, so
its reachable part never has to track equalities between stored atoms.
"""

from __future__ import annotations

import dataclasses
import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .atoms import Subst, fresh, swap
from .nominal import (
    CheckReport,
    MembershipError,
    act,
    check_member,
    describe,
    dimension,
    instantiate,
    is_member,
    orbit_shape,
    orbits,
    partial_injections,
    random_perm,
    random_subst,
    representative,
    sample_value,
    separated,
    support,
)

FULL = "full"
SEPARATED = "separated"


class SeparationError(ValueError):
    def __init__(self, position: int, letter, message: str):
        super().__init__(f"separation violated at position {position}: {message}")
        self.position = position
        self.letter = letter


@dataclass(frozen=True)
class MooreAutomaton:
    states: object
    alphabet: object
    output: object
    initial: object
    delta: Callable
    out: Callable
    kind: str = FULL
    name: str = ""

    def __post_init__(self):
        check_member(self.initial, self.states)
        if support(self.initial):
            raise ValueError("initial state must have empty support")
        if self.kind not in (FULL, SEPARATED):
            raise ValueError(f"unknown automaton kind {self.kind!r}")


Word = Sequence


def _check_letters(A: MooreAutomaton, w: Word):
    for i, a in enumerate(w, 1):
        if not is_member(a, A.alphabet):
            raise MembershipError(f"letter {i} is not in {describe(A.alphabet)}: {a!r}")


def run_state(A: MooreAutomaton, q, w: Word):
    for a in w:
        q = A.delta(q, a)
    return q


def run_from(A: MooreAutomaton, q, w: Word):
    """Language semantics l(q, w)."""
    return A.out(run_state(A, q, w))


def run(A: MooreAutomaton, w: Word):
    if A.kind != FULL:
        raise ValueError("run needs a full automaton; use run_separated")
    _check_letters(A, w)
    return run_from(A, A.initial, w)


def run_separated(A: MooreAutomaton, w: Word):
    """Separated language semantics s(q0, w).

    Raises :class:`SeparationError` at the first letter (1-based) that shares
    an atom with an earlier letter or with the current state.
    """
    if A.kind != SEPARATED:
        raise ValueError("run_separated needs a separated automaton; see restrict()")
    _check_letters(A, w)
    q = A.initial
    seen: set = set()
    for i, a in enumerate(w, 1):
        s = support(a)
        if s & seen:
            raise SeparationError(i, a, f"atoms {sorted(s & seen)} already used")
        if s & support(q):
            raise SeparationError(i, a, "letter not separated from state")
        seen |= s
        q = A.delta(q, a)
    return A.out(q)


def restrict(A: MooreAutomaton) -> MooreAutomaton:
    """The separated automaton with delta restricted to separated pairs."""
    if A.kind != FULL:
        raise ValueError("already separated")
    delta = A.delta

    def sep_delta(q, a):
        if not separated(q, a):
            raise SeparationError(0, a, "transition on a non-separated pair")
        return delta(q, a)

    return dataclasses.replace(A, delta=sep_delta, kind=SEPARATED, name=A.name + "*")


def reachable_orbits(A: MooreAutomaton, lifo: bool = False) -> tuple:
    """Orbits of the reachable states, explored one representative per orbit.

    From a state with support C, each alphabet orbit is instantiated with its
    support atoms drawn from C or fresh (full) or fresh only (separated).
    ``lifo`` switches the worklist to depth-first, for order-independence tests.
    """
    start = orbit_shape(A.initial, A.states)
    seen = {start}
    work = deque([start])
    letters = orbits(A.alphabet)
    if lifo:
        letters = letters[::-1]
    while work:
        s = work.pop() if lifo else work.popleft()
        q = representative(s)
        k = s.dim
        for l in letters:
            j = l.dim
            matchings = partial_injections(j, k) if A.kind == FULL else [{}]
            for match in matchings:
                extra = iter(range(k, k + j))
                atoms = [match[i] if i in match else next(extra) for i in range(j)]
                q2 = A.delta(q, instantiate(l, atoms))
                s2 = orbit_shape(q2, A.states)
                if s2 not in seen:
                    seen.add(s2)
                    work.append(s2)
    return tuple(sorted(seen))


def extend_language(A: MooreAutomaton, w: Word, avoid=()):
    """Substitution-closed extension of the separated language of ``A``.

    Each atom-carrying letter a_i is replaced by a copy over a fresh atom b_i,
    the separated run is evaluated, and b_i is mapped back to a_i.
    ``avoid`` adds atoms the fresh choice must skip.
    """
    if A.kind != SEPARATED:
        raise ValueError("extend_language needs a separated automaton")
    if not (A.alphabet.has_sb_action and A.output.has_sb_action):
        raise ValueError("alphabet and output need substitution actions")
    if dimension(A.alphabet) > 1:
        raise ValueError(f"alphabet {describe(A.alphabet)} has dimension > 1")
    _check_letters(A, w)
    used = set(avoid)
    for a in w:
        used |= support(a)
    carriers = [i for i, a in enumerate(w) if support(a)]
    bs = fresh(used, len(carriers))
    letters = list(w)
    back = {}
    for i, b in zip(carriers, bs):
        (a,) = support(w[i])
        letters[i] = act(swap(a, b), w[i])
        back[b] = a
    return act(Subst(back), run_separated(A, letters), A.output)


def sample_word(alphabet, rng: random.Random, max_len: int = 6, pool: int = 4) -> list:
    return [sample_value(alphabet, rng, pool) for _ in range(rng.randint(0, max_len))]


def check_language_equivariance(A: MooreAutomaton, samples: int = 200, seed: int = 0,
                                monoid: str = "sb", max_len: int = 6, pool: int = 4,
                                name: str | None = None) -> CheckReport:
    """Sample words w and m and test L(m.w) == m.L(w)."""
    rng = random.Random(f"{seed}:lang-{monoid}")
    rep = CheckReport(name or f"{monoid}-equivariance of L({A.name})")
    for _ in range(samples):
        w = sample_word(A.alphabet, rng, max_len, pool)
        atoms = range(pool + 1)
        m = random_subst(rng, atoms) if monoid == "sb" else random_perm(rng, atoms)
        rep.samples += 1
        lhs = run(A, [act(m, a, A.alphabet) for a in w])
        rhs = act(m, run(A, w), A.output)
        if lhs != rhs:
            rep.fail(word=list(w), m=m, L_of_mw=lhs, m_of_Lw=rhs)
    return rep


def check_sb_equivariance(A: MooreAutomaton, samples: int = 200, seed: int = 0,
                          max_len: int = 6, pool: int = 4) -> CheckReport:
    if not (A.alphabet.has_sb_action and A.output.has_sb_action):
        raise ValueError("alphabet and output need substitution actions")
    return check_language_equivariance(A, samples, seed, "sb", max_len, pool)
