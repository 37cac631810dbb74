"""Concrete instances: the bounded FIFO queue, small test automata, and the
nuclear set A + 1 whose substitution action has no finite supports."""

from __future__ import annotations

from dataclasses import dataclass

from .atoms import ID, Subst, fresh
from .automata import MooreAutomaton
from .nominal import (
    A,
    AtomLeaf,
    Coproduct,
    Discrete,
    Label,
    Tag,
    Tagged,
    Tup,
    WordsUpTo,
)

BOT = Label("⊥")
POP = Label("Pop")


def put(a: int) -> Tagged:
    return Tagged("Put", AtomLeaf(a))


FIFO_ALPHABET = Coproduct(Tag("Put", A), Discrete("Pop"))
FIFO_OUTPUT = Coproduct(A, Discrete("⊥"))


def fifo_states(n: int):
    return Coproduct(WordsUpTo(A, n), Discrete("⊥"))


@dataclass(frozen=True)
class FifoConfig:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("queue capacity must be >= 0")


def fifo_automaton(cfg: FifoConfig | int) -> MooreAutomaton:
    n = cfg.n if isinstance(cfg, FifoConfig) else FifoConfig(cfg).n

    def delta(q, a):
        if q == BOT:
            return BOT
        if a == POP:
            return Tup(q.children[1:]) if len(q) else BOT
        return Tup(q.children + (a.child,)) if len(q) < n else BOT

    def out(q):
        return q[0] if isinstance(q, Tup) and len(q) else BOT

    return MooreAutomaton(fifo_states(n), FIFO_ALPHABET, FIFO_OUTPUT, Tup(), delta, out,
                          name=f"fifo{n}")


def repeat_automaton() -> MooreAutomaton:
    """Outputs yes once the first atom shows up again.

    Perm-equivariant but not closed under substitutions.
    """
    start, yes = Label("start"), Label("yes")

    def delta(q, a):
        if q == start:
            return a
        if q == yes or q == a:
            return yes
        return q

    def out(q):
        return yes if q == yes else Label("no")

    states = Coproduct(Discrete(("start", "yes")), A)
    return MooreAutomaton(states, A, Discrete(("no", "yes")), start, delta, out,
                          name="repeat")


def last_letter_automaton(labels=("x", "y")) -> MooreAutomaton:
    """Atom-free automaton echoing the last letter read."""
    states = Discrete(tuple(labels) + ("start",))
    return MooreAutomaton(states, Discrete(labels), states, Label("start"),
                          lambda q, a: a, lambda q: q, name="lastletter")


AUTOMATA = {
    "fifo": fifo_automaton,
    "repeat": lambda n=None: repeat_automaton(),
    "lastletter": lambda n=None: last_letter_automaton(),
}


# -- nuclear set ----------------------------------------------------------------

STAR = Label("*")


class NuclearSet:
    """A + 1 where every non-injective substitution collapses atoms to ``*``."""

    has_sb_action = True

    @staticmethod
    def members(v) -> bool:
        return isinstance(v, AtomLeaf) or v == STAR

    @staticmethod
    def act(m: Subst, v):
        if v == STAR or not m.is_perm:
            return STAR
        return AtomLeaf(m(v.a))


NUCLEAR = NuclearSet()


def nuclear_witness(a: int, C) -> tuple[Subst, Subst]:
    """Two substitutions agreeing on C that act differently on atom ``a``.

    The second one is non-injective only on atoms outside C and a.
    """
    b1, b2 = fresh(set(C) | {a}, 2)
    return ID, Subst({b1: b2})
