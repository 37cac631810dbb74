"""Orbit-finite nominal sets, the free renaming-set construction, and
nominal / separated Moore automata."""

from .atoms import ID, Perm, Subst, compose, extend_injection, fresh, inverse, kernel_partition, swap
from .nominal import (
    A,
    ONE,
    AtomLeaf,
    Coproduct,
    Discrete,
    Free,
    FreeElem,
    Label,
    OrbitShape,
    Power,
    Product,
    SepPower,
    SepProduct,
    SepWordsUpTo,
    Tag,
    Tagged,
    Tup,
    Unit,
    WordsUpTo,
    act,
    dimension,
    orbit_shape,
    orbits,
    representative,
    support,
)

__version__ = "0.1.0"
