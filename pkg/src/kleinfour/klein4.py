"""Klein-four covers of P^1 as pairs of Artin-Schreier right-hand sides.

A pair (f1, f2) generating a (Z/2Z)^2 extension of the rational function
field has three intermediate quotients y^2+y = f1, f2 and f1+f2.  The
Jacobian of the cover is isogenous to the product of the three quotient
Jacobians, so genus and 2-rank add up over the quotients, and the type of
the cover is the unordered triple of quotient genera.

Covers are compared as unordered triples of canonical reduced right-hand
sides: the pair (f1, f2) and the pair (f2, f1+f2) describe the same cover.
"""

from __future__ import annotations

import functools

from .ascurve import ASCurve, reduce_standard
from .ratfun import RatFun


class InvalidCover(ValueError):
    """The two functions fail to generate a Klein-four extension."""


class InvalidPartition(ValueError):
    """Not a valid genus triple."""


class Partition:
    """Unordered genus triple {g1, g2, g3}, stored sorted descending.

    Valid triples have nonnegative entries summing to g with each entry at
    most (g+1)/2.
    """

    __slots__ = ("entries",)

    def __init__(self, g1, g2, g3):
        entries = sorted((g1, g2, g3), reverse=True)
        if entries[2] < 0:
            raise InvalidPartition(f"negative entry in {entries}")
        g = sum(entries)
        if 2 * entries[0] > g + 1:
            raise InvalidPartition(
                f"entry {entries[0]} exceeds (g+1)/2 for g={g}")
        self.entries = tuple(entries)

    @property
    def g(self):
        return sum(self.entries)

    @property
    def is_unbalanced(self):
        """Largest entry at least g/2."""
        return 2 * self.entries[0] >= self.g

    @property
    def is_totally_balanced(self):
        return self.entries[0] == self.entries[2]

    def __contains__(self, v):
        return v in self.entries

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "{%d,%d,%d}" % self.entries

    def __repr__(self):
        return f"Partition{self.entries}"


def partitions_of(g):
    """All valid genus triples summing to g, in descending lex order."""
    out = []
    top = (g + 1) // 2
    for g1 in range(top, -1, -1):
        for g2 in range(min(g1, g - g1), -1, -1):
            g3 = g - g1 - g2
            if 0 <= g3 <= g2:
                out.append(Partition(g1, g2, g3))
    return out


class KleinFourCover:
    """The cover determined by (f1, f2), with derived f3 = f1 + f2."""

    __slots__ = ("field", "f1", "f2", "f3", "__dict__")

    def __init__(self, f1, f2):
        if not isinstance(f1, RatFun) or not isinstance(f2, RatFun):
            raise TypeError("KleinFourCover takes two RatFun arguments")
        if f1.field != f2.field:
            raise ValueError("defining functions over different fields")
        r1 = reduce_standard(f1)
        r2 = reduce_standard(f2)
        r3 = reduce_standard(r1 + r2)
        for name, r in (("f1", r1), ("f2", r2), ("f1+f2", r3)):
            if r.is_constant:
                raise InvalidCover(
                    f"{name} reduces to the constant {r}: the pair does not "
                    "generate a Klein-four extension")
        if r1 == r2:
            raise InvalidCover("f1 and f2 reduce to the same function")
        self.field = f1.field
        self.f1 = r1
        self.f2 = r2
        self.f3 = r3

    @functools.cached_property
    def quotients(self):
        return (ASCurve(self.f1), ASCurve(self.f2), ASCurve(self.f3))

    @functools.cached_property
    def type(self):
        a, b, c = self.quotients
        return Partition(a.genus, b.genus, c.genus)

    @functools.cached_property
    def invariants(self):
        a, b, c = self.quotients
        return (a.genus + b.genus + c.genus,
                a.two_rank + b.two_rank + c.two_rank)

    @property
    def genus(self):
        return self.invariants[0]

    @property
    def two_rank(self):
        return self.invariants[1]

    def key(self):
        """Canonical identity: field plus the unordered reduced triple."""
        return (self.field,
                frozenset((self.f1.key(), self.f2.key(), self.f3.key())))

    def __eq__(self, other):
        return isinstance(other, KleinFourCover) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return (f"y^2+y = {self.f1}  and  y^2+y = {self.f2} "
                f"over {self.field}")

    def __repr__(self):
        return f"KleinFourCover({self})"

    def to_json(self):
        g, sigma = self.invariants
        return {"field": self.field.to_json(),
                "f1": self.f1.to_json(),
                "f2": self.f2.to_json(),
                "f3": self.f3.to_json(),
                "type": list(self.type.entries),
                "genus": g,
                "two_rank": sigma}
