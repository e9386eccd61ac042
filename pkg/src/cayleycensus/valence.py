"""The (a,b)-valency calculus for Cayley sets.

A Cayley set with a involutions and b non-involutions has valency (a, b);
quotients can only shrink valencies in the partial order preceq, which is
what makes order-by-order catalog construction sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .groups import Group, GroupError, are_isomorphic, rank_at_most


class CatalogError(ValueError):
    """A catalog lookup required an order that has not been computed."""


@dataclass(frozen=True, order=True)
class ValencyPair:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("valency counts must be non-negative")
        if self.b % 2:
            raise ValueError("non-involution count must be even")

    @property
    def k(self) -> int:
        return self.a + self.b

    def __str__(self):
        return "(%d,%d)" % (self.a, self.b)


@dataclass(frozen=True)
class SigmaSet:
    k: int
    pairs: tuple


def sigma(k: int) -> SigmaSet:
    """All (a,b) with b even and a+b=k, in decreasing a."""
    if k < 1:
        raise ValueError("valency must be at least 1")
    return SigmaSet(k, tuple(ValencyPair(k - b, b) for b in range(0, k + 1, 2)))


def preceq(small: ValencyPair, big: ValencyPair) -> bool:
    """The sub-valency partial order: (a',b') preceq (a,b)."""
    return small.b <= big.b and small.a <= big.a + (big.b - small.b) // 2


def subvalent_pairs(pair: ValencyPair):
    """Every (a',b') preceq pair, ordered by total size then involution count."""
    out = []
    for b2 in range(0, pair.b + 1, 2):
        for a2 in range(0, pair.a + (pair.b - b2) // 2 + 1):
            out.append(ValencyPair(a2, b2))
    out.sort(key=lambda p: (p.k, p.a))
    return out


def classify_set(group: Group, elems: Iterable[int]) -> ValencyPair:
    elems = set(elems)
    if 0 in elems:
        raise GroupError("identity in Cayley set")
    for x in elems:
        if group.inverse[x] not in elems:
            raise GroupError("Cayley set not inverse-closed")
    a = sum(1 for x in elems if group.elt_order[x] == 2)
    return ValencyPair(a, len(elems) - a)


class GroupCatalog:
    """Per-order lists of pairwise nonisomorphic groups with a fingerprint index.

    The index key (order, element-order multiset, abelian flag) screens
    candidates before full isomorphism tests.
    """

    def __init__(self):
        self.orders: dict[int, list[Group]] = {}
        self._index: dict[tuple, list[Group]] = {}

    @staticmethod
    def _key(group: Group):
        return (group.order, tuple(sorted(group.elt_order)), group.is_abelian())

    def has_order(self, n: int) -> bool:
        return n in self.orders

    def groups(self, n: int):
        if n not in self.orders:
            raise CatalogError("catalog has no entry for order %d" % n)
        return self.orders[n]

    def add(self, group: Group) -> int:
        bucket = self.orders.setdefault(group.order, [])
        bucket.append(group)
        self._index.setdefault(self._key(group), []).append(group)
        return len(bucket) - 1

    def mark_order(self, n: int):
        """Record that order n has been processed, even if no group survived."""
        self.orders.setdefault(n, [])

    def find_isomorph(self, group: Group) -> Optional[Group]:
        for candidate in self._index.get(self._key(group), []):
            if are_isomorphic(group, candidate) is not None:
                return candidate
        return None

    def position(self, group: Group):
        """(order, index) of the member isomorphic to group, or None."""
        match = self.find_isomorph(group)
        if match is None:
            return None
        return (match.order, self.orders[match.order].index(match))

    def total(self) -> int:
        return sum(len(v) for v in self.orders.values())


def quotient_filter(group: Group, validated: GroupCatalog, pair: ValencyPair) -> bool:
    """Quotient screen: every minimal-normal quotient must already be cataloged.

    Short-circuits on a rank failure first.  A True result does not certify
    that group is sub-(a,b)-valent; Cayley-set generation decides that.
    """
    from .groups import minimal_normal_subgroups, quotient

    if group.order == 1:
        return True
    for d in _proper_divisors(group.order):
        if not validated.has_order(d):
            raise CatalogError(
                "validated catalog missing order %d (needed for order %d)"
                % (d, group.order)
            )
    if not rank_at_most(group, pair.k):
        return False
    for sub in minimal_normal_subgroups(group):
        if len(sub) == group.order:
            # quotient is trivial, always sub-(a,b)-valent
            continue
        quot, _ = quotient(group, sub)
        if validated.find_isomorph(quot) is None:
            return False
    return True


def _proper_divisors(n: int):
    return [d for d in range(1, n) if n % d == 0]
