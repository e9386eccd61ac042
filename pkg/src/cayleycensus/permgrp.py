"""Permutation groups on {0,...,m-1} with stabilizer-chain backbones.

Permutations are image tuples: the point x maps to p[x].  Products compose
left to right, so (p * q) sends x to q[p[x]] and x^(pq) = (x^p)^q.

The stabilizer chain is built by a deterministic incremental Schreier-Sims
pass.  Point order everywhere is the natural integer order; lexicographic
comparisons of point sets use sorted tuples.
"""

from __future__ import annotations

import threading
from typing import Iterable, Optional, Sequence

Perm = tuple


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def pmul(p: Perm, q: Perm) -> Perm:
    """Product applying p first, then q."""
    return tuple(map(q.__getitem__, p))


def pinv(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_from_cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation from disjoint cycles, e.g. perm_from_cycles(4, (0,1), (2,3))."""
    images = list(range(degree))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:]):
            images[a] = b
        if cycle:
            images[cycle[-1]] = cycle[0]
    p = tuple(images)
    if sorted(p) != list(range(degree)):
        raise ValueError("cycles are not disjoint or out of range")
    return p


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    order = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        order = _lcm(order, length)
    return order


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


class _Chain:
    """Stabilizer chain: base points with transversals and a strong generating set."""

    __slots__ = ("degree", "base", "transversals", "inverses", "orbit_lists", "strong")

    def __init__(self, degree, base, transversals, inverses, orbit_lists, strong):
        self.degree = degree
        self.base = base
        self.transversals = transversals
        self.inverses = inverses
        self.orbit_lists = orbit_lists
        self.strong = strong

    def order(self) -> int:
        n = 1
        for orbit in self.orbit_lists:
            n *= len(orbit)
        return n

    def sift(self, g: Perm):
        """Strip g through the chain; returns (residue, level stuck at)."""
        for i, b in enumerate(self.base):
            pt = g[b]
            inv = self.inverses[i].get(pt)
            if inv is None:
                return g, i
            g = pmul(g, inv)
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        residue, _ = self.sift(g)
        return all(residue[x] == x for x in range(self.degree))

    def gens_at(self, level: int):
        base = self.base
        return [
            g
            for g in self.strong
            if all(g[base[j]] == base[j] for j in range(level))
        ]


def _build_chain(degree: int, gens: Sequence[Perm], forced_base=()) -> _Chain:
    ident = identity_perm(degree)
    base: list[int] = []
    for pt in forced_base:
        if pt not in base:
            base.append(pt)
    strong: list[Perm] = []

    def moved_point(g):
        for x in range(degree):
            if g[x] != x:
                return x
        return None

    for g in gens:
        g = tuple(g)
        if g == ident or g in strong:
            continue
        if all(g[b] == b for b in base):
            base.append(moved_point(g))
        strong.append(g)

    transversals: list[dict] = [None] * len(base)
    inverses: list[dict] = [None] * len(base)
    orbit_lists: list[list] = [None] * len(base)

    def gens_at(level):
        return [
            g for g in strong if all(g[base[j]] == base[j] for j in range(level))
        ]

    def update(level, level_gens):
        b = base[level]
        trans = {b: ident}
        invs = {b: ident}
        orbit = [b]
        for pt in orbit:
            u = trans[pt]
            for s in level_gens:
                im = s[pt]
                if im not in trans:
                    moved = pmul(u, s)
                    trans[im] = moved
                    invs[im] = pinv(moved)
                    orbit.append(im)
        transversals[level] = trans
        inverses[level] = invs
        orbit_lists[level] = orbit

    def sift_from(g, start):
        for j in range(start, len(base)):
            pt = g[base[j]]
            inv = inverses[j].get(pt)
            if inv is None:
                return g, j
            g = pmul(g, inv)
        return g, len(base)

    # Bottom-up Schreier-Sims: whenever a Schreier generator fails to sift,
    # the residue becomes a strong generator at the level it got stuck and
    # processing jumps back down there.
    i = len(base) - 1
    while i >= 0:
        level_gens = gens_at(i)
        update(i, level_gens)
        restart = False
        for pt in orbit_lists[i]:
            u = transversals[i][pt]
            for s in level_gens:
                schreier = pmul(pmul(u, s), inverses[i][s[pt]])
                if schreier == ident:
                    continue
                residue, j = sift_from(schreier, i + 1)
                if residue == ident:
                    continue
                if j == len(base):
                    base.append(moved_point(residue))
                    transversals.append(None)
                    inverses.append(None)
                    orbit_lists.append(None)
                strong.append(residue)
                i = j
                restart = True
                break
            if restart:
                break
        if restart:
            continue
        i -= 1

    return _Chain(degree, base, transversals, inverses, orbit_lists, strong)


class PermGroup:
    """Permutation group given by generators, with a lazily built stabilizer chain."""

    def __init__(self, gens: Iterable[Sequence[int]], degree: int):
        ident = identity_perm(degree)
        seen = set()
        clean = []
        for g in gens:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of the degree")
            if g == ident or g in seen:
                continue
            seen.add(g)
            clean.append(g)
        self.degree = degree
        self.gens = clean
        self._lock = threading.Lock()
        self._chain: Optional[_Chain] = None
        self._pstab: dict = {}
        self._orbit_data = None

    # -- chain-backed queries ------------------------------------------------

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _build_chain(self.degree, self.gens)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Sequence[int]) -> bool:
        return self.chain.contains(tuple(p))

    def is_trivial(self) -> bool:
        return not self.gens

    # -- orbits ----------------------------------------------------------------

    def _orbits_all(self):
        """Orbit partition of the full domain; cached."""
        if self._orbit_data is None:
            orbit_id = [-1] * self.degree
            orbits = []
            for start in range(self.degree):
                if orbit_id[start] >= 0:
                    continue
                idx = len(orbits)
                orbit = [start]
                orbit_id[start] = idx
                for pt in orbit:
                    for g in self.gens:
                        im = g[pt]
                        if orbit_id[im] < 0:
                            orbit_id[im] = idx
                            orbit.append(im)
                orbits.append(sorted(orbit))
            self._orbit_data = (orbits, orbit_id)
        return self._orbit_data

    def orbit(self, pt: int) -> list:
        orbits, orbit_id = self._orbits_all()
        return orbits[orbit_id[pt]]

    def orbit_min(self, pt: int) -> int:
        return self.orbit(pt)[0]

    def orbits(self, pts: Iterable[int]):
        """Partition pts by the group's orbits on the full domain.

        When pts is not invariant this is the orbit partition of the closure
        intersected with pts.  Returns (members, min_member) pairs ordered by
        the minimum member.
        """
        orbits, orbit_id = self._orbits_all()
        buckets: dict[int, list] = {}
        for pt in sorted(set(pts)):
            buckets.setdefault(orbit_id[pt], []).append(pt)
        out = [(members, members[0]) for members in buckets.values()]
        out.sort(key=lambda pair: pair[1])
        return out

    def transporter(self, src: int, dst: int) -> Optional[Perm]:
        """Some group element mapping src to dst, or None."""
        ident = identity_perm(self.degree)
        if src == dst:
            return ident
        reach = {src: ident}
        frontier = [src]
        for pt in frontier:
            u = reach[pt]
            for g in self.gens:
                im = g[pt]
                if im not in reach:
                    reach[im] = pmul(u, g)
                    if im == dst:
                        return reach[im]
                    frontier.append(im)
        return None

    # -- stabilizers -------------------------------------------------------------

    def pointwise_stabilizer(self, pts: Sequence[int]) -> "PermGroup":
        """Subgroup fixing every point of pts, via a chain based on pts."""
        key = tuple(pts)
        cached = self._pstab.get(key)
        if cached is not None:
            return cached
        if not key:
            self._pstab[key] = self
            return self
        base_pts = []
        for pt in key:
            if pt not in base_pts:
                base_pts.append(pt)
        chain = _build_chain(self.degree, self.gens, forced_base=base_pts)
        sub_gens = [
            g for g in chain.strong if all(g[pt] == pt for pt in base_pts)
        ]
        sub = PermGroup(sub_gens, self.degree)
        self._pstab[key] = sub
        return sub

    def point_stabilizer(self, pt: int) -> "PermGroup":
        return self.pointwise_stabilizer((pt,))

    # -- smallest images ------------------------------------------------------------

    def smallest_image(self, points: Iterable[int]) -> frozenset:
        """Lexicographically least set in the orbit of points (sets as sorted tuples).

        Pruned backtracking over stabilizer descents; the orbit of the set is
        never materialized.
        """
        todo = frozenset(points)
        if not todo:
            return frozenset()
        best: Optional[list] = None

        def descend(group, current, prefix):
            nonlocal best
            if not current:
                if best is None or prefix < best:
                    best = prefix
                return
            # reach is the least point any image of current can contain; every
            # branch maps some member there and recurses into its stabilizer.
            reach = min(group.orbit_min(t) for t in current)
            prefix = prefix + [reach]
            if best is not None and prefix > best[: len(prefix)]:
                return
            stab = group.point_stabilizer(reach)
            for t in sorted(current):
                if group.orbit_min(t) != reach:
                    continue
                mover = group.transporter(t, reach)
                rest = frozenset(mover[x] for x in current if x != t)
                descend(stab, rest, prefix)

        descend(self, todo, [])
        return frozenset(best)

    def is_smallest_image(self, points: Iterable[int]) -> bool:
        """True iff points is the smallest image of itself; short-circuits on failure."""
        target = sorted(points)
        if not target:
            return True

        def no_smaller(group, current, idx):
            reach = min(group.orbit_min(t) for t in current)
            if reach < target[idx]:
                return False
            if reach > target[idx]:
                return True
            if len(current) == 1:
                return True
            stab = group.point_stabilizer(reach)
            for t in sorted(current):
                if group.orbit_min(t) != reach:
                    continue
                mover = group.transporter(t, reach)
                rest = frozenset(mover[x] for x in current if x != t)
                if not no_smaller(stab, rest, idx + 1):
                    return False
            return True

        return no_smaller(self, frozenset(target), 0)


def induced_action(group: PermGroup, blocks: Sequence[Iterable[int]]) -> PermGroup:
    """Action of group on block indices for a family of disjoint point sets.

    Kernel elements map to the identity and duplicate images are dropped.
    Raises ValueError if some generator does not permute the family.
    """
    frozen = [frozenset(b) for b in blocks]
    index = {b: i for i, b in enumerate(frozen)}
    if len(index) != len(frozen):
        raise ValueError("blocks are not distinct")
    images = []
    for g in group.gens:
        img = []
        for b in frozen:
            target = frozenset(g[x] for x in b)
            pos = index.get(target)
            if pos is None:
                raise ValueError("generator does not permute the block family")
            img.append(pos)
        images.append(tuple(img))
    return PermGroup(images, len(frozen))
