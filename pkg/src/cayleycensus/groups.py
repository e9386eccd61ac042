"""Finite groups as explicit multiplication tables.

Elements are indices 0..n-1 with the identity always at index 0.  All
construction paths funnel through Group, which validates the Latin-square
and identity conventions; associativity is checked exhaustively up to a
size bound and by seeded random sampling above it.
"""

from __future__ import annotations

from random import Random
from typing import Iterable, Optional, Sequence

from .permgrp import PermGroup, identity_perm, pmul

ASSOC_EXHAUSTIVE_BOUND = 64
ASSOC_SAMPLES = 1000
ASSOC_SEED = 190523


class GroupError(ValueError):
    """Malformed or inconsistent group data."""


class Group:
    """Finite group of order n given by its full multiplication table.

    table[i][j] is the index of g_i * g_j.  Derived data (inverses, element
    orders) is computed at construction; heavier attributes (conjugacy
    classes, automorphisms) are cached lazily.  Instances are immutable
    after construction and safe to share between threads.
    """

    def __init__(self, table, id="", check="full"):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n == 0:
            raise GroupError("empty table")
        for row in rows:
            if len(row) != n:
                raise GroupError("table is not square")
            for x in row:
                if not 0 <= x < n:
                    raise GroupError("table entry out of range")
        for j in range(n):
            if rows[0][j] != j:
                raise GroupError("identity not index 0 (bad row 0)")
        for i in range(n):
            if rows[i][0] != i:
                raise GroupError("identity not index 0 (bad column 0)")
        full = set(range(n))
        for i in range(n):
            if set(rows[i]) != full:
                raise GroupError("not a Latin square (row %d)" % i)
        for j in range(n):
            if {rows[i][j] for i in range(n)} != full:
                raise GroupError("not a Latin square (column %d)" % j)

        self.order = n
        self.table = rows
        self.id = str(id)

        if check == "full":
            self._check_associativity()

        inverse = [None] * n
        for i in range(n):
            j = rows[i].index(0)
            if rows[j][i] != 0:
                raise GroupError("one-sided inverse at element %d" % i)
            inverse[i] = j
        self.inverse = tuple(inverse)

        elt_order = [1] * n
        for i in range(1, n):
            power, k = i, 1
            while power != 0:
                power = rows[power][i]
                k += 1
                if k > n:
                    raise GroupError("power sequence of %d never reaches identity" % i)
            elt_order[i] = k
            if n % k:
                raise GroupError("element order %d does not divide %d" % (k, n))
        self.elt_order = tuple(elt_order)

        self._classes = None
        self._fingerprint = None
        self._min_normals = None
        self._aut = None
        self._gen_seq = None
        self._derived_order = None
        self._center_order = None
        self._pairs = None

    def _check_associativity(self):
        rows = self.table
        n = self.order
        if n <= ASSOC_EXHAUSTIVE_BOUND:
            for i in range(n):
                row_i = rows[i]
                for j in range(n):
                    ij = row_i[j]
                    row_ij = rows[ij]
                    row_j = rows[j]
                    for l in range(n):
                        if row_ij[l] != row_i[row_j[l]]:
                            raise GroupError("associativity violation")
        else:
            rng = Random(ASSOC_SEED + n)
            for _ in range(ASSOC_SAMPLES):
                i, j, l = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if rows[rows[i][j]][l] != rows[i][rows[j][l]]:
                    raise GroupError("associativity violation")

    # -- basic arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.table[self.table[self.inverse[g]][x]][g]

    def is_abelian(self) -> bool:
        rows = self.table
        return all(
            rows[i][j] == rows[j][i]
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )

    def involutions(self):
        return [x for x in range(self.order) if self.elt_order[x] == 2]

    # -- cached invariants ---------------------------------------------------

    def conjugacy_classes(self):
        if self._classes is None:
            n = self.order
            seen = [False] * n
            classes = []
            for x in range(n):
                if seen[x]:
                    continue
                cls = sorted({self.conj(x, g) for g in range(n)})
                for y in cls:
                    seen[y] = True
                classes.append(tuple(cls))
            self._classes = tuple(classes)
        return self._classes

    def element_profile(self):
        """Per-element (order, conjugacy class size), an isomorphism invariant."""
        size = [0] * self.order
        for cls in self.conjugacy_classes():
            for x in cls:
                size[x] = len(cls)
        return [(self.elt_order[x], size[x]) for x in range(self.order)]

    def fingerprint(self):
        """Cheap isomorphism invariants, compared before any backtracking."""
        if self._fingerprint is None:
            profile = tuple(sorted(self.element_profile()))
            self._fingerprint = (
                self.order,
                profile,
                self.is_abelian(),
                self.center_order(),
                self.derived_order(),
            )
        return self._fingerprint

    def center_order(self):
        if self._center_order is None:
            rows = self.table
            n = self.order
            self._center_order = sum(
                1
                for x in range(n)
                if all(rows[x][g] == rows[g][x] for g in range(n))
            )
        return self._center_order

    def derived_order(self):
        if self._derived_order is None:
            self._derived_order = len(derived_subgroup(self).elements)
        return self._derived_order

    def __repr__(self):
        return "Group(order=%d, id=%r)" % (self.order, self.id)


class Subgroup:
    """Subgroup of a parent group, stored as a sorted element tuple."""

    __slots__ = ("parent", "elements", "_set")

    def __init__(self, parent: Group, elements: Iterable[int]):
        elems = tuple(sorted(set(int(x) for x in elements)))
        if not elems or elems[0] != 0:
            raise GroupError("subgroup must contain the identity")
        elem_set = set(elems)
        table = parent.table
        for a in elems:
            if parent.inverse[a] not in elem_set:
                raise GroupError("subgroup not closed under inverses")
            row = table[a]
            for b in elems:
                if row[b] not in elem_set:
                    raise GroupError("subgroup not closed under multiplication")
        self.parent = parent
        self.elements = elems
        self._set = frozenset(elems)

    def __contains__(self, x):
        return x in self._set

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(x, g) in self._set for x in self.elements for g in range(G.order))

    def is_abelian(self) -> bool:
        table = self.parent.table
        return all(
            table[a][b] == table[b][a] for a in self.elements for b in self.elements
        )

    def __repr__(self):
        return "Subgroup(order=%d of %r)" % (len(self.elements), self.parent.id)


class GroupHom:
    """Homomorphism between table groups, as an image array over source indices."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Group, target: Group, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if len(images) != source.order:
            raise GroupError("image array has wrong length")
        if images[0] != 0:
            raise GroupError("homomorphism must fix the identity")
        st, tt = source.table, target.table
        for i in range(source.order):
            for j in range(source.order):
                if images[st[i][j]] != tt[images[i]][images[j]]:
                    raise GroupError("not a homomorphism")
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, [x for x, y in enumerate(self.images) if y == 0])


# -- closure machinery -------------------------------------------------------


def generated_closure(group: Group, seed: Iterable[int]):
    """Element set of the subgroup generated by seed, as a sorted tuple."""
    gens = sorted(set(seed))
    table = group.table
    elements = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            row = table[x]
            for s in gens:
                y = row[s]
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(elements))


def generated_subgroup(group: Group, seed: Iterable[int]) -> Subgroup:
    return Subgroup(group, generated_closure(group, seed))


def is_generating(group: Group, seed: Iterable[int]) -> bool:
    return len(generated_closure(group, seed)) == group.order


def normal_closure(group: Group, seed: Iterable[int]):
    """Smallest normal subgroup containing seed, as a sorted element tuple."""
    conjugates = set()
    for x in set(seed):
        for g in range(group.order):
            conjugates.add(group.conj(x, g))
    return generated_closure(group, conjugates)


def minimal_normal_subgroups(group: Group):
    """All minimal nontrivial normal subgroups, sorted by (order, elements).

    Every minimal normal subgroup is the normal closure of any of its
    nontrivial elements, so the closures of single elements suffice.
    """
    if group.order == 1:
        raise GroupError("trivial group has no minimal normal subgroups")
    if group._min_normals is None:
        closures = {normal_closure(group, [x]) for x in range(1, group.order)}
        distinct = sorted(closures, key=lambda c: (len(c), c))
        minimal = []
        for cand in distinct:
            cset = set(cand)
            if not any(set(m) <= cset for m in minimal):
                minimal.append(cand)
        group._min_normals = tuple(minimal)
    return [Subgroup(group, elems) for elems in group._min_normals]


def quotient(group: Group, normal: Subgroup):
    """Quotient by a normal subgroup, plus the natural projection.

    Coset representatives are the minimum index per coset, identity coset
    first.
    """
    if normal.parent is not group:
        raise GroupError("subgroup belongs to a different group")
    if not normal.is_normal():
        raise GroupError("subgroup is not normal")
    n = group.order
    table = group.table
    coset_of = [-1] * n
    reps = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        idx = len(reps)
        reps.append(x)
        for m in normal.elements:
            coset_of[table[x][m]] = idx
    q = len(reps)
    q_table = [[coset_of[table[reps[a]][reps[b]]] for b in range(q)] for a in range(q)]
    quotient_group = Group(q_table, id="%s/N%d" % (group.id, len(normal)), check="basic")
    hom = GroupHom(group, quotient_group, [coset_of[x] for x in range(n)])
    return quotient_group, hom


# -- derived series, solubility, radical ----------------------------------------


def derived_subgroup(group: Group) -> Subgroup:
    table = group.table
    inv = group.inverse
    n = group.order
    commutators = set()
    for a in range(1, n):
        for b in range(a + 1, n):
            commutators.add(table[table[inv[a]][inv[b]]][table[a][b]])
    return Subgroup(group, generated_closure(group, commutators))


def is_soluble(group: Group) -> bool:
    current = group
    while True:
        derived = derived_subgroup(current)
        if len(derived) == 1:
            return True
        if len(derived) == current.order:
            return False
        current = subgroup_as_group(derived)


def subgroup_as_group(sub: Subgroup) -> Group:
    """Fresh table group on the subgroup's elements (identity stays first)."""
    elems = sub.elements
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[sub.parent.table[a][b]] for b in elems] for a in elems]
    return Group(table, id="%s<%d>" % (sub.parent.id, len(elems)), check="basic")


def soluble_radical(group: Group) -> Subgroup:
    """The largest soluble normal subgroup."""
    if is_soluble(group):
        return Subgroup(group, range(group.order))
    abelian_minimal = [
        sub for sub in minimal_normal_subgroups(group) if sub.is_abelian()
    ]
    if not abelian_minimal:
        return Subgroup(group, [0])
    seed = abelian_minimal[0]
    quot, hom = quotient(group, seed)
    upstairs = soluble_radical(quot)
    pulled = [x for x in range(group.order) if hom(x) in upstairs]
    return Subgroup(group, pulled)


# -- generating sequences and homomorphism search ----------------------------------


def generating_sequence(group: Group):
    """Small generating sequence, rare element profiles first.

    Rarity keeps the candidate pools in isomorphism and automorphism
    backtracking narrow.
    """
    if group._gen_seq is not None:
        return group._gen_seq
    profile = group.element_profile()
    counts = {}
    for p in profile:
        counts[p] = counts.get(p, 0) + 1
    seq = []
    have = {0}
    while len(have) < group.order:
        best = None
        for x in range(1, group.order):
            if x in have:
                continue
            key = (counts[profile[x]], -group.elt_order[x], x)
            if best is None or key < best[0]:
                best = (key, x)
        seq.append(best[1])
        have = set(generated_closure(group, seq))
    group._gen_seq = tuple(seq)
    return group._gen_seq


def extend_hom(source: Group, target: Group, pairs):
    """Extend generator assignments to a homomorphism on the generated subgroup.

    pairs is a sequence of (source element, target element).  Returns the
    image dict on <generators>, or None when the assignment is inconsistent.
    """
    images = {0: 0}
    st, tt = source.table, target.table
    for g, h in pairs:
        if images.get(g, h) != h:
            return None
        images[g] = h
    elements = list(images)
    pos = 0
    gen_pairs = [(g, images[g]) for g, _ in pairs]
    while pos < len(elements):
        x = elements[pos]
        pos += 1
        hx = images[x]
        for g, hg in gen_pairs:
            y = st[x][g]
            hy = tt[hx][hg]
            known = images.get(y)
            if known is None:
                images[y] = hy
                elements.append(y)
            elif known != hy:
                return None
    return images


def are_isomorphic(g1: Group, g2: Group) -> Optional[GroupHom]:
    """An isomorphism g1 -> g2 if one exists.

    Cheap invariants (order, element profile multiset, abelianness, center
    and derived orders, minimal-normal-subgroup counts) are compared before
    backtracking over images of a fixed generating sequence.
    """
    if g1.order != g2.order:
        return None
    if g1.fingerprint() != g2.fingerprint():
        return None
    if g1.order > 1:
        if len(minimal_normal_subgroups(g1)) != len(minimal_normal_subgroups(g2)):
            return None
    if g1.order == 1:
        return GroupHom(g1, g2, [0])

    seq = generating_sequence(g1)
    profile1 = g1.element_profile()
    profile2 = g2.element_profile()
    pools = [
        [y for y in range(1, g2.order) if profile2[y] == profile1[g]] for g in seq
    ]

    n = g1.order

    def search(level, chosen):
        if level == len(seq):
            images = extend_hom(g1, g2, list(zip(seq, chosen)))
            if images and len(images) == n and len(set(images.values())) == n:
                return GroupHom(g1, g2, [images[x] for x in range(n)])
            return None
        for cand in pools[level]:
            trial = list(zip(seq[: level + 1], chosen + [cand]))
            images = extend_hom(g1, g2, trial)
            if images is None:
                continue
            if len(set(images.values())) != len(images):
                continue
            found = search(level + 1, chosen + [cand])
            if found is not None:
                return found
        return None

    return search(0, [])


def automorphism_group(group: Group) -> PermGroup:
    """Aut(G) acting on element indices, found by pruned backtracking.

    Images of a fixed generating sequence are assigned level by level;
    candidates equivalent to an explored sibling under the stabilizer of the
    current partial image (inside the group discovered so far) are skipped.
    The discovered permutations generate the full automorphism group.
    """
    if group._aut is not None:
        return group._aut
    n = group.order
    if n == 1:
        group._aut = PermGroup([], 1)
        return group._aut

    seq = generating_sequence(group)
    profile = group.element_profile()
    pools = [
        sorted(y for y in range(1, n) if profile[y] == profile[g]) for g in seq
    ]

    found: list = []
    known = PermGroup([], n)

    def register(images):
        nonlocal known
        perm = tuple(images[x] for x in range(n))
        if not known.contains(perm):
            found.append(perm)
            known = PermGroup(found, n)

    def search(level, chosen):
        if level == len(seq):
            images = extend_hom(group, group, list(zip(seq, chosen)))
            if images and len(set(images.values())) == n:
                register(images)
            return
        explored = []
        stab = None
        stab_size = -1
        for cand in pools[level]:
            if explored:
                if stab is None or stab_size != len(known.gens):
                    stab = known.pointwise_stabilizer(tuple(chosen))
                    stab_size = len(known.gens)
                if any(stab.orbit_min(cand) == stab.orbit_min(e) for e in explored):
                    continue
            images = extend_hom(group, group, list(zip(seq[: level + 1], chosen + [cand])))
            if images is None or len(set(images.values())) != len(images):
                continue
            explored.append(cand)
            search(level + 1, chosen + [cand])
        return

    search(0, [])
    group._aut = PermGroup(found, n) if found else PermGroup([], n)
    return group._aut


def _prime_power(n: int):
    for p in range(2, n + 1):
        if n % p == 0:
            exponent = 0
            while n % p == 0:
                n //= p
                exponent += 1
            return (p, exponent) if n == 1 else None
    return None


def rank_at_most(group: Group, k: int) -> bool:
    """True iff the group has a generating set of size at most k."""
    if k < 0:
        raise GroupError("rank bound must be at least 0")
    n = group.order
    if n == 1:
        return True
    if k == 0:
        return False

    power = _prime_power(n)
    if power:
        # Burnside basis: for a p-group the rank is dim G / (G' G^p)
        p, _ = power
        table = group.table
        seeds = set()
        for x in range(1, n):
            y = x
            for _ in range(p - 1):
                y = table[y][x]
            seeds.add(y)
        inv = group.inverse
        for a in range(1, n):
            for bb in range(a + 1, n):
                seeds.add(table[table[inv[a]][inv[bb]]][table[a][bb]])
        frattini = len(generated_closure(group, seeds))
        quotient_size = n // frattini
        rank = 0
        while quotient_size > 1:
            quotient_size //= p
            rank += 1
        return rank <= k

    first_candidates = range(1, n)
    if group._aut is not None and not group._aut.is_trivial():
        aut = group._aut
        first_candidates = sorted({aut.orbit_min(x) for x in range(1, n)})

    def extend(seed, closure_set, start, depth):
        if len(closure_set) == n:
            return True
        if depth == k:
            return False
        for x in range(start, n):
            if x in closure_set:
                continue
            grown = set(generated_closure(group, seed + [x]))
            if extend(seed + [x], grown, x + 1, depth + 1):
                return True
        return False

    for x in first_candidates:
        grown = set(generated_closure(group, [x]))
        if extend([x], grown, x + 1, 1):
            return True
    return False


# -- permutation generators and the regular representation ----------------------


def regular_representation(perm_gens: Sequence[Sequence[int]], id="") -> Group:
    """Multiplication table of the group generated by permutations.

    Elements are enumerated by breadth-first closure from the identity, so
    the identity gets index 0 and the numbering is deterministic.
    """
    if not perm_gens:
        raise GroupError("no generators")
    degree = len(perm_gens[0])
    gens = []
    for g in perm_gens:
        g = tuple(int(x) for x in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupError("generator is not a permutation")
        gens.append(g)
    ident = identity_perm(degree)
    elements = [ident]
    index = {ident: 0}
    pos = 0
    while pos < len(elements):
        current = elements[pos]
        pos += 1
        for g in gens:
            prod = pmul(current, g)
            if prod not in index:
                index[prod] = len(elements)
                elements.append(prod)
    n = len(elements)
    table = [[index[pmul(elements[i], elements[j])] for j in range(n)] for i in range(n)]
    return Group(table, id=id, check="basic")


# -- group files --------------------------------------------------------------


def parse_group_records(text: str):
    """Parse the group-file format into (id, order, body kind, payload) tuples."""
    records = []
    lines = [ln.strip() for ln in text.splitlines()]
    i = 0
    while i < len(lines):
        if not lines[i]:
            i += 1
            continue
        head = lines[i].split()
        if len(head) != 4 or head[0] != "group" or head[2] != "order":
            raise GroupError("malformed record header: %r" % lines[i])
        gid = head[1]
        try:
            order = int(head[3])
        except ValueError:
            raise GroupError("malformed order in header: %r" % lines[i])
        i += 1
        if i >= len(lines):
            raise GroupError("record %r truncated" % gid)
        kind = lines[i]
        if kind not in ("table", "perm"):
            raise GroupError("unknown body kind %r in record %r" % (kind, gid))
        i += 1
        payload = []
        while i < len(lines) and lines[i] != "end":
            if lines[i]:
                payload.append(lines[i])
            i += 1
        if i >= len(lines):
            raise GroupError("record %r missing end terminator" % gid)
        i += 1
        records.append((gid, order, kind, payload))
    return records


def _group_from_record(gid, order, kind, payload) -> Group:
    if kind == "table":
        if len(payload) != order:
            raise GroupError("record %r: expected %d table rows" % (gid, order))
        table = []
        for line in payload:
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError:
                raise GroupError("record %r: non-integer table entry" % gid)
            table.append(row)
        return Group(table, id=gid, check="full")
    gens = []
    for line in payload:
        if not line.startswith("p:"):
            raise GroupError("record %r: perm lines must start with 'p:'" % gid)
        try:
            gens.append([int(tok) for tok in line[2:].split()])
        except ValueError:
            raise GroupError("record %r: non-integer permutation image" % gid)
    group = regular_representation(gens, id=gid)
    if group.order != order:
        raise GroupError(
            "record %r: generated group has order %d, header says %d"
            % (gid, group.order, order)
        )
    return group


def load_groups(text: str):
    return [_group_from_record(*rec) for rec in parse_group_records(text)]


def load_group(text: str) -> Group:
    groups = load_groups(text)
    if len(groups) != 1:
        raise GroupError("expected exactly one group record")
    return groups[0]


def group_to_text(group: Group) -> str:
    lines = ["group %s order %d" % (group.id or "anon", group.order), "table"]
    for row in group.table:
        lines.append(" ".join(str(x) for x in row))
    lines.append("end")
    return "\n".join(lines) + "\n"
