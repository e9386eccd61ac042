"""Inductive group construction by direct elementary abelian extensions.

A group catalog grows order by order: each new group of order n = |Q| * p^d
is an extension of a cataloged quotient Q by an irreducible F_p Q-module,
classified by the second cohomology group.  Irreducible module actions are
found as epimorphisms onto precomputed irreducible subgroups of GL(d, p),
cohomology is linear algebra over F_p, and dedup keeps each group once.

Conventions (fixed once, guarded by associativity re-verification):
  - right module action; cocycles are row vectors,
  - extension product (q1, m1)(q2, m2) = (q1 q2, m1 . phi(q2) + m2 + f(q1, q2)),
  - cocycle identity f(q1,q2).phi(q3) + f(q1 q2, q3) = f(q2, q3) + f(q1, q2 q3),
  - normalization f(1, q) = f(q, 1) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Optional, Sequence

import numpy as np

from . import matp
from .groups import (
    Group,
    extend_hom,
    generating_sequence,
    minimal_normal_subgroups,
    quotient,
    rank_at_most,
)
from .valence import GroupCatalog, ValencyPair

DEFAULT_DIM_BOUND = 2
DEFAULT_COCYCLE_BUDGET = 256


class ExtensionError(ValueError):
    pass


# -- matrices over F_p ---------------------------------------------------------


def mat_id(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(a, b, p):
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) % p for j in range(d))
        for i in range(d)
    )


def mat_order(m, p):
    ident = mat_id(len(m))
    power, k = m, 1
    while power != ident:
        power = mat_mul(power, m, p)
        k += 1
        if k > p ** (len(m) ** 2):
            raise ExtensionError("matrix is not invertible")
    return k


def mat_is_invertible(m, p):
    arr = np.array(m, dtype=np.int64) % p
    _, pivots = matp.rref(arr, p)
    return len(pivots) == len(m)


def _all_matrices(d, p):
    for entries in iproduct(range(p), repeat=d * d):
        yield tuple(tuple(entries[i * d : (i + 1) * d]) for i in range(d))


_GL_ELEMENTS_CACHE: dict = {}


def gl_elements(d, p):
    """All invertible d x d matrices over F_p (cached; small d only)."""
    key = (d, p)
    if key not in _GL_ELEMENTS_CACHE:
        if p ** (d * d) > 1 << 17:
            raise ExtensionError("GL(%d, %d) element enumeration too large" % (d, p))
        _GL_ELEMENTS_CACHE[key] = tuple(
            m for m in _all_matrices(d, p) if mat_is_invertible(m, p)
        )
    return _GL_ELEMENTS_CACHE[key]


def spin_is_irreducible(mats, d, p):
    """No proper nonzero invariant subspace: spin every nonzero vector to full rank."""
    if d == 1:
        return True
    vectors = [v for v in iproduct(range(p), repeat=d) if any(v)]
    arrs = [np.array(m, dtype=np.int64) for m in mats]
    for v in vectors:
        basis = np.array([v], dtype=np.int64) % p
        reduced, pivots = matp.rref(basis, p)
        changed = True
        while changed and len(pivots) < d:
            changed = False
            for m in arrs:
                images = (reduced @ m) % p
                for row in images:
                    res = matp.reduce_mod_span(row, reduced, pivots, p)
                    if res.any():
                        reduced, pivots = matp.rref(
                            np.vstack([reduced, res[None, :]]), p
                        )
                        changed = True
        if len(pivots) < d:
            return False
    return True


# -- irreducible subgroups of GL(d, p) ---------------------------------------------


@dataclass(frozen=True)
class GLSubgroup:
    matrices: tuple  # all elements, identity first then sorted
    generators: tuple
    abstract: Group = field(compare=False)


@dataclass(frozen=True)
class GLSubgroupTable:
    p: int
    d: int
    entries: tuple


def _subgroup_closure(gens, p, bound):
    """Closure of matrix generators; None when the bound is exceeded."""
    d = len(gens[0])
    elements = {mat_id(d)}
    frontier = list(elements)
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = mat_mul(m, g, p)
                if prod not in elements:
                    if len(elements) >= bound:
                        return None
                    elements.add(prod)
                    new.append(prod)
        frontier = new
    return frozenset(elements)


def _abstract_group(mats, p, gid):
    ident = mat_id(len(next(iter(mats))))
    ordered = [ident] + sorted(m for m in mats if m != ident)
    index = {m: i for i, m in enumerate(ordered)}
    table = [
        [index[mat_mul(a, b, p)] for b in ordered] for a in ordered
    ]
    return Group(table, id=gid, check="basic"), tuple(ordered)


_GL_TABLE_CACHE: dict = {}


def irreducible_subgroups_gl(d: int, p: int, max_order: Optional[int] = None) -> GLSubgroupTable:
    """Irreducible subgroups of GL(d, p) up to conjugacy, subgroup order bounded.

    Exhaustive breadth-first subgroup enumeration over closure extension,
    followed by irreducibility and conjugacy reduction.
    """
    cache_key = (d, p, max_order)
    if cache_key in _GL_TABLE_CACHE:
        return _GL_TABLE_CACHE[cache_key]
    table = _irreducible_subgroups_gl(d, p, max_order)
    _GL_TABLE_CACHE[cache_key] = table
    return table


def _irreducible_subgroups_gl(d, p, max_order):
    if d < 1:
        raise ExtensionError("dimension must be positive")
    if not _is_prime(p):
        raise ExtensionError("modulus %d is not prime" % p)
    if d >= 2 and max_order is not None and max_order <= 3:
        # Subgroups of order <= 3 are cyclic; a cyclic group of order m acts
        # irreducibly in dimension ord_m(p) only.  For m = 2 that is 1, so
        # only m = 3 with ord_3(p) = d = 2 survives (companion of x^2+x+1).
        entries = []
        if max_order >= 3 and p % 3 == 2 and d == 2:
            companion = ((0, p - 1), (1, p - 1))
            mats = frozenset(
                {mat_id(2), companion, mat_mul(companion, companion, p)}
            )
            abstract, ordered = _abstract_group(mats, p, "GL%d_%d#0" % (d, p))
            entries.append(GLSubgroup(ordered, (companion,), abstract))
        return GLSubgroupTable(p, d, tuple(entries))
    if d == 1:
        # every subgroup of the cyclic group GL(1,p) is irreducible
        bound = max_order if max_order is not None else p - 1
        entries = []
        idx = 0
        for size in range(1, p):
            if (p - 1) % size or size > bound:
                continue
            gen = _scalar_of_order(size, p)
            mats = frozenset(((pow(gen, e, p),),) for e in range(size))
            abstract, ordered = _abstract_group(mats, p, "GL1_%d#%d" % (p, idx))
            gens = (((gen,),),) if size > 1 else ()
            entries.append(GLSubgroup(ordered, gens, abstract))
            idx += 1
        return GLSubgroupTable(p, d, tuple(entries))

    full = p ** (d * d)
    if max_order is None:
        elements = gl_elements(d, p)
        bound = len(elements)
        candidates = elements
    else:
        bound = max_order
        if full <= 1 << 17:
            candidates = tuple(
                m for m in gl_elements(d, p) if mat_order(m, p) <= bound
            )
        else:
            raise ExtensionError(
                "GL(%d, %d) too large even for bounded enumeration" % (d, p)
            )

    found: dict = {frozenset({mat_id(d)}): ()}
    queue = [frozenset({mat_id(d)})]
    while queue:
        current = queue.pop()
        gens = found[current]
        for m in candidates:
            if m in current:
                continue
            grown = _subgroup_closure(list(gens) + [m], p, bound)
            if grown is None or grown in found:
                continue
            found[grown] = tuple(gens) + (m,)
            queue.append(grown)

    irreducible = [
        (elems, gens)
        for elems, gens in found.items()
        if spin_is_irreducible(elems, d, p)
    ]
    irreducible.sort(key=lambda pair_: (len(pair_[0]), sorted(pair_[0])))

    conjugators = gl_elements(d, p) if full <= 1 << 17 else ()
    kept = []
    for elems, gens in irreducible:
        fingerprint = (len(elems), tuple(sorted(mat_order(m, p) for m in elems)))
        conjugate_seen = False
        for other_elems, other_fp in kept:
            if other_fp != fingerprint:
                continue
            for g in conjugators:
                ginv = _mat_inverse(g, p)
                if all(mat_mul(mat_mul(ginv, m, p), g, p) in other_elems for m in elems):
                    conjugate_seen = True
                    break
            if conjugate_seen:
                break
        if not conjugate_seen:
            kept.append((elems, fingerprint))

    entries = []
    for idx, (elems, _) in enumerate(kept):
        gens = found[elems]
        abstract, ordered = _abstract_group(elems, p, "GL%d_%d#%d" % (d, p, idx))
        entries.append(GLSubgroup(ordered, gens, abstract))
    return GLSubgroupTable(p, d, tuple(entries))


def _scalar_of_order(size, p):
    """Element of exact multiplicative order `size` mod p (size | p-1)."""
    for x in range(1, p):
        if pow(x, size, p) == 1 and all(pow(x, e, p) != 1 for e in range(1, size)):
            return x
    raise ExtensionError("no element of order %d mod %d" % (size, p))


def _mat_inverse(m, p):
    order = mat_order(m, p)
    power = mat_id(len(m))
    for _ in range(order - 1):
        power = mat_mul(power, m, p)
    return power


# -- module structures ------------------------------------------------------------


@dataclass(frozen=True)
class ModuleStructure:
    quotient: Group = field(compare=False)
    p: int
    d: int
    action: tuple  # per-element d x d matrices

    def __post_init__(self):
        table = self.quotient.table
        n = self.quotient.order
        if len(self.action) != n:
            raise ExtensionError("action must cover every element")
        if self.action[0] != mat_id(self.d):
            raise ExtensionError("action must send the identity to the identity")
        for i in range(n):
            for j in range(n):
                if self.action[table[i][j]] != mat_mul(
                    self.action[i], self.action[j], self.p
                ):
                    raise ExtensionError("action is not a homomorphism")
        gens = [self.action[i] for i in range(n)]
        if not spin_is_irreducible(set(gens), self.d, self.p):
            raise ExtensionError("module is not irreducible")


def module_structures(
    quotient_group: Group,
    p: int,
    d: int,
    table: Optional[GLSubgroupTable] = None,
) -> list:
    """All irreducible F_p actions of dimension d up to module isomorphism.

    Found as epimorphisms onto the irreducible GL(d,p) subgroup catalog and
    deduplicated by matrix conjugacy of the action.
    """
    n = quotient_group.order
    if not _is_prime(p):
        raise ExtensionError("modulus %d is not prime" % p)
    if n == 1:
        if d == 1:
            return [ModuleStructure(quotient_group, p, 1, (mat_id(1),))]
        return []
    if d == 1 and p == 2:
        # GL(1,2) is trivial: only the trivial module
        return [ModuleStructure(quotient_group, p, 1, tuple([mat_id(1)] * n))]
    if table is None:
        table = irreducible_subgroups_gl(d, p, max_order=n)
    elif table.p != p or table.d != d:
        raise ExtensionError("GL subgroup table does not match (d, p)")

    out = []
    for entry in table.entries:
        h = entry.abstract
        if n % h.order:
            continue
        epis = _epimorphisms(quotient_group, h)
        actions = []
        for images in epis:
            action = tuple(entry.matrices[images[x]] for x in range(n))
            actions.append(action)
        out.extend(_dedup_actions(actions, quotient_group, p, d))
    return [ModuleStructure(quotient_group, p, d, act) for act in sorted(set(out))]


def _epimorphisms(source: Group, target: Group):
    """All surjective homomorphisms source -> target, as image tuples."""
    seq = generating_sequence(source)
    pools = [
        [y for y in range(target.order) if source.elt_order[g] % target.elt_order[y] == 0]
        for g in seq
    ]
    results = []

    def search(level, chosen):
        if level == len(seq):
            images = extend_hom(source, target, list(zip(seq, chosen)))
            if images is not None and len(set(images.values())) == target.order:
                results.append(tuple(images[x] for x in range(source.order)))
            return
        for cand in pools[level]:
            if extend_hom(source, target, list(zip(seq[: level + 1], chosen + [cand]))) is None:
                continue
            search(level + 1, chosen + [cand])

    search(0, [])
    return sorted(set(results))


def _dedup_actions(actions, quotient_group, p, d):
    """Conjugacy classes of action tuples, keeping the lex-least representative."""
    if not actions:
        return []
    if d == 1:
        return sorted(set(actions))
    seq = generating_sequence(quotient_group)
    conjugators = gl_elements(d, p)
    classes = []
    for action in sorted(set(actions)):
        is_new = True
        for rep in classes:
            for g in conjugators:
                ginv = _mat_inverse(g, p)
                if all(
                    mat_mul(mat_mul(ginv, rep[x], p), g, p) == action[x] for x in seq
                ):
                    is_new = False
                    break
            if not is_new:
                break
        if is_new:
            classes.append(action)
    return classes


# -- second cohomology -------------------------------------------------------------


@dataclass
class CocycleSpace:
    module: ModuleStructure
    z_basis: tuple  # full |Q| x |Q| tables of F_p^d rows
    b_basis: tuple
    h2_reps: tuple
    z_dim: int
    b_dim: int

    @property
    def h2_size(self):
        return len(self.h2_reps)


def two_cocycle_space(module: ModuleStructure, budget: int = DEFAULT_COCYCLE_BUDGET) -> CocycleSpace:
    """Normalized 2-cocycles, coboundaries, and one representative per H^2 class.

    Z^2 is the null space of the cocycle-identity system.  Unknowns are first
    reduced to the values f(q, g) on a generating sequence (the identity with
    a generator third argument determines all other values, and identities
    with generator third argument imply the rest, by induction on word
    length), then expanded back to full tables.
    """
    q_group = module.quotient
    p, d = module.p, module.d
    n = q_group.order
    if n > budget:
        raise ExtensionError("cocycle budget exceeded: |Q| = %d > %d" % (n, budget))
    if n == 1:
        zero = (((0,) * d,),)
        return CocycleSpace(module, (), (), (zero,), 0, 0)

    table = np.array(q_group.table, dtype=np.int64)
    seq = list(generating_sequence(q_group))
    r = len(seq)
    nvars = (n - 1) * r * d
    acts = [np.array(m, dtype=np.int64) for m in module.action]

    def var_id(q, j, c):
        return ((q - 1) * r + j) * d + c

    # unit blocks U[j][y] = coefficient rows of the free value f(y, g_j)
    units = np.zeros((r, n, d, nvars), dtype=np.int64)
    for j in range(r):
        for y in range(1, n):
            for c in range(d):
                units[j, y, c, var_id(y, j, c)] = 1

    # canonical factorization x = w * g_j by breadth-first search
    parent = {0: None}
    order_of_discovery = [0]
    pos = 0
    while pos < len(order_of_discovery):
        w = order_of_discovery[pos]
        pos += 1
        for j, g in enumerate(seq):
            x = q_group.table[w][g]
            if x not in parent:
                parent[x] = (w, j)
                order_of_discovery.append(x)

    # L[q, x] = expression of f(q, x) over the free variables
    L = np.zeros((n, n, d, nvars), dtype=np.int64)
    for x in order_of_discovery[1:]:
        w, j = parent[x]
        if w == 0:
            L[1:, x] = units[j, 1:]
            continue
        phi_t = acts[seq[j]].T
        moved = np.einsum("xc,qcv->qxv", phi_t, L[:, w]) % p
        L[:, x] = (moved + units[j, table[:, w]] - units[j, w][None]) % p

    # cocycle identity rows for third argument a generator
    blocks = []
    for j, g in enumerate(seq):
        phi_t = acts[g].T
        term1 = np.einsum("xc,abcv->abxv", phi_t, L) % p
        term2 = units[j][table]  # f(q1 q2, g)
        term3 = units[j][None, :]  # f(q2, g)
        term4 = L[:, table[:, g]]  # f(q1, q2 g), axis-1 gather by q2
        eq = (term1 + term2 - term3 - term4) % p
        blocks.append(eq[1:, 1:].reshape((n - 1) * (n - 1) * d, nvars))
    system = np.concatenate(blocks, axis=0)

    z_free = matp.nullspace(system, p)
    z_dim = len(z_free)

    # coboundaries in free coordinates
    b_rows = []
    for y in range(1, n):
        for c in range(d):
            row = np.zeros(nvars, dtype=np.int64)
            for q in range(1, n):
                for j, g in enumerate(seq):
                    block = np.zeros(d, dtype=np.int64)
                    if q == y:
                        block = (block + acts[g][c]) % p
                    if g == y:
                        block[c] = (block[c] + 1) % p
                    if q_group.table[q][g] == y:
                        block[c] = (block[c] - 1) % p
                    for cc in range(d):
                        row[var_id(q, j, cc)] = (row[var_id(q, j, cc)] + block[cc]) % p
            b_rows.append(row)
    b_matrix = np.array(b_rows, dtype=np.int64) if b_rows else np.zeros((0, nvars), dtype=np.int64)
    if b_matrix.size and ((system @ b_matrix.T) % p).any():
        raise ExtensionError("coboundary outside the cocycle space")
    b_reduced, b_pivots = matp.rref(b_matrix, p)
    b_dim = len(b_pivots)

    comp = matp.complement_basis(z_free, b_reduced, p)
    h = len(comp)

    def expand(vec):
        full = np.einsum("abcv,v->abc", L, np.asarray(vec, dtype=np.int64)) % p
        return tuple(tuple(tuple(int(e) for e in cell) for cell in row) for row in full)

    reps = []
    for coeffs in iproduct(range(p), repeat=h):
        vec = np.zeros(nvars, dtype=np.int64)
        for lam, row in zip(coeffs, comp):
            vec = (vec + lam * row) % p
        reps.append(expand(vec))

    z_tables = tuple(expand(v) for v in z_free)
    b_full = tuple(expand(v) for v in b_reduced)
    return CocycleSpace(module, z_tables, b_full, tuple(reps), z_dim, b_dim)


def cocycle_residual(module: ModuleStructure, cocycle) -> int:
    """Max residual of the cocycle identity over all triples (0 iff valid)."""
    p = module.p
    n = module.quotient.order
    table = np.array(module.quotient.table, dtype=np.int64)
    f = np.array(cocycle, dtype=np.int64) % p
    worst = 0
    for q3 in range(n):
        phi = np.array(module.action[q3], dtype=np.int64)
        lhs = (f @ phi + f[table, q3]) % p
        rhs = (f[:, q3][None, :, :] + f[:, table[:, q3]]) % p
        delta = int(((lhs - rhs) % p).max())
        worst = max(worst, delta)
    return worst


# -- extension assembly -----------------------------------------------------------


def build_extension(module: ModuleStructure, cocycle, gid="") -> Group:
    """Group of order |Q| * p^d from a normalized 2-cocycle.

    Elements are pairs (q, m) with index q * p^d + rank(m); the cocycle
    identity is re-verified before the table is built.
    """
    if cocycle_residual(module, cocycle):
        raise ExtensionError("cocycle identity residual nonzero")
    q_group = module.quotient
    p, d = module.p, module.d
    nq = q_group.order
    pd = p ** d

    vectors = list(iproduct(*[range(p)] * d))
    rank_of = {v: i for i, v in enumerate(vectors)}
    f = [
        [tuple(int(c) % p for c in cocycle[q1][q2]) for q2 in range(nq)]
        for q1 in range(nq)
    ]

    # ranks after acting: act_rank[q][r] = rank(vec(r) . phi(q))
    act_rank = []
    for q in range(nq):
        mat = module.action[q]
        row = []
        for v in vectors:
            moved = tuple(
                sum(v[i] * mat[i][j] for i in range(d)) % p for j in range(d)
            )
            row.append(rank_of[moved])
        act_rank.append(row)

    add_rank = [
        [rank_of[tuple((x + y) % p for x, y in zip(u, v))] for v in vectors]
        for u in vectors
    ]
    f_rank = [[rank_of[f[q1][q2]] for q2 in range(nq)] for q1 in range(nq)]

    size = nq * pd
    table = [[0] * size for _ in range(size)]
    for q1 in range(nq):
        qrow = q_group.table[q1]
        for m1 in range(pd):
            row = table[q1 * pd + m1]
            for q2 in range(nq):
                base = qrow[q2] * pd
                moved = act_rank[q2][m1]
                fr = f_rank[q1][q2]
                for m2 in range(pd):
                    row[q2 * pd + m2] = base + add_rank[add_rank[moved][m2]][fr]
    return Group(table, id=gid or "%s.ext%d^%d" % (q_group.id, p, d), check="basic")


# -- catalog growth ----------------------------------------------------------------


def factor_pairs(n: int):
    """(p, d) with p prime, d >= 1 and p^d dividing n, ordered by (p, d)."""
    out = []
    for p in _primes_dividing(n):
        pk = p
        d = 1
        while n % pk == 0:
            out.append((p, d))
            pk *= p
            d += 1
    return sorted(out)


def _primes_dividing(n: int):
    out = []
    m = n
    candidate = 2
    while candidate * candidate <= m:
        if m % candidate == 0:
            out.append(candidate)
            while m % candidate == 0:
                m //= candidate
        candidate += 1
    if m > 1:
        out.append(m)
    return out


def _is_elementary_abelian(group: Group, elems):
    size = len(elems)
    if size < 2:
        return None
    orders = {group.elt_order[x] for x in elems if x}
    if len(orders) != 1:
        return None
    p = orders.pop()
    if not _is_prime(p):
        return None
    d = 0
    size_left = size
    while size_left % p == 0:
        size_left //= p
        d += 1
    if size_left != 1 or p ** d != size:
        return None
    eset = set(elems)
    for a in elems:
        for b in elems:
            if group.table[a][b] != group.table[b][a] or group.table[a][b] not in eset:
                return None
    return (p, d)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _dimension_gap_possible(d, p, max_quotient_order):
    """Could GL(d,p) hold an irreducible subgroup of order <= bound?"""
    if max_quotient_order < 1:
        return False
    if max_quotient_order == 1 and d > 1:
        return False
    try:
        table = irreducible_subgroups_gl(d, p, max_order=max_quotient_order)
    except ExtensionError:
        return True  # cannot rule it out
    return any(
        max_quotient_order % e.abstract.order == 0 for e in table.entries
    )


def extend_catalog(
    validated: GroupCatalog,
    pair: Optional[ValencyPair],
    max_order: int,
    seeds: Sequence[Group] = (),
    *,
    dim_bound: int = DEFAULT_DIM_BOUND,
    budget: int = DEFAULT_COCYCLE_BUDGET,
    witness=None,
):
    """Grow the catalog of sub-(a,b)-valent groups up to max_order.

    validated must be complete below its own largest computed order; the
    returned catalog shares its Group objects.  With pair=None all soluble
    groups are enumerated (no valency screening), which is exhaustive for
    every order below 60 when no nonsoluble seeds are supplied.

    Per order: construct extension candidates in deterministic key order,
    discard any whose first (quotient, module) witness pair precedes the one
    in hand, screen by rank and the quotient filter, dedup by isomorphism,
    and finally (pair mode) keep only groups holding a subvalent witness set.

    Returns (catalog, incomplete) where incomplete maps flagged orders to the
    (p, d) factorizations skipped because d exceeded dim_bound.
    """
    witness_fn = witness
    if witness_fn is None and pair is not None:
        from .cayleysets import subvalent_witness as witness_fn

    catalog = GroupCatalog()
    if not validated.has_order(1):
        start_seed = [s for s in seeds if s.order == 1]
        catalog.add(start_seed[0] if start_seed else _trivial_group())
    for n in sorted(validated.orders):
        for g in validated.groups(n):
            catalog.add(g)

    incomplete: dict[int, list] = {}
    start = max(catalog.orders) + 1

    for n in range(start, max_order + 1):
        candidates = []  # (key, group) in deterministic construction order
        for si, seed in enumerate(s for s in seeds if s.order == n):
            candidates.append(((-1, 0, si, 0, 0), seed))
        for p, d in factor_pairs(n):
            q_order = n // p ** d
            if q_order == n:
                continue
            if d > dim_bound:
                if _dimension_gap_possible(d, p, q_order):
                    incomplete.setdefault(n, []).append((p, d))
                continue
            for qi, q_grp in enumerate(catalog.groups(q_order)):
                for mi, module in enumerate(module_structures(q_grp, p, d)):
                    space = two_cocycle_space(module, budget=budget)
                    for ci, rep in enumerate(space.h2_reps):
                        built = build_extension(module, rep)
                        candidates.append(((p, d, qi, mi, ci), built))

        survivors = []
        for key, group in candidates:
            if pair is not None and not rank_at_most(group, pair.k):
                continue
            if not _quotients_validated_and_first(group, key, catalog, dim_bound):
                continue
            survivors.append((key, group))

        unique = []
        for key, group in survivors:
            if any(
                group.fingerprint() == other.fingerprint()
                and _isomorphic(group, other)
                for _, other in unique
            ):
                continue
            unique.append((key, group))

        kept = []
        for _, group in unique:
            if pair is not None and witness_fn(group, pair) is None:
                continue
            kept.append(group)

        kept.sort(key=lambda g: (g.fingerprint(), g.table))
        catalog.mark_order(n)
        for g in kept:
            catalog.add(g)

    return catalog, incomplete


def enumerate_all_groups(max_order: int, *, budget: int = DEFAULT_COCYCLE_BUDGET) -> GroupCatalog:
    """Every soluble group of order <= max_order, via unfiltered extensions.

    Since all groups of order below 60 are soluble, this is a complete group
    catalog at desk scale; it stands in for an external small-group library.
    """
    dim = 1
    while 1 << (dim + 1) <= max_order:
        dim += 1
    catalog, incomplete = extend_catalog(
        GroupCatalog(), None, max_order, dim_bound=dim, budget=budget
    )
    if incomplete:
        raise ExtensionError("unexpected incomplete orders: %r" % incomplete)
    return catalog


def _trivial_group():
    return Group([[0]], id="1", check="basic")


def _isomorphic(a, b):
    from .groups import are_isomorphic

    return are_isomorphic(a, b) is not None


def _quotients_validated_and_first(group, key, catalog, dim_bound):
    """Every minimal-normal quotient is cataloged, and no earlier witness exists.

    The witness order mirrors the construction order: a constructed group is
    kept only when the (quotient, module) pair in hand is the first among all
    (minimal normal elementary abelian N', G/N') pairs, so each group is
    built exactly once per order before the isomorphism dedup.
    """
    n = group.order
    witness_keys = []
    for sub in minimal_normal_subgroups(group):
        if len(sub) == n:
            continue  # quotient trivial, cataloged by construction
        quot, _ = quotient(group, sub)
        position = catalog.position(quot)
        if position is None:
            return False
        structure = _is_elementary_abelian(group, sub.elements)
        if structure is None:
            continue
        p, d = structure
        if d > dim_bound:
            continue
        witness_keys.append((p, d, position[1]))
    current = key[:3]
    if key[0] == -1:
        return True  # seeds bypass the once-only rule
    if witness_keys and min(witness_keys) < current:
        return False
    return True
