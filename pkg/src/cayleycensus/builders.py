"""Constructors for common finite groups as multiplication tables.

These cover the classical families used for fixtures and seeds: cyclic,
elementary abelian, dihedral, dicyclic, direct and semidirect products, and
small permutation groups via the regular representation.  Every constructor
funnels through Group with full validation, so a wrong action convention
fails loudly instead of producing a non-group.
"""

from __future__ import annotations

from .groups import Group, GroupError, regular_representation
from .permgrp import perm_from_cycles, pmul


def trivial(id="1") -> Group:
    return Group([[0]], id=id)


def cyclic(n: int, id=None) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return Group(table, id=id or "C%d" % n)


def direct_product(a: Group, b: Group, id=None) -> Group:
    nb = b.order
    n = a.order * nb
    table = [
        [
            a.table[i // nb][j // nb] * nb + b.table[i % nb][j % nb]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Group(table, id=id or "%sx%s" % (a.id, b.id))


def abelian(*orders, id=None) -> Group:
    """Direct product of cyclic groups of the given orders."""
    if not orders:
        return trivial(id=id or "1")
    group = cyclic(orders[0])
    for m in orders[1:]:
        group = direct_product(group, cyclic(m))
    return Group(group.table, id=id or "C" + "xC".join(str(m) for m in orders))


def elementary_abelian(p: int, d: int, id=None) -> Group:
    return abelian(*([p] * d), id=id or "C%d^%d" % (p, d))


def dihedral(n: int, id=None) -> Group:
    """Dihedral group of order 2n: rotations r^i and reflections r^i s."""
    if n < 1:
        raise GroupError("dihedral parameter must be positive")
    size = 2 * n

    def mul(x, y):
        e, i = divmod(x, n)
        f, j = divmod(y, n)
        rot = (i + j) % n if e == 0 else (i - j) % n
        return ((e + f) % 2) * n + rot

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    return Group(table, id=id or "D%d" % n)


def dicyclic(m: int, id=None) -> Group:
    """Dicyclic group of order 4m: <a, b | a^(2m)=1, b^2=a^m, bab^-1=a^-1>."""
    if m < 1:
        raise GroupError("dicyclic parameter must be positive")
    n = 2 * m
    size = 4 * m

    def mul(x, y):
        e, i = divmod(x, n)
        f, j = divmod(y, n)
        if e == 0:
            return f * n + (i + j) % n
        if f == 0:
            return n + (i - j) % n
        return ((i - j + m) % n)

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    return Group(table, id=id or ("Q%d" % size if m > 1 else "C4"))


def semidirect(normal: Group, top: Group, action, id=None) -> Group:
    """Semidirect product N x| H for a homomorphism H -> Aut(N).

    action maps each H index to a permutation of N's indices; Group
    validation catches assignments that fail to define a group.
    """
    if len(action) != top.order:
        raise GroupError("action must assign an automorphism to every element")
    nn = normal.order
    size = nn * top.order

    def mul(x, y):
        n1, h1 = divmod(x, top.order)
        n2, h2 = divmod(y, top.order)
        twisted = action[h1][n2]
        return normal.table[n1][twisted] * top.order + top.table[h1][h2]

    table = [[mul(x, y) for y in range(size)] for x in range(size)]
    return Group(table, id=id or "%s:%s" % (normal.id, top.id))


def cyclic_action(normal: Group, alpha, order: int):
    """Action list for a cyclic group of the given order via powers of alpha."""
    alpha = tuple(alpha)
    acts = [tuple(range(normal.order))]
    for _ in range(order - 1):
        acts.append(pmul(acts[-1], alpha))
    if pmul(acts[-1], alpha) != acts[0]:
        raise GroupError("automorphism order does not divide the acting order")
    return acts


def symmetric(n: int, id=None) -> Group:
    gens = [perm_from_cycles(n, tuple(range(n)))]
    if n >= 2:
        gens.append(perm_from_cycles(n, (0, 1)))
    return regular_representation(gens, id=id or "S%d" % n)


def alternating(n: int, id=None) -> Group:
    if n < 3:
        return trivial(id=id or "A%d" % n)
    if n == 3:
        return cyclic(3, id=id or "A3")
    gens = [perm_from_cycles(n, (0, 1, 2))]
    if n % 2:
        gens.append(perm_from_cycles(n, tuple(range(n))))
    else:
        gens.append(perm_from_cycles(n, tuple(range(1, n)), (0,)))
    return regular_representation(gens, id=id or "A%d" % n)


def quaternion8(id=None) -> Group:
    return Group(dicyclic(2).table, id=id or "Q8")
