"""Hand-built corpus of all groups of small order, plus classical group counts.

The corpus through order 16 is assembled from textbook constructions and is
independent of the extension engine; tests assert the per-order counts match
the classical values and that members are pairwise nonisomorphic.
"""

from cayleycensus import builders as b
from cayleycensus.groups import Group, generated_subgroup, quotient

# Number of isomorphism classes of groups of order 1..32 (classical values).
GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14,
    17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15,
    25: 2, 26: 2, 27: 5, 28: 4, 29: 1, 30: 4, 31: 1, 32: 51,
}


def pauli16():
    """Central product C4 o D4: quotient of C4 x D4 by the diagonal center."""
    prod = b.direct_product(b.cyclic(4), b.dihedral(4), id="C4xD4")
    # c^2 pairs with the central rotation r^2 of D4 (index 2 in dihedral order)
    diag = generated_subgroup(prod, {2 * prod.order // 4 + 2})
    assert len(diag) == 2
    central, _ = quotient(prod, diag)
    return Group(central.table, id="Pauli16")


def groups_of_order(n):
    """All groups of order n (n <= 16), up to isomorphism."""
    c, d = b.cyclic, b.direct_product
    if n in (1, 2, 3, 5, 7, 11, 13):
        return [b.trivial()] if n == 1 else [c(n)]
    if n == 4:
        return [c(4), b.elementary_abelian(2, 2, id="C2^2")]
    if n == 6:
        return [c(6), b.dihedral(3)]
    if n == 8:
        return [c(8), d(c(4), c(2)), b.elementary_abelian(2, 3), b.dihedral(4), b.quaternion8()]
    if n == 9:
        return [c(9), b.elementary_abelian(3, 2)]
    if n == 10:
        return [c(10), b.dihedral(5)]
    if n == 12:
        return [c(12), d(c(6), c(2)), b.dihedral(6), b.alternating(4), b.dicyclic(3)]
    if n == 14:
        return [c(14), b.dihedral(7)]
    if n == 15:
        return [c(15)]
    if n == 16:
        c4, c2 = c(4), c(2)
        klein = b.elementary_abelian(2, 2)
        inv4 = (0, 3, 2, 1)  # inversion on C4
        swap_klein = (0, 2, 1, 3)  # swap the two basis involutions
        times5 = tuple(i * 5 % 8 for i in range(8))
        times3 = tuple(i * 3 % 8 for i in range(8))
        return [
            c(16),
            d(c4, c4),
            b.semidirect(klein, c4, b.cyclic_action(klein, swap_klein, 4), id="C2^2:C4"),
            b.semidirect(c(8), c2, [tuple(range(8)), times5], id="M4(2)"),
            b.semidirect(c4, c4, b.cyclic_action(c4, inv4, 4), id="C4:C4"),
            d(c(8), c2),
            b.dihedral(8),
            b.semidirect(c(8), c2, [tuple(range(8)), times3], id="SD16"),
            b.dicyclic(4),
            d(c4, klein),
            d(b.dihedral(4), c2),
            d(b.quaternion8(), c2),
            pauli16(),
            b.elementary_abelian(2, 4),
        ]
    raise ValueError("hand corpus covers orders up to 16 only")


def all_groups_to_16():
    out = []
    for n in range(1, 17):
        out.extend(groups_of_order(n))
    return out
