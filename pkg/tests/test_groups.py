from random import Random

import pytest

from cayleycensus import builders as b
from cayleycensus.groups import (
    Group,
    GroupError,
    GroupHom,
    Subgroup,
    are_isomorphic,
    automorphism_group,
    generated_closure,
    generated_subgroup,
    group_to_text,
    is_generating,
    is_soluble,
    load_group,
    load_groups,
    minimal_normal_subgroups,
    quotient,
    rank_at_most,
    soluble_radical,
)

import corpus
import oracle


Z2_TEXT = """group C2 order 2
table
0 1
1 0
end
"""

Z4_TEXT = """group C4 order 4
table
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
end
"""


def test_load_group_z2():
    g = load_group(Z2_TEXT)
    assert g.order == 2
    assert g.elt_order == (1, 2)


def test_load_group_z4():
    g = load_group(Z4_TEXT)
    assert g.elt_order == (1, 4, 2, 4)
    assert g.inverse == (0, 3, 2, 1)


def test_load_group_rejects_bad_tables():
    with pytest.raises(GroupError, match="Latin"):
        load_group("group X order 2\ntable\n0 1\n1 1\nend\n")
    with pytest.raises(GroupError, match="identity"):
        load_group("group X order 2\ntable\n1 0\n0 1\nend\n")
    with pytest.raises(GroupError):
        load_group("group X order 2\ntable\n0 1\nend\n")


def test_load_group_rejects_nonassociative_latin_square():
    # smallest unital nonassociative quasigroup: order 5 Latin square
    text = "group X order 5\ntable\n"
    rows = ["0 1 2 3 4", "1 0 3 4 2", "2 3 4 0 1", "3 4 1 2 0", "4 2 0 1 3"]
    text += "\n".join(rows) + "\nend\n"
    with pytest.raises(GroupError):
        load_group(text)


def test_perm_body_roundtrip():
    text = "group S3 order 6\nperm\np: 1 0 2\np: 1 2 0\nend\n"
    g = load_group(text)
    assert g.order == 6
    assert sorted(g.elt_order) == [1, 2, 2, 2, 3, 3]
    reparsed = load_group(group_to_text(g))
    assert are_isomorphic(g, reparsed) is not None


def test_perm_body_order_mismatch():
    with pytest.raises(GroupError, match="order"):
        load_group("group X order 5\nperm\np: 1 0 2\nend\n")


def test_multi_record_file():
    text = Z2_TEXT + "\n" + Z4_TEXT
    gs = load_groups(text)
    assert [g.order for g in gs] == [2, 4]


def test_generated_subgroup_examples():
    z6 = b.cyclic(6)
    assert generated_subgroup(z6, {2}).elements == (0, 2, 4)
    assert generated_subgroup(z6, {2, 3}).elements == tuple(range(6))
    assert generated_subgroup(z6, set()).elements == (0,)


def test_is_generating_examples():
    z4 = b.cyclic(4)
    assert is_generating(z4, {1})
    assert not is_generating(z4, {2})
    klein = b.elementary_abelian(2, 2)
    assert is_generating(klein, {1, 2})


def test_minimal_normal_subgroups_examples():
    z6 = b.cyclic(6)
    assert [s.elements for s in minimal_normal_subgroups(z6)] == [(0, 3), (0, 2, 4)]
    z4 = b.cyclic(4)
    assert [s.elements for s in minimal_normal_subgroups(z4)] == [(0, 2)]
    with pytest.raises(GroupError):
        minimal_normal_subgroups(b.trivial())


def test_minimal_normals_match_brute_force():
    for g in [b.symmetric(3), b.dihedral(4), b.quaternion8(), b.alternating(4)]:
        ours = [s.elements for s in minimal_normal_subgroups(g)]
        brute = [tuple(sorted(s)) for s in oracle.brute_minimal_normals(g)]
        assert ours == brute
    s3 = b.symmetric(3)
    mins = minimal_normal_subgroups(s3)
    assert len(mins) == 1 and len(mins[0]) == 3


def test_quotient_examples():
    z4 = b.cyclic(4)
    q, hom = quotient(z4, generated_subgroup(z4, {2}))
    assert q.order == 2
    assert hom.images == (0, 1, 0, 1)

    g, hom = quotient(z4, generated_subgroup(z4, {0}))
    assert g.order == 4 and hom.is_bijective()

    s3 = b.symmetric(3)
    a3 = next(s for s in minimal_normal_subgroups(s3))
    q, hom = quotient(s3, a3)
    assert q.order == 2
    assert hom.kernel().elements == a3.elements


def test_quotient_requires_normal():
    s3 = b.symmetric(3)
    refl = next(x for x in range(1, 6) if s3.elt_order[x] == 2)
    sub = generated_subgroup(s3, {refl})
    with pytest.raises(GroupError, match="normal"):
        quotient(s3, sub)


def test_are_isomorphic_examples():
    assert are_isomorphic(b.cyclic(4), b.elementary_abelian(2, 2)) is None
    z6 = b.cyclic(6)
    prod = b.direct_product(b.cyclic(2), b.cyclic(3))
    hom = are_isomorphic(z6, prod)
    assert hom is not None and hom.is_bijective()
    assert are_isomorphic(b.dihedral(4), b.quaternion8()) is None


def test_are_isomorphic_reflexive_symmetric():
    groups = corpus.groups_of_order(8) + corpus.groups_of_order(12)
    for g in groups:
        assert are_isomorphic(g, g) is not None
    for g in groups:
        for h in groups:
            forward = are_isomorphic(g, h)
            backward = are_isomorphic(h, g)
            assert (forward is None) == (backward is None)


def test_automorphism_group_examples():
    assert automorphism_group(b.elementary_abelian(2, 2)).order() == 6
    assert automorphism_group(b.cyclic(4)).order() == 2
    s3 = b.symmetric(3)
    assert automorphism_group(s3).order() == oracle.brute_automorphism_count(s3)


def test_automorphism_generators_are_homs():
    rng = Random(5)
    for g in [b.cyclic(8), b.dihedral(4), b.quaternion8(), b.alternating(4)]:
        aut = automorphism_group(g)
        for gen in aut.gens:
            GroupHom(g, g, gen)  # raises if not a homomorphism
            assert sorted(gen) == list(range(g.order))
        ident = tuple(range(g.order))
        assert aut.contains(ident)
        if aut.gens:
            for _ in range(10):
                p = rng.choice(aut.gens)
                q = rng.choice(aut.gens)
                assert aut.contains(tuple(q[x] for x in p))


def test_automorphism_counts_match_brute_force():
    for g in corpus.groups_of_order(8):
        assert automorphism_group(g).order() == oracle.brute_automorphism_count(g)


def test_soluble_radical_examples():
    s4 = b.symmetric(4)
    assert len(soluble_radical(s4)) == 24
    z12 = b.cyclic(12)
    assert len(soluble_radical(z12)) == 12
    a5 = b.alternating(5)
    assert soluble_radical(a5).elements == (0,)
    assert not is_soluble(a5)


def test_soluble_radical_quotient_is_trivial():
    for g in [b.symmetric(4), b.alternating(5), b.direct_product(b.alternating(5), b.cyclic(2))]:
        rad = soluble_radical(g)
        if len(rad) == g.order:
            continue
        q, _ = quotient(g, rad)
        assert soluble_radical(q).elements == (0,)


def test_rank_at_most_examples():
    assert not rank_at_most(b.elementary_abelian(2, 3), 2)
    assert rank_at_most(b.elementary_abelian(2, 3), 3)
    assert rank_at_most(b.cyclic(6), 1)
    assert rank_at_most(b.quaternion8(), 2)
    assert not rank_at_most(b.quaternion8(), 1)
    # brute-force witness for the Q8 example
    from itertools import combinations

    q8 = b.quaternion8()
    assert any(
        len(generated_closure(q8, pair)) == 8
        for pair in combinations(range(1, 8), 2)
    )


def brute_rank(group):
    from itertools import combinations

    for size in range(0, group.order):
        for pick in combinations(range(1, group.order), size):
            if len(generated_closure(group, pick)) == group.order:
                return size
    raise AssertionError("unreachable")


def test_rank_matches_brute_force_on_corpus():
    # the p-group path uses the Frattini quotient; check it against plain
    # subset search on every corpus group
    for g in corpus.all_groups_to_16():
        want = brute_rank(g)
        for k in range(1, 5):
            assert rank_at_most(g, k) == (want <= k), (g.id, k)


def test_associativity_random_triples():
    rng = Random(77)
    for g in [b.symmetric(4), b.dicyclic(3), corpus.pauli16()]:
        n = g.order
        for _ in range(1000):
            i, j, l = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            assert g.table[g.table[i][j]][l] == g.table[i][g.table[j][l]]


def test_quotient_hom_is_surjective_with_kernel_n():
    g = b.dihedral(6)
    for sub in minimal_normal_subgroups(g):
        q, hom = quotient(g, sub)
        assert set(hom.images) == set(range(q.order))
        assert hom.kernel().elements == sub.elements


def test_subgroup_validation():
    z6 = b.cyclic(6)
    with pytest.raises(GroupError):
        Subgroup(z6, [0, 2])  # not closed
    with pytest.raises(GroupError):
        Subgroup(z6, [2, 4])  # no identity


def test_corpus_counts_and_nonisomorphism():
    for n in range(1, 17):
        members = corpus.groups_of_order(n)
        assert len(members) == corpus.GROUP_COUNTS[n]
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                assert are_isomorphic(members[i], members[j]) is None, (
                    members[i].id,
                    members[j].id,
                )


def test_corpus_matches_table_backtracking_oracle():
    for n in (1, 2, 3, 4, 5, 6):
        tables = oracle.enumerate_group_tables(n)
        reps = oracle.dedup_groups_by_brute_iso(tables)
        assert len(reps) == corpus.GROUP_COUNTS[n]
