from random import Random

import pytest

from cayleycensus import builders as b
from cayleycensus.cayleysets import (
    CayleySet,
    block_action,
    inverse_pairs,
    orbit_closure_equal,
    ordered_generate,
    orderly_generate,
    subvalent_witness,
)
from cayleycensus.groups import GroupError, automorphism_group, generated_closure
from cayleycensus.valence import ValencyPair, classify_set, sigma

import corpus
import oracle


def test_inverse_pairs_examples():
    assert inverse_pairs(b.cyclic(4)).blocks == ((2,), (1, 3))
    assert inverse_pairs(b.elementary_abelian(2, 2)).blocks == ((1,), (2,), (3,))
    assert inverse_pairs(b.cyclic(5)).blocks == ((1, 4), (2, 3))


def naive_orbits_of_sets(group, element_sets):
    """Partition Cayley sets into Aut(G)-orbits by breadth-first expansion."""
    gens = automorphism_group(group).gens
    remaining = set(element_sets)
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for s in frontier:
                for g in gens:
                    moved = tuple(sorted(g[x] for x in s))
                    if moved not in orbit:
                        orbit.add(moved)
                        new.append(moved)
            frontier = new
        orbits.append(orbit)
        remaining -= orbit
    return orbits


def test_orderly_z6_12():
    result = orderly_generate(b.cyclic(6), ValencyPair(1, 2))
    assert [cs.elements for cs in result] == [(1, 3, 5), (2, 3, 4)]


def test_orderly_q8_12_empty():
    assert orderly_generate(b.quaternion8(), ValencyPair(1, 2)) == []


def test_orderly_klein_20():
    result = orderly_generate(b.elementary_abelian(2, 2), ValencyPair(2, 0))
    assert len(result) == 1


def test_ordered_z4_12():
    result = ordered_generate(b.cyclic(4), ValencyPair(1, 2))
    assert [cs.elements for cs in result] == [(1, 2, 3)]


def test_ordered_z9_12_empty():
    assert ordered_generate(b.cyclic(9), ValencyPair(1, 2)) == []


def test_ordered_covers_same_orbits_as_orderly_z6():
    z6 = b.cyclic(6)
    assert orbit_closure_equal(
        z6,
        orderly_generate(z6, ValencyPair(1, 2)),
        ordered_generate(z6, ValencyPair(1, 2)),
    )


def test_orbit_closure_detects_missing_orbit():
    z6 = b.cyclic(6)
    full = orderly_generate(z6, ValencyPair(1, 2))
    assert orbit_closure_equal(z6, full, full)
    assert not orbit_closure_equal(z6, full, full[:1])


def test_subvalent_witness_examples():
    w = subvalent_witness(b.cyclic(2), ValencyPair(1, 2))
    assert w is not None and w.elements == (1,) and w.valency == ValencyPair(1, 0)

    assert subvalent_witness(b.elementary_abelian(3, 2), ValencyPair(1, 2)) is None

    w5 = subvalent_witness(b.cyclic(5), ValencyPair(0, 2))
    assert w5 is not None and w5.valency == ValencyPair(0, 2)
    assert len(generated_closure(b.cyclic(5), w5.elements)) == 5


def test_cayley_set_validation():
    z6 = b.cyclic(6)
    with pytest.raises(GroupError):
        CayleySet(z6, (1, 3), ValencyPair(1, 2))  # not inverse closed
    with pytest.raises(GroupError):
        CayleySet(z6, (2, 3, 4), ValencyPair(3, 0))  # wrong valency
    with pytest.raises(GroupError):
        CayleySet(z6, (3,), ValencyPair(1, 0))  # does not generate


def test_orderly_outputs_are_canonical_and_irredundant():
    rng = Random(99)
    for group in [b.cyclic(6), b.dihedral(4), b.elementary_abelian(2, 3), b.dicyclic(3)]:
        action = block_action(group)
        for pair in sigma(3).pairs + sigma(4).pairs:
            outputs = orderly_generate(group, pair)
            block_sets = [cs.block_indices() for cs in outputs]
            for blocks in block_sets:
                assert action.is_smallest_image(blocks)
                # random automorphism images canonicalize back to the output
                for _ in range(20):
                    gen = rng.choice(action.gens) if action.gens else None
                    if gen is None:
                        break
                    moved = frozenset(gen[i] for i in blocks)
                    assert action.smallest_image(moved) == frozenset(blocks)
            canon = {action.smallest_image(s) for s in block_sets}
            assert len(canon) == len(block_sets)  # one per orbit


def test_orderly_matches_brute_force_orbit_counts_to_16():
    for group in corpus.all_groups_to_16():
        if group.order < 3:
            continue
        for pair in sigma(3).pairs + sigma(4).pairs:
            ours = orderly_generate(group, pair)
            brute = oracle.brute_cayley_sets(group, pair.a, pair.b)
            orbits = naive_orbits_of_sets(group, brute)
            assert len(ours) == len(orbits), (group.id, pair)
            assert {cs.elements for cs in ours} <= set(brute)


def test_ordered_equals_orderly_closure_to_16():
    for group in corpus.all_groups_to_16():
        if group.order < 3:
            continue
        for pair in sigma(3).pairs + sigma(4).pairs:
            fast = orderly_generate(group, pair)
            loose = ordered_generate(group, pair)
            assert orbit_closure_equal(group, fast, loose), (group.id, pair)
            assert len(loose) >= len(fast)


def test_every_output_is_valid_cayley_set():
    for group in [b.symmetric(3), b.cyclic(8), b.dihedral(6)]:
        for pair in sigma(3).pairs:
            for cs in orderly_generate(group, pair) + ordered_generate(group, pair):
                assert classify_set(group, cs.elements) == pair
                assert len(generated_closure(group, cs.elements)) == group.order
