"""Enumeration of (a,b)-valent Cayley sets up to the group automorphism action.

The base objects are the inverse blocks {x, x^-1} partitioning G minus the
identity; involution blocks are numbered before the rest so the total block
order realizes the involutions-first constraint.  Orderly generation emits
exactly one lex-least representative per orbit; ordered generation trades
canonicity checks for pointwise-stabilizer orbit branching and may emit
orbit duplicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .groups import Group, GroupError, automorphism_group, generated_closure
from .permgrp import PermGroup, induced_action
from .valence import ValencyPair, classify_set, subvalent_pairs


@dataclass(frozen=True)
class InversePairs:
    group: Group = field(compare=False)
    blocks: tuple  # involution singletons first, then {x, x^-1} pairs
    n_involutions: int
    block_of: tuple = field(compare=False)  # element index -> block index


def inverse_pairs(group: Group) -> InversePairs:
    if group.order < 2:
        raise GroupError("inverse pairs need a nontrivial group")
    if group._pairs is not None:
        return group._pairs
    singles = [(x,) for x in range(1, group.order) if group.inverse[x] == x]
    doubles = [
        (x, group.inverse[x])
        for x in range(1, group.order)
        if x < group.inverse[x]
    ]
    blocks = tuple(singles + doubles)
    block_of = [-1] * group.order
    for i, block in enumerate(blocks):
        for x in block:
            block_of[x] = i
    pairs = InversePairs(group, blocks, len(singles), tuple(block_of))
    group._pairs = pairs
    return pairs


def block_action(group: Group) -> PermGroup:
    """Action of Aut(G) on the inverse blocks (cached per group)."""
    cached = getattr(group, "_block_action", None)
    if cached is not None:
        return cached
    pairs = inverse_pairs(group)
    action = induced_action(automorphism_group(group), pairs.blocks)
    group._block_action = action
    return action


@dataclass(frozen=True)
class CayleySet:
    group: Group = field(compare=False)
    elements: tuple
    valency: ValencyPair

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        object.__setattr__(self, "elements", elems)
        if self.valency.k == 0:
            if elems or self.group.order != 1:
                raise GroupError("empty Cayley set only generates the trivial group")
            return
        if classify_set(self.group, elems) != self.valency:
            raise GroupError("valency does not match the element set")
        if len(generated_closure(self.group, elems)) != self.group.order:
            raise GroupError("Cayley set does not generate the group")

    def block_indices(self):
        pairs = inverse_pairs(self.group)
        return frozenset(pairs.block_of[x] for x in self.elements)


def _blocks_to_elements(pairs: InversePairs, picked):
    elems = []
    for i in picked:
        elems.extend(pairs.blocks[i])
    return tuple(sorted(elems))


def orderly_generate(group: Group, pair: ValencyPair):
    """One lex-least Cayley set per Aut(G)-orbit of (a,b)-valent sets.

    Depth-first extension in increasing block order, involution blocks
    first, with remaining-capacity lookahead and a smallest-image gate at
    every extension.
    """
    if group.order == 1:
        return [CayleySet(group, (), pair)] if pair.k == 0 else []
    pairs = inverse_pairs(group)
    ninv = pairs.n_involutions
    nblocks = len(pairs.blocks)
    a, k = pair.a, pair.k
    if a > ninv or (k - a) // 2 > nblocks - ninv:
        return []
    action = block_action(group)
    table = group.table
    results = []

    def recurse(chosen, covered):
        if covered == k:
            elems = _blocks_to_elements(pairs, chosen)
            if len(generated_closure(group, elems)) == group.order:
                results.append(elems)
            return
        last = chosen[-1] if chosen else -1
        if covered < a:
            # enough involution blocks must remain after the candidate
            lo = max(last + 1, 0)
            hi = ninv - (a - covered - 1)
            step = 1
        else:
            lo = max(last + 1, ninv)
            hi = nblocks - (k - covered - 2) // 2
            step = 2
        for y in range(lo, hi):
            candidate = chosen + [y]
            if action.is_smallest_image(candidate):
                recurse(candidate, covered + step)

    recurse([], 0)
    results.sort()
    return [CayleySet(group, elems, pair) for elems in results]


def ordered_generate(group: Group, pair: ValencyPair):
    """At least one representative per orbit, no smallest-image calls.

    Branches only over the least block of each orbit of the pointwise
    stabilizer of the chosen prefix, acting on the unused blocks of the
    current phase.  Exact duplicates are dropped; orbit-level redundancy may
    remain.
    """
    if group.order == 1:
        return [CayleySet(group, (), pair)] if pair.k == 0 else []
    pairs = inverse_pairs(group)
    ninv = pairs.n_involutions
    nblocks = len(pairs.blocks)
    a, k = pair.a, pair.k
    if a > ninv or (k - a) // 2 > nblocks - ninv:
        return []
    action = block_action(group)
    found = []
    seen = set()

    def recurse(prefix, covered, stab):
        # stab is the pointwise stabilizer of prefix, maintained incrementally
        if covered == k:
            block_set = frozenset(prefix)
            if block_set in seen:
                return
            seen.add(block_set)
            elems = _blocks_to_elements(pairs, sorted(block_set))
            if len(generated_closure(group, elems)) == group.order:
                found.append(elems)
            return
        used = set(prefix)
        if covered < a:
            pool = [y for y in range(ninv) if y not in used]
            step = 1
        else:
            pool = [y for y in range(ninv, nblocks) if y not in used]
            step = 2
        if not pool:
            return
        for _, least in stab.orbits(pool):
            recurse(prefix + [least], covered + step, stab.point_stabilizer(least))

    recurse([], 0, action)
    found = sorted(set(found))
    return [CayleySet(group, elems, pair) for elems in found]


def subvalent_witness(group: Group, pair: ValencyPair) -> Optional[CayleySet]:
    """Any one sub-(a,b)-valent Cayley set, searching small valencies first."""
    for sub in subvalent_pairs(pair):
        if sub.k == 0:
            if group.order == 1:
                return CayleySet(group, (), sub)
            continue
        if group.order == 1:
            continue
        pairs = inverse_pairs(group)
        ninv = pairs.n_involutions
        doubles = range(ninv, len(pairs.blocks))
        if sub.a > ninv or sub.b // 2 > len(pairs.blocks) - ninv:
            continue
        for inv_pick in combinations(range(ninv), sub.a):
            for pair_pick in combinations(doubles, sub.b // 2):
                elems = _blocks_to_elements(pairs, inv_pick + pair_pick)
                if len(generated_closure(group, elems)) == group.order:
                    return CayleySet(group, elems, sub)
    return None


def orbit_closure_equal(group: Group, list_a, list_b) -> bool:
    """Do two Cayley-set lists cover the same Aut(G)-orbits?

    Compares canonical (smallest-image) block sets rather than materializing
    orbits.
    """
    action = block_action(group)

    def canon(cayley_sets):
        return {action.smallest_image(cs.block_indices()) for cs in cayley_sets}

    return canon(list_a) == canon(list_b)
