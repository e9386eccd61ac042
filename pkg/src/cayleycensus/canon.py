"""Canonical graph labeling by individualization and refinement.

The search tree refines an initially uniform coloring to equitable
partitions, individualizes one vertex of the first smallest non-singleton
cell at each node, and keeps the lexicographically least leaf certificate.
Automorphisms discovered from equal-certificate leaves prune sibling
branches through pointwise stabilizers and accumulate into the full
automorphism group of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permgrp import PermGroup
from . import sparse6


@dataclass(frozen=True)
class CanonicalCert:
    cert: bytes  # sparse6 of the canonically relabeled graph
    aut_order: int
    aut_gens: tuple

    def __hash__(self):
        return hash(self.cert)


def _refine(adj, partition):
    """Equitable refinement: split cells by neighbor counts per cell, to a fixpoint."""
    n = len(adj)
    cells = [list(c) for c in partition]
    while True:
        cell_id = [0] * n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_id[v] = idx
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[cell_id[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in sorted(sig):
                new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _leaf_form(adj, cells):
    """(comparable certificate, labeling) for a discrete partition."""
    labeling = [cell[0] for cell in cells]  # position -> vertex
    position = [0] * len(adj)
    for i, v in enumerate(labeling):
        position[v] = i
    rows = []
    for v in labeling:
        mask = 0
        for w in adj[v]:
            mask |= 1 << position[w]
        rows.append(mask)
    return tuple(rows), labeling


def canonical_cert(graph) -> CanonicalCert:
    """Canonical certificate, automorphism generators, and group order."""
    adj = graph.adj
    n = graph.n
    if n == 1:
        return CanonicalCert(sparse6.encode(1, []), 1, ())

    best = None  # (form, labeling)
    first = None
    gens: list = []
    known = PermGroup([], n)

    def note_automorphism(label_a, label_b):
        nonlocal known
        perm = [0] * n
        for i in range(n):
            perm[label_b[i]] = label_a[i]
        perm = tuple(perm)
        if all(perm[x] == x for x in range(n)):
            return
        for v in range(n):
            if sorted(perm[w] for w in adj[v]) != list(adj[perm[v]]):
                raise AssertionError("leaf pair does not define an automorphism")
        if not known.contains(perm):
            gens.append(perm)
            known = PermGroup(list(gens), n)

    def search(cells, prefix, stab, stab_gen_count):
        # stab fixes prefix pointwise; it may lag behind `known` (gens found
        # deeper in the tree), which only weakens pruning, never soundness.
        nonlocal best, first
        cells = _refine(adj, cells)
        if all(len(c) == 1 for c in cells):
            form, labeling = _leaf_form(adj, cells)
            if first is None:
                first = (form, labeling)
            elif form == first[0]:
                note_automorphism(first[1], labeling)
            if best is None or form < best[0]:
                best = (form, labeling)
            elif form == best[0] and labeling != best[1]:
                note_automorphism(best[1], labeling)
            return
        target = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: len(cells[i]),
        )
        cell = cells[target]
        explored = []
        for v in sorted(cell):
            if not prefix:
                stab = known  # always current at the root
                stab_gen_count = len(gens)
            elif explored and stab_gen_count != len(gens) and len(prefix) <= 2:
                # refresh shallow stabilizers when new automorphisms appeared
                stab = known.pointwise_stabilizer(tuple(prefix))
                stab_gen_count = len(gens)
            if explored and any(
                stab.orbit_min(v) == stab.orbit_min(e) for e in explored
            ):
                continue
            explored.append(v)
            branched = (
                cells[:target]
                + [[v], [w for w in cell if w != v]]
                + cells[target + 1 :]
            )
            search(branched, prefix + [v], stab.point_stabilizer(v), stab_gen_count)

    search([list(range(n))], [], known, 0)
    _, labeling = best
    position = [0] * n
    for i, v in enumerate(labeling):
        position[v] = i
    edges = sorted(
        (min(position[u], position[v]), max(position[u], position[v]))
        for u in range(n)
        for v in adj[u]
        if u < v
    )
    aut = PermGroup(list(gens), n)
    return CanonicalCert(sparse6.encode(n, edges), aut.order(), tuple(gens))
