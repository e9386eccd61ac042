"""Simple undirected graphs: Cayley graph construction and per-graph statistics."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from hashlib import sha256
from math import inf
from typing import Optional

from . import sparse6
from .canon import CanonicalCert, canonical_cert
from .cayleysets import CayleySet
from .groups import Group


class GraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges):
        if n < 1:
            raise GraphError("graphs here have at least one vertex")
        adj = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge endpoint out of range")
            if u == v:
                raise GraphError("loops are not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError("duplicate edge")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(neighbors)) for neighbors in adj)
        self.m = len(seen)

    def edges(self):
        return [
            (u, v) for u in range(self.n) for v in self.adj[u] if u < v
        ]

    def degree_regular(self) -> Optional[int]:
        degrees = {len(neighbors) for neighbors in self.adj}
        return degrees.pop() if len(degrees) == 1 else None

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def graph_to_sparse6(graph: Graph) -> bytes:
    return sparse6.encode(graph.n, graph.edges())


def graph_from_sparse6(data) -> Graph:
    n, edges = sparse6.decode(data)
    return Graph(n, edges)


def cayley_graph(group: Group, cayley_set: CayleySet) -> Graph:
    """Cay(G, S): x adjacent to y iff x * y^-1 in S.

    The neighbor set of y is {s*y : s in S}; connectivity is guaranteed by
    the generating property and verified.
    """
    n = group.order
    table = group.table
    edges = set()
    for y in range(n):
        for s in cayley_set.elements:
            x = table[s][y]
            edges.add((min(x, y), max(x, y)))
    graph = Graph(n, sorted(edges))
    if not _connected(graph):
        raise GraphError("Cayley graph is disconnected; generation bug upstream")
    return graph


def _connected(graph: Graph) -> bool:
    seen = [False] * graph.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in graph.adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == graph.n


def girth(graph: Graph):
    """Length of the shortest cycle, math.inf for forests.

    Breadth-first search from every vertex with cutoff at the best bound.
    """
    best = inf
    for root in range(graph.n):
        dist = [-1] * graph.n
        parent = [-1] * graph.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not inf and dist[v] * 2 >= best:
                break
            for w in graph.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    cycle = dist[v] + dist[w] + 1
                    if cycle < best:
                        best = cycle
    return best


def is_bipartite(graph: Graph) -> bool:
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_grr(aut_order: int, group_order: int) -> bool:
    """GRR: the automorphism group is exactly the regular copy of the group."""
    return aut_order == group_order


def is_arc_transitive(graph: Graph, aut_gens) -> bool:
    """Orbit of one arc under the automorphism generators covers all n*k arcs."""
    k = graph.degree_regular()
    if k is None:
        raise GraphError("arc transitivity is defined here for regular graphs")
    if k == 0:
        return True
    start = (0, graph.adj[0][0])
    orbit = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        for g in aut_gens:
            arc = (g[u], g[v])
            if arc not in orbit:
                orbit.add(arc)
                queue.append(arc)
    return len(orbit) == graph.n * k


def right_regular_closure_check(group: Group, graph: Graph, cert: CanonicalCert):
    """Every right translation x -> x*g must lie in the discovered Aut(graph).

    A cheap completeness guard on the canonical search: the regular copy of
    the group is always a subgroup of the graph's automorphisms.
    """
    from .permgrp import PermGroup

    aut = PermGroup(list(cert.aut_gens), graph.n)
    for g in range(group.order):
        translation = tuple(group.table[x][g] for x in range(group.order))
        if not aut.contains(translation):
            return False
    return True


@dataclass(frozen=True)
class CensusRecord:
    cert: CanonicalCert
    order: int
    valency: int
    group_id: str
    set_elements: tuple
    girth_value: object
    bipartite: bool
    aut_order: int
    stab_order: int
    grr: bool
    arc_transitive: bool
    provenance_rank: tuple = field(compare=False, default=())

    @property
    def cert_sha(self) -> str:
        return sha256(self.cert.cert).hexdigest()[:16]


def make_census_record(group: Group, cayley_set: CayleySet, graph: Graph, rank=()):
    cert = canonical_cert(graph)
    if cert.aut_order % group.order:
        raise GraphError("automorphism order not divisible by the vertex count")
    if not right_regular_closure_check(group, graph, cert):
        raise GraphError("right-regular translations missing from Aut search")
    stab = cert.aut_order // group.order
    grr_flag = is_grr(cert.aut_order, group.order)
    at_flag = is_arc_transitive(graph, cert.aut_gens)
    if grr_flag and at_flag and cayley_set.valency.k > 1:
        raise GraphError("a GRR cannot be arc-transitive")
    return CensusRecord(
        cert=cert,
        order=group.order,
        valency=cayley_set.valency.k,
        group_id=group.id,
        set_elements=cayley_set.elements,
        girth_value=girth(graph),
        bipartite=is_bipartite(graph),
        aut_order=cert.aut_order,
        stab_order=stab,
        grr=grr_flag,
        arc_transitive=at_flag,
        provenance_rank=rank,
    )


def dedup_by_isomorphism(records):
    """One record per canonical certificate, first-witness provenance kept.

    Output sorted by (order, valency, certificate bytes).
    """
    chosen: dict[bytes, CensusRecord] = {}
    for rec in sorted(records, key=lambda r: r.provenance_rank):
        key = rec.cert.cert
        if key not in chosen:
            chosen[key] = rec
    return sorted(
        chosen.values(), key=lambda r: (r.order, r.valency, r.cert.cert)
    )
