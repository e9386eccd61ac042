"""Orchestration of the census stages: groups, sets, graphs, stats, verify.

Work is keyed (order, group id, valency pair) and merged in key order, so
outputs are byte-identical for any thread count.  Every stage writes through
a temp-file rename and records content hashes in a json-lines manifest used
for resume.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from hashlib import sha256
from pathlib import Path
from typing import Optional

from .cayleysets import (
    CayleySet,
    ordered_generate,
    orderly_generate,
    subvalent_witness,
)
from .config import CensusConfig
from .extensions import extend_catalog, enumerate_all_groups
from .graphs import cayley_graph, dedup_by_isomorphism, make_census_record
from .groups import Group, are_isomorphic, group_to_text, load_groups
from .stats import (
    CensusRow,
    census_rows_from_csv,
    census_rows_to_csv,
    compute_stats_rows,
    stats_rows_to_csv,
)
from .valence import GroupCatalog, ValencyPair, quotient_filter


class PipelineError(RuntimeError):
    pass


class VerificationFailure(RuntimeError):
    pass


def _sha(data) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return sha256(data).hexdigest()[:20]


def _atomic_write(path: Path, data):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    if isinstance(data, str):
        tmp.write_text(data, encoding="utf-8")
    else:
        tmp.write_bytes(data)
    os.replace(tmp, path)


class Manifest:
    """json-lines manifest: one record per (stage, key), rewritten atomically."""

    def __init__(self, out_dir: Path):
        self.path = Path(out_dir) / "manifest.json-lines"
        self.records: dict[tuple, dict] = {}
        if self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if not line.strip():
                    continue
                rec = json.loads(line)
                self.records[(rec["stage"], rec["key"])] = rec

    def lookup(self, stage: str, key: str) -> Optional[dict]:
        return self.records.get((stage, key))

    def put(self, stage: str, key: str, input_sha: str, outputs=(), info=None):
        self.records[(stage, key)] = {
            "stage": stage,
            "key": key,
            "input_sha": input_sha,
            "outputs": list(outputs),
            "info": info or {},
        }

    def drop_stage(self, stage: str):
        self.records = {
            k: v for k, v in self.records.items() if k[0] != stage
        }

    def flush(self):
        lines = [
            json.dumps(self.records[key], sort_keys=True)
            for key in sorted(self.records)
        ]
        _atomic_write(self.path, "\n".join(lines) + "\n")


def _pair_key(pair: ValencyPair) -> str:
    return "%d:%d" % (pair.a, pair.b)


# -- stage I: groups ---------------------------------------------------------------


@dataclass
class GroupsStage:
    config: CensusConfig
    storage: dict  # order -> list of (gid, Group), sorted by id index
    validity: dict  # (order, pair) -> list of gid
    incomplete: dict  # order -> list of (p, d) skipped

    def group_by_id(self, gid: str) -> Group:
        order = int(gid.split("-")[0])
        for known, group in self.storage[order]:
            if known == gid:
                return group
        raise PipelineError("unknown group id %r" % gid)


def _load_seeds(cfg: CensusConfig):
    if not cfg.seeds:
        return []
    return load_groups(Path(cfg.seeds).read_text(encoding="utf-8"))


def _groups_input_sha(cfg: CensusConfig) -> str:
    parts = [
        "valency=%d" % cfg.valency,
        "max_order=%d" % cfg.max_order,
        "pairs=%s" % ",".join(_pair_key(p) for p in cfg.resolved_pairs()),
        "mode=%s" % cfg.mode,
        "dim_bound=%d" % cfg.dim_bound,
    ]
    if cfg.seeds:
        parts.append("seeds=%s" % _sha(Path(cfg.seeds).read_text(encoding="utf-8")))
    if cfg.corpus and cfg.mode in ("ingest", "both"):
        parts.append("corpus=%s" % _sha(Path(cfg.corpus).read_text(encoding="utf-8")))
    return _sha("\n".join(parts))


def _extend_catalogs(cfg: CensusConfig, seeds):
    catalogs = {}
    incomplete: dict[int, list] = {}
    for pair in cfg.resolved_pairs():
        catalog, missing = extend_catalog(
            GroupCatalog(), pair, cfg.max_order, seeds, dim_bound=cfg.dim_bound
        )
        catalogs[pair] = catalog
        for order, dims in missing.items():
            for item in dims:
                if item not in incomplete.setdefault(order, []):
                    incomplete[order].append(item)
    return catalogs, incomplete


def _ingest_catalogs(cfg: CensusConfig):
    corpus_groups = load_groups(Path(cfg.corpus).read_text(encoding="utf-8"))
    by_order: dict[int, list] = {}
    for g in corpus_groups:
        by_order.setdefault(g.order, []).append(g)
    missing = [n for n in range(1, cfg.max_order + 1) if n not in by_order]
    if missing:
        raise PipelineError("corpus missing orders: %s" % missing)

    catalogs = {pair: GroupCatalog() for pair in cfg.resolved_pairs()}
    for n in range(1, cfg.max_order + 1):
        distinct = []
        for g in by_order[n]:
            if not any(are_isomorphic(g, h) for h in distinct):
                distinct.append(g)
        for pair, catalog in catalogs.items():
            catalog.mark_order(n)
            for g in distinct:
                if not quotient_filter(g, catalog, pair):
                    continue
                if subvalent_witness(g, pair) is None:
                    continue
                catalog.add(g)
    return catalogs


def _cross_check(extend_cats, ingest_cats, max_order):
    for pair, left in extend_cats.items():
        right = ingest_cats[pair]
        for n in range(1, max_order + 1):
            lg, rg = left.groups(n), right.groups(n)
            if len(lg) != len(rg):
                raise PipelineError(
                    "extend/ingest mismatch at order %d pair %s: %d vs %d"
                    % (n, pair, len(lg), len(rg))
                )
            for g in lg:
                if not any(are_isomorphic(g, h) for h in rg):
                    raise PipelineError(
                        "extend/ingest mismatch at order %d pair %s" % (n, pair)
                    )


def run_groups(cfg: CensusConfig, manifest: Optional[Manifest] = None) -> GroupsStage:
    """Stage I: build the per-pair catalogs and write the group files."""
    cfg.validate()
    out = Path(cfg.out)
    manifest = manifest or Manifest(out)
    input_sha = _groups_input_sha(cfg)

    summary = manifest.lookup("groups", "summary")
    if summary and summary["input_sha"] == input_sha:
        loaded = _reload_groups(cfg, manifest)
        if loaded is not None:
            return loaded

    seeds = _load_seeds(cfg)
    if cfg.mode == "extend":
        catalogs, incomplete = _extend_catalogs(cfg, seeds)
    elif cfg.mode == "ingest":
        catalogs, incomplete = _ingest_catalogs(cfg), {}
    else:
        extend_cats, incomplete = _extend_catalogs(cfg, seeds)
        ingest_cats = _ingest_catalogs(cfg)
        _cross_check(extend_cats, ingest_cats, cfg.max_order)
        catalogs = extend_cats

    # merge pair catalogs into per-order storage with stable ids
    storage: dict[int, list] = {}
    validity: dict[tuple, list] = {}
    for n in range(1, cfg.max_order + 1):
        merged: list[Group] = []
        members: dict = {}  # pair -> list of indexes into merged
        for pair in cfg.resolved_pairs():
            members[pair] = []
            for g in catalogs[pair].groups(n):
                match = None
                for idx, known in enumerate(merged):
                    if g.fingerprint() == known.fingerprint() and are_isomorphic(g, known):
                        match = idx
                        break
                if match is None:
                    merged.append(g)
                    match = len(merged) - 1
                members[pair].append(match)
        ranked = sorted(range(len(merged)), key=lambda i: (merged[i].fingerprint(), merged[i].table))
        rank_of = {old: new for new, old in enumerate(ranked)}
        ordered = []
        for new_idx, old_idx in enumerate(ranked):
            gid = "%d-%d" % (n, new_idx + 1)
            group = merged[old_idx]
            relabeled = Group(group.table, id=gid, check="basic")
            ordered.append((gid, relabeled))
        storage[n] = ordered
        for pair in cfg.resolved_pairs():
            validity[(n, pair)] = sorted(
                ("%d-%d" % (n, rank_of[idx] + 1) for idx in members[pair]),
                key=_id_index,
            )

    manifest.drop_stage("groups")
    for n, groups in storage.items():
        outputs = []
        for gid, group in groups:
            rel = Path("groups") / str(n) / ("%s.grp" % gid)
            _atomic_write(out / rel, group_to_text(group))
            outputs.append(str(rel))
        manifest.put(
            "groups",
            "order:%d" % n,
            input_sha,
            outputs,
            info={
                "ids": [gid for gid, _ in groups],
                "validity": {
                    _pair_key(pair): validity[(n, pair)]
                    for pair in cfg.resolved_pairs()
                },
                "complete": n not in incomplete,
                "skipped_dims": [list(x) for x in incomplete.get(n, [])],
            },
        )
    manifest.put(
        "groups",
        "summary",
        input_sha,
        info={
            "max_order": cfg.max_order,
            "mode": cfg.mode,
            "pairs": [_pair_key(p) for p in cfg.resolved_pairs()],
            "total": sum(len(v) for v in storage.values()),
        },
    )
    manifest.flush()
    return GroupsStage(cfg, storage, validity, incomplete)


def _reload_groups(cfg: CensusConfig, manifest: Manifest) -> Optional[GroupsStage]:
    out = Path(cfg.out)
    storage: dict[int, list] = {}
    validity: dict[tuple, list] = {}
    incomplete: dict[int, list] = {}
    for n in range(1, cfg.max_order + 1):
        rec = manifest.lookup("groups", "order:%d" % n)
        if rec is None:
            return None
        groups = []
        for gid in rec["info"]["ids"]:
            path = out / "groups" / str(n) / ("%s.grp" % gid)
            if not path.exists():
                return None
            loaded = load_groups(path.read_text(encoding="utf-8"))
            if len(loaded) != 1 or loaded[0].id != gid:
                return None
            groups.append((gid, loaded[0]))
        storage[n] = groups
        for pair in cfg.resolved_pairs():
            validity[(n, pair)] = rec["info"]["validity"].get(_pair_key(pair), [])
        if not rec["info"].get("complete", True):
            incomplete[n] = [tuple(x) for x in rec["info"].get("skipped_dims", [])]
    return GroupsStage(cfg, storage, validity, incomplete)


# -- stage II: Cayley sets -------------------------------------------------------------


def _sets_worker(payload):
    """Generate sets for one (group text, pair, generator) task; process-safe."""
    group_text, a, b, generator = payload
    group = load_groups(group_text)[0]
    pair = ValencyPair(a, b)
    produce = orderly_generate if generator == "orderly" else ordered_generate
    return [cs.elements for cs in produce(group, pair)]


def run_sets(cfg: CensusConfig, stage: GroupsStage, manifest: Optional[Manifest] = None):
    """Stage II: per-(group, pair) Cayley sets, written per order."""
    out = Path(cfg.out)
    manifest = manifest or Manifest(out)
    input_sha = _sha(_groups_input_sha(cfg) + "|generator=%s" % cfg.generator)

    summary = manifest.lookup("sets", "summary")
    if summary and summary["input_sha"] == input_sha:
        reloaded = _reload_sets(cfg, stage)
        if reloaded is not None:
            return reloaded

    tasks = []
    for n in range(1, cfg.max_order + 1):
        for gid, group in stage.storage.get(n, []):
            for pair in cfg.resolved_pairs():
                if gid in stage.validity.get((n, pair), []):
                    tasks.append((n, gid, pair, group))

    results: dict[tuple, list] = {}
    pending = []
    for n, gid, pair, group in tasks:
        key = (n, gid, pair)
        pending.append((key, (group_to_text(group), pair.a, pair.b, cfg.generator)))

    if cfg.threads > 1 and pending:
        import multiprocessing

        with multiprocessing.Pool(cfg.threads) as pool:
            outcomes = pool.map(_sets_worker, [p for _, p in pending])
    else:
        outcomes = []
        for (n, gid, pair), _payload in pending:
            group = stage.group_by_id(gid)
            produce = orderly_generate if cfg.generator == "orderly" else ordered_generate
            outcomes.append([cs.elements for cs in produce(group, pair)])
    for (key, _), sets in zip(pending, outcomes):
        results[key] = sets

    manifest.drop_stage("sets")
    per_order_lines: dict[int, list] = {n: [] for n in range(1, cfg.max_order + 1)}
    empty_groups = []
    for n in range(1, cfg.max_order + 1):
        for gid, group in stage.storage.get(n, []):
            produced = 0
            for pair in cfg.resolved_pairs():
                key = (n, gid, pair)
                if key not in results:
                    continue
                for elems in results[key]:
                    per_order_lines[n].append(
                        "set %s a=%d b=%d elems=%s"
                        % (gid, pair.a, pair.b, ",".join(str(x) for x in elems))
                    )
                produced += len(results[key])
                manifest.put(
                    "sets",
                    "%s/%s" % (gid, _pair_key(pair)),
                    input_sha,
                    ["sets/%d.sets" % n],
                    info={"count": len(results[key])},
                )
            if produced == 0:
                empty_groups.append(gid)
                manifest.put(
                    "sets",
                    "%s/not-%d-valent" % (gid, cfg.valency),
                    input_sha,
                    info={"not_k_valent": True},
                )
    for n, lines in per_order_lines.items():
        if lines:
            _atomic_write(out / "sets" / ("%d.sets" % n), "\n".join(lines) + "\n")
    manifest.put(
        "sets",
        "summary",
        input_sha,
        info={
            "records": sum(len(v) for v in per_order_lines.values()),
            "not_k_valent": sorted(empty_groups),
        },
    )
    manifest.flush()
    return results


def _reload_sets(cfg: CensusConfig, stage: GroupsStage):
    out = Path(cfg.out)
    results: dict[tuple, list] = {}
    for n in range(1, cfg.max_order + 1):
        for gid, _group in stage.storage.get(n, []):
            for pair in cfg.resolved_pairs():
                if gid in stage.validity.get((n, pair), []):
                    results[(n, gid, pair)] = []
        path = out / "sets" / ("%d.sets" % n)
        if not path.exists():
            continue
        for gid, pair, elems in parse_set_file(path.read_text(encoding="utf-8")):
            key = (n, gid, pair)
            if key not in results:
                return None
            results[key].append(elems)
    return results


def parse_set_file(text: str):
    """Parse 'set <gid> a=<a> b=<b> elems=<csv>' records."""
    records = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5 or parts[0] != "set":
            raise PipelineError("bad set record: %r" % line)
        gid = parts[1]
        a = int(parts[2].split("=")[1])
        b = int(parts[3].split("=")[1])
        elems = tuple(int(x) for x in parts[4].split("=")[1].split(",") if x)
        records.append((gid, ValencyPair(a, b), elems))
    return records


# -- stage III: graphs ---------------------------------------------------------------


def run_graphs(cfg: CensusConfig, stage: GroupsStage, set_results, manifest=None):
    """Stage III: build, canonicalize, and deduplicate the Cayley graphs."""
    out = Path(cfg.out)
    manifest = manifest or Manifest(out)
    pair_rank = {pair: i for i, pair in enumerate(cfg.resolved_pairs())}

    input_sha = _sha(
        _sha(_groups_input_sha(cfg) + "|generator=%s" % cfg.generator)
        + "|graphs"
    )
    summary = manifest.lookup("graphs", "summary")
    census_path = out / "census" / ("%d.csv" % cfg.valency)
    s6_path = out / "graphs" / ("%d.s6" % cfg.valency)
    if (
        summary
        and summary["input_sha"] == input_sha
        and census_path.exists()
        and s6_path.exists()
    ):
        return census_rows_from_csv(census_path.read_text(encoding="utf-8"))

    records = []
    for (n, gid, pair), element_sets in sorted(
        set_results.items(), key=lambda kv: (kv[0][0], _id_index(kv[0][1]), pair_rank[kv[0][2]])
    ):
        group = stage.group_by_id(gid)
        for elems in element_sets:
            cs = CayleySet(group, elems, pair)
            graph = cayley_graph(group, cs)
            rank = (n, _id_index(gid), pair_rank[pair], elems)
            records.append(make_census_record(group, cs, graph, rank=rank))

    deduped = dedup_by_isomorphism(records)
    rows = [
        CensusRow(
            order=rec.order,
            valency=rec.valency,
            group_id=rec.group_id,
            set_elems=rec.set_elements,
            girth=rec.girth_value,
            bipartite=rec.bipartite,
            aut_order=rec.aut_order,
            stab_order=rec.stab_order,
            grr=rec.grr,
            arc_transitive=rec.arc_transitive,
            cert_sha=rec.cert_sha,
        )
        for rec in deduped
    ]

    s6_text = b"".join(rec.cert.cert + b"\n" for rec in deduped)
    csv_text = census_rows_to_csv(rows)
    manifest.drop_stage("graphs")
    _atomic_write(s6_path, s6_text)
    _atomic_write(census_path, csv_text)
    manifest.put(
        "graphs",
        "summary",
        input_sha,
        ["graphs/%d.s6" % cfg.valency, "census/%d.csv" % cfg.valency],
        info={"graphs": len(deduped), "max_order": cfg.max_order, "census_sha": _sha(csv_text)},
    )
    manifest.flush()
    return rows


def _id_index(gid: str) -> int:
    return int(gid.split("-")[1])


# -- stage IV: statistics ----------------------------------------------------------------


def run_stats(cfg: CensusConfig, rows=None, manifest=None) -> str:
    """Stage IV: derived statistics series from the census CSV."""
    out = Path(cfg.out)
    manifest = manifest or Manifest(out)
    if rows is None:
        census_path = out / "census" / ("%d.csv" % cfg.valency)
        if not census_path.exists():
            raise PipelineError("census CSV missing; run the graphs stage first")
        summary = manifest.lookup("graphs", "summary")
        if summary and summary["info"].get("max_order", cfg.max_order) < cfg.max_order:
            raise PipelineError("census does not cover max_order; gaps in coverage")
        rows = census_rows_from_csv(census_path.read_text(encoding="utf-8"))
    stat_rows = compute_stats_rows(rows, cfg.valency, cfg.max_order)
    text = stats_rows_to_csv(stat_rows)
    manifest.drop_stage("stats")
    _atomic_write(out / "stats" / ("%d_stats.csv" % cfg.valency), text)
    manifest.put(
        "stats",
        "summary",
        _sha(text),
        ["stats/%d_stats.csv" % cfg.valency],
        info={"rows": len(stat_rows)},
    )
    manifest.flush()
    return text


def run_all(cfg: CensusConfig):
    manifest = Manifest(Path(cfg.out))
    stage = run_groups(cfg, manifest)
    sets = run_sets(cfg, stage, manifest)
    rows = run_graphs(cfg, stage, sets, manifest)
    stats_text = run_stats(cfg, rows, manifest)
    return stage, sets, rows, stats_text


# -- verification -----------------------------------------------------------------------


def _naive_isomorphic(adj1, adj2) -> bool:
    """Exhaustive graph isomorphism by degree-pruned backtracking."""
    n = len(adj1)
    if n != len(adj2):
        return False
    deg1 = [len(a) for a in adj1]
    deg2 = [len(a) for a in adj2]
    if sorted(deg1) != sorted(deg2):
        return False
    sets2 = [set(a) for a in adj2]
    mapping = [-1] * n
    used = [False] * n

    def place(v):
        if v == n:
            return True
        for target in range(n):
            if used[target] or deg1[v] != deg2[target]:
                continue
            ok = True
            for w in adj1[v]:
                if mapping[w] >= 0 and mapping[w] not in sets2[target]:
                    ok = False
                    break
            if not ok:
                continue
            for w in range(v):
                back = mapping[w]
                if (w in adj1[v]) != (back in sets2[target]):
                    ok = False
                    break
            if ok:
                mapping[v] = target
                used[target] = True
                if place(v + 1):
                    return True
                mapping[v] = -1
                used[target] = False
        return False

    return place(0)


def _graph_invariant(graph):
    from .graphs import girth, is_bipartite

    profile = []
    for v in range(graph.n):
        dist = _bfs_dist(graph, v)
        profile.append(tuple(sorted(dist)))
    return (graph.n, graph.m, girth(graph), is_bipartite(graph), tuple(sorted(profile)))


def _bfs_dist(graph, root):
    from collections import deque

    dist = [-1] * graph.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in graph.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def brute_force_census_counts(k: int, max_order: int):
    """Independent oracle: all inverse-closed generating k-subsets over all
    groups of each order, deduplicated by exhaustive isomorphism search."""
    from itertools import combinations

    from .graphs import Graph

    catalog = enumerate_all_groups(max_order)
    counts = {}
    for n in range(1, max_order + 1):
        reps: dict = {}
        for group in catalog.groups(n):
            blocks = [(x,) for x in range(1, n) if group.inverse[x] == x] + [
                (x, group.inverse[x])
                for x in range(1, n)
                if x < group.inverse[x]
            ]
            for count_inv in range(k + 1):
                rest = k - count_inv
                if rest % 2:
                    continue
                singles = [b for b in blocks if len(b) == 1]
                doubles = [b for b in blocks if len(b) == 2]
                for pick_s in combinations(singles, count_inv):
                    for pick_d in combinations(doubles, rest // 2):
                        elems = tuple(
                            sorted(x for b in pick_s + pick_d for x in b)
                        )
                        from .groups import generated_closure

                        if len(generated_closure(group, elems)) != n:
                            continue
                        table = group.table
                        edges = set()
                        for y in range(n):
                            for s in elems:
                                x = table[s][y]
                                edges.add((min(x, y), max(x, y)))
                        graph = Graph(n, sorted(edges))
                        inv = _graph_invariant(graph)
                        bucket = reps.setdefault(inv, [])
                        if not any(
                            _naive_isomorphic(graph.adj, other.adj)
                            for other in bucket
                        ):
                            bucket.append(graph)
        counts[n] = sum(len(v) for v in reps.values())
    return counts


def verify(cfg: CensusConfig):
    """Oracle suites: naive enumeration, generator closure, extend-vs-ingest."""
    from .cayleysets import orbit_closure_equal

    report = []
    ok = True

    oracle_bound = min(cfg.max_order, 16)
    stage, _, rows, _ = _fresh_pipeline(cfg)
    by_order = {}
    for row in rows:
        by_order[row.order] = by_order.get(row.order, 0) + 1
    oracle_counts = brute_force_census_counts(cfg.valency, oracle_bound)
    for n in range(1, oracle_bound + 1):
        got = by_order.get(n, 0)
        want = oracle_counts[n]
        line_ok = got == want
        ok &= line_ok
        report.append(
            "%s naive-enumeration order=%d census=%d oracle=%d"
            % ("PASS" if line_ok else "FAIL", n, got, want)
        )

    closure_bound = min(cfg.max_order, 24)
    closure_ok = True
    for n in range(2, closure_bound + 1):
        for gid, group in stage.storage.get(n, []):
            for pair in cfg.resolved_pairs():
                if gid not in stage.validity.get((n, pair), []):
                    continue
                fast = orderly_generate(group, pair)
                loose = ordered_generate(group, pair)
                if not orbit_closure_equal(group, fast, loose):
                    closure_ok = False
                    report.append(
                        "FAIL generator-closure %s pair=%s" % (gid, pair)
                    )
    ok &= closure_ok
    if closure_ok:
        report.append(
            "PASS generator-closure orders<=%d (orderly vs ordered)" % closure_bound
        )

    cross_bound = min(cfg.max_order, 24)
    corpus = enumerate_all_groups(cross_bound)
    corpus_text = "".join(
        group_to_text(Group(g.table, id="c%d-%d" % (n, i + 1), check="basic"))
        for n in range(1, cross_bound + 1)
        for i, g in enumerate(corpus.groups(n))
    )
    corpus_path = Path(cfg.out) / "verify_corpus.grp"
    _atomic_write(corpus_path, corpus_text)
    from .config import apply_overrides

    sub_cfg = apply_overrides(
        cfg,
        {
            "max_order": str(cross_bound),
            "mode": "ingest",
            "corpus": str(corpus_path),
            "out": str(Path(cfg.out) / "verify_ingest"),
        },
    )
    ingest_cats = _ingest_catalogs(sub_cfg)
    seeds = _load_seeds(cfg)
    extend_cats, _ = _extend_catalogs(
        apply_overrides(cfg, {"max_order": str(cross_bound)}), seeds
    )
    try:
        _cross_check(extend_cats, ingest_cats, cross_bound)
        report.append("PASS extend-vs-ingest orders<=%d" % cross_bound)
    except PipelineError as exc:
        ok = False
        report.append("FAIL extend-vs-ingest: %s" % exc)

    return ok, report


def _fresh_pipeline(cfg: CensusConfig):
    return run_all(cfg)
