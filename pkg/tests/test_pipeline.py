import os
from pathlib import Path

import pytest

from cayleycensus import builders as b
from cayleycensus.cli import main
from cayleycensus.config import (
    CensusConfig,
    ConfigError,
    apply_overrides,
    load_config,
    parse_pairs,
)
from cayleycensus.extensions import enumerate_all_groups
from cayleycensus.groups import Group, group_to_text, load_groups, soluble_radical
from cayleycensus.pipeline import (
    Manifest,
    PipelineError,
    _cross_check,
    _extend_catalogs,
    _ingest_catalogs,
    parse_set_file,
    run_all,
    run_groups,
    run_sets,
    run_stats,
    verify,
)
from cayleycensus.stats import (
    cages_from_stats_csv,
    census_rows_from_csv,
    compute_stats_rows,
)
from cayleycensus.valence import ValencyPair


def tree_bytes(root: Path):
    """All output files and their bytes, for byte-identical comparisons."""
    out = {}
    for path in sorted(root.rglob("*")):
        if path.is_file():
            out[str(path.relative_to(root))] = path.read_bytes()
    return out


def small_config(tmp, **overrides):
    base = {"valency": "3", "max_order": "12", "out": str(tmp)}
    base.update({k: str(v) for k, v in overrides.items()})
    return apply_overrides(CensusConfig(), base)


def write_corpus(path: Path, max_order: int):
    catalog = enumerate_all_groups(max_order)
    text = "".join(
        group_to_text(Group(g.table, id="c%d-%d" % (n, i + 1), check="basic"))
        for n in range(1, max_order + 1)
        for i, g in enumerate(catalog.groups(n))
    )
    path.write_text(text, encoding="utf-8")
    return path


# -- config -------------------------------------------------------------------------


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "census.cfg"
    path.write_text(
        "# comment\nvalency=4\nmax_order=20\nmode=extend\npairs=4:0,0:4\n",
        encoding="utf-8",
    )
    cfg = load_config(path)
    assert cfg.valency == 4 and cfg.max_order == 20
    assert [(
        p.a,
        p.b,
    ) for p in cfg.pairs] == [(4, 0), (0, 4)]
    cfg2 = apply_overrides(cfg, {"max_order": "26", "pairs": "2:2"})
    assert cfg2.max_order == 26 and cfg2.pairs == (ValencyPair(2, 2),)


def test_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        parse_pairs("3-0")
    with pytest.raises(ConfigError):
        apply_overrides(CensusConfig(), {"mode": "bogus"})
    with pytest.raises(ConfigError):
        apply_overrides(CensusConfig(), {"mode": "ingest"})  # corpus required
    with pytest.raises(ConfigError):
        apply_overrides(CensusConfig(), {"valency": "3", "pairs": "2:2"})
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(bad)


def test_default_pairs_follow_sigma():
    cfg = apply_overrides(CensusConfig(), {"valency": "4"})
    assert [(p.a, p.b) for p in cfg.resolved_pairs()] == [(4, 0), (2, 2), (0, 4)]


# -- stages -----------------------------------------------------------------------------


def test_run_groups_writes_files_and_validity(tmp_path):
    cfg = small_config(tmp_path / "out")
    stage = run_groups(cfg)
    assert (tmp_path / "out" / "groups" / "8").is_dir()
    # order 9: Z9 is (0,2)-valent hence sub-(1,2)-valent and cataloged
    nine = stage.storage[9]
    assert len(nine) == 1
    gid = nine[0][0]
    assert gid in stage.validity[(9, ValencyPair(1, 2))]
    assert gid not in stage.validity[(9, ValencyPair(3, 0))]
    # order 8: union over pairs has 4 groups, per-pair lists smaller
    assert len(stage.storage[8]) == 4
    assert len(stage.validity[(8, ValencyPair(1, 2))]) == 3
    assert len(stage.validity[(8, ValencyPair(3, 0))]) == 2
    reparsed = load_groups(
        (tmp_path / "out" / "groups" / "9" / ("%s.grp" % gid)).read_text()
    )
    assert reparsed[0].order == 9


def test_sets_stage_marks_not_k_valent(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=9)
    manifest = Manifest(Path(cfg.out))
    stage = run_groups(cfg, manifest)
    run_sets(cfg, stage, manifest)
    manifest2 = Manifest(Path(cfg.out))
    flags = [
        key
        for (stage_name, key) in manifest2.records
        if stage_name == "sets" and "not-3-valent" in key
    ]
    # Z9 has no involution and cannot be 3-valent
    nine_id = stage.storage[9][0][0]
    assert any(key.startswith(nine_id) for key in flags)


def test_set_file_roundtrip(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=8)
    stage = run_groups(cfg)
    results = run_sets(cfg, stage)
    text = (tmp_path / "out" / "sets" / "8.sets").read_text()
    parsed = parse_set_file(text)
    assert parsed
    for gid, pair, elems in parsed:
        assert results[(8, gid, pair)].count(elems) == 1


def test_empty_census_produces_empty_outputs(tmp_path):
    # no 3-valent graphs exist below order 4
    cfg = small_config(tmp_path / "out", max_order=3)
    _, _, rows, _ = run_all(cfg)
    assert rows == []
    assert (tmp_path / "out" / "graphs" / "3.s6").read_bytes() == b""
    census = (tmp_path / "out" / "census" / "3.csv").read_text().splitlines()
    assert len(census) == 1  # header only


def test_valency_5_census_matches_oracle(tmp_path):
    from cayleycensus.pipeline import brute_force_census_counts

    cfg = small_config(tmp_path / "out", max_order=12, valency=5)
    _, _, rows, _ = run_all(cfg)
    got = {}
    for r in rows:
        got[r.order] = got.get(r.order, 0) + 1
    want = brute_force_census_counts(5, 12)
    for n in range(1, 13):
        assert got.get(n, 0) == want[n], n


def test_census_to_12_matches_known_counts(tmp_path):
    cfg = small_config(tmp_path / "out")
    _, _, rows, stats_text = run_all(cfg)
    by_order = {}
    for r in rows:
        by_order[r.order] = by_order.get(r.order, 0) + 1
    assert by_order == {4: 1, 6: 2, 8: 2, 10: 2, 12: 4}
    assert cages_from_stats_csv(stats_text) == {3: 4, 4: 6, 6: 14} or cages_from_stats_csv(
        stats_text
    ) == {3: 4, 4: 6}


def test_census_rows_roundtrip_through_csv(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=8)
    _, _, rows, _ = run_all(cfg)
    text = (tmp_path / "out" / "census" / "3.csv").read_text()
    assert census_rows_from_csv(text) == rows


def test_every_census_graph_is_connected_regular_even_bipartite(tmp_path):
    cfg = small_config(tmp_path / "out")
    _, _, rows, _ = run_all(cfg)
    for row in rows:
        assert row.stab_order * row.order == row.aut_order
        assert row.grr == (row.stab_order == 1)
        if row.bipartite:
            assert row.order % 2 == 0
    s6 = (tmp_path / "out" / "graphs" / "3.s6").read_bytes().splitlines()
    from cayleycensus.graphs import graph_from_sparse6, girth as graph_girth

    assert len(s6) == len(rows)
    for line, row in zip(s6, rows):
        graph = graph_from_sparse6(line)
        assert graph.degree_regular() == 3
        assert graph_girth(graph) == row.girth


def test_determinism_across_runs_and_threads(tmp_path):
    cfg1 = small_config(tmp_path / "a")
    run_all(cfg1)
    cfg2 = small_config(tmp_path / "b")
    run_all(cfg2)
    assert tree_bytes(tmp_path / "a") == tree_bytes(tmp_path / "b")

    cfg4 = small_config(tmp_path / "c", threads=2)
    run_all(cfg4)
    assert tree_bytes(tmp_path / "a") == tree_bytes(tmp_path / "c")


def test_cert_equality_iff_isomorphic_on_census_outputs(tmp_path):
    # pairwise over every output graph with at most 10 vertices
    from itertools import permutations

    from cayleycensus.graphs import graph_from_sparse6

    graphs = []
    for k in (3, 4):
        cfg = small_config(tmp_path / ("k%d" % k), max_order=10, valency=k)
        run_all(cfg)
        lines = (tmp_path / ("k%d" % k) / "graphs" / ("%d.s6" % k)).read_bytes()
        graphs.extend((ln, graph_from_sparse6(ln)) for ln in lines.splitlines())

    def brute_iso(g1, g2):
        if g1.n != g2.n or g1.m != g2.m:
            return False
        return any(
            all(
                tuple(sorted(p[w] for w in g1.adj[v])) == g2.adj[p[v]]
                for v in range(g1.n)
            )
            for p in permutations(range(g1.n))
        )

    for i, (cert_i, graph_i) in enumerate(graphs):
        for cert_j, graph_j in graphs[i + 1 :]:
            assert (cert_i == cert_j) == brute_iso(graph_i, graph_j)


def test_monotone_coverage(tmp_path):
    small = small_config(tmp_path / "small", max_order=10)
    run_all(small)
    big = small_config(tmp_path / "big", max_order=12)
    run_all(big)
    small_lines = (tmp_path / "small" / "graphs" / "3.s6").read_bytes().splitlines()
    big_lines = (tmp_path / "big" / "graphs" / "3.s6").read_bytes().splitlines()
    from cayleycensus.graphs import graph_from_sparse6

    prefix = [ln for ln in big_lines if graph_from_sparse6(ln).n <= 10]
    assert prefix == small_lines


def test_resume_skips_recompute(tmp_path, monkeypatch):
    cfg = small_config(tmp_path / "out", max_order=8)
    run_all(cfg)
    first = tree_bytes(tmp_path / "out")

    import cayleycensus.pipeline as pl

    def boom(*args, **kwargs):
        raise AssertionError("extension engine re-ran despite matching manifest")

    monkeypatch.setattr(pl, "_extend_catalogs", boom)
    run_all(cfg)
    assert tree_bytes(tmp_path / "out") == first


def test_ingest_matches_extend(tmp_path):
    corpus = write_corpus(tmp_path / "corpus.grp", 12)
    ingest_cfg = small_config(tmp_path / "ing", mode="ingest", corpus=corpus)
    extend_cfg = small_config(tmp_path / "ext")
    stage_i = run_groups(ingest_cfg)
    stage_e = run_groups(extend_cfg)
    for n in range(1, 13):
        assert len(stage_i.storage[n]) == len(stage_e.storage[n])
        for pair in ingest_cfg.resolved_pairs():
            assert len(stage_i.validity[(n, pair)]) == len(
                stage_e.validity[(n, pair)]
            )


def test_ingest_of_bundled_corpus_matches_extend_to_16(tmp_path):
    import corpus as corpus_mod

    text = "".join(group_to_text(g) for g in corpus_mod.all_groups_to_16())
    corpus_path = tmp_path / "hand_corpus.grp"
    corpus_path.write_text(text, encoding="utf-8")
    ingest_cfg = small_config(
        tmp_path / "ing", max_order=16, mode="ingest", corpus=corpus_path
    )
    extend_cfg = small_config(tmp_path / "ext", max_order=16)
    stage_i = run_groups(ingest_cfg)
    stage_e = run_groups(extend_cfg)
    for n in range(1, 17):
        assert len(stage_i.storage[n]) == len(stage_e.storage[n]), n


def test_mode_both_cross_checks(tmp_path):
    corpus = write_corpus(tmp_path / "corpus.grp", 10)
    cfg = small_config(tmp_path / "out", max_order=10, mode="both", corpus=corpus)
    stage = run_groups(cfg)
    assert stage.storage[10]

    broken = small_config(
        tmp_path / "broken", max_order=10, mode="both", corpus=tmp_path / "corpus2.grp"
    )
    # corpus with order 10 groups removed entirely -> missing orders error
    text = (tmp_path / "corpus.grp").read_text().split("group c10-")[0]
    (tmp_path / "corpus2.grp").write_text(text, encoding="utf-8")
    with pytest.raises(PipelineError, match="missing orders"):
        run_groups(broken)


def test_cross_check_detects_injected_duplicate(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=6)
    extend_cats, _ = _extend_catalogs(cfg, [])
    corpus = write_corpus(tmp_path / "corpus.grp", 6)
    ingest_cfg = small_config(tmp_path / "ing", max_order=6, mode="ingest", corpus=corpus)
    ingest_cats = _ingest_catalogs(ingest_cfg)
    _cross_check(extend_cats, ingest_cats, 6)  # healthy catalogs agree
    pair = cfg.resolved_pairs()[0]
    ingest_cats[pair].add(b.cyclic(6))  # inject a duplicate entry
    with pytest.raises(PipelineError, match="mismatch"):
        _cross_check(extend_cats, ingest_cats, 6)


def test_stats_requires_census(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=6)
    with pytest.raises(PipelineError, match="census CSV missing"):
        run_stats(cfg)


def test_stats_rows_reject_wrong_valency(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=8)
    _, _, rows, _ = run_all(cfg)
    with pytest.raises(ValueError):
        compute_stats_rows(rows, 4, 8)
    with pytest.raises(ValueError):
        compute_stats_rows(rows, 3, 6)


def test_seed_fixture_loads_and_is_trivial_radical():
    text = (Path(__file__).parent / "fixtures" / "seeds_trivial_radical.grp").read_text()
    seeds = load_groups(text)
    assert [g.order for g in seeds] == [60]
    assert soluble_radical(seeds[0]).elements == (0,)


def test_seeded_census_crosses_order_60(tmp_path):
    # beyond order 59 the catalogs need the trivial-radical seeds; with A5
    # supplied, the census reaches the girth-9 record at order 60
    from cayleycensus.groups import is_soluble
    from cayleycensus.stats import cages_from_stats_csv

    seeds = Path(__file__).parent / "fixtures" / "seeds_trivial_radical.grp"
    cfg = small_config(tmp_path / "out", max_order=60, seeds=seeds)
    stage, _, rows, stats_text = run_all(cfg)
    cages = cages_from_stats_csv(stats_text)
    assert cages == {3: 4, 4: 6, 5: 50, 6: 14, 7: 30, 8: 42, 9: 60}
    sixty = [g for _, g in stage.storage[60]]
    assert sum(1 for g in sixty if not is_soluble(g)) == 1  # the seeded A5
    assert any(r.order == 60 and r.girth == 9 for r in rows)


def test_verify_passes_on_small_scope(tmp_path):
    cfg = small_config(tmp_path / "out", max_order=8)
    ok, report = verify(cfg)
    assert ok, report
    assert any(line.startswith("PASS naive-enumeration") for line in report)
    assert any(line.startswith("PASS generator-closure") for line in report)
    assert any(line.startswith("PASS extend-vs-ingest") for line in report)


def test_verify_detects_bad_counts(tmp_path, monkeypatch):
    import cayleycensus.pipeline as pl

    cfg = small_config(tmp_path / "out", max_order=6)

    def doctored(k, bound):
        return {n: 99 for n in range(1, bound + 1)}

    monkeypatch.setattr(pl, "brute_force_census_counts", doctored)
    ok, report = pl.verify(cfg)
    assert not ok
    assert any(line.startswith("FAIL naive-enumeration") for line in report)


# -- CLI ----------------------------------------------------------------------------------


def test_cli_stages_and_exit_codes(tmp_path, capsys):
    out = str(tmp_path / "out")
    assert main(["groups", "--valency", "3", "--max-order", "8", "--out", out]) == 0
    assert main(["sets", "--valency", "3", "--max-order", "8", "--out", out]) == 0
    assert main(["graphs", "--valency", "3", "--max-order", "8", "--out", out]) == 0
    assert main(["stats", "--valency", "3", "--max-order", "8", "--out", out]) == 0
    captured = capsys.readouterr()
    assert "graphs:" in captured.out
    assert (tmp_path / "out" / "stats" / "3_stats.csv").exists()


def test_cli_config_file(tmp_path):
    cfg_file = tmp_path / "c.cfg"
    cfg_file.write_text(
        "valency=3\nmax_order=6\nout=%s\n" % (tmp_path / "out"), encoding="utf-8"
    )
    assert main(["graphs", "--config", str(cfg_file)]) == 0
    assert (tmp_path / "out" / "census" / "3.csv").exists()


def test_cli_error_exit_code(tmp_path):
    out = str(tmp_path / "fresh")
    assert main(["groups", "--valency", "3", "--mode", "ingest", "--out", out]) == 1
    assert main(["groups", "--config", str(tmp_path / "missing.cfg")]) == 1
    corpus = tmp_path / "short.grp"
    corpus.write_text(group_to_text(b.trivial()), encoding="utf-8")
    assert (
        main(
            [
                "groups",
                "--valency",
                "3",
                "--max-order",
                "6",
                "--mode",
                "ingest",
                "--corpus",
                str(corpus),
                "--out",
                out,
            ]
        )
        == 1
    )


def test_cli_verify_exit_codes(tmp_path, monkeypatch):
    out = str(tmp_path / "out")
    assert main(["verify", "--valency", "3", "--max-order", "6", "--out", out]) == 0
    import cayleycensus.cli as cli_mod

    monkeypatch.setattr(cli_mod, "verify", lambda cfg: (False, ["FAIL injected"]))
    assert main(["verify", "--valency", "3", "--max-order", "6", "--out", out]) == 2
