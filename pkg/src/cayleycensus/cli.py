"""census command line: groups | sets | graphs | stats | verify.

Exit codes: 0 success, 2 verification failure, 1 any other error.
"""

from __future__ import annotations

import argparse
import sys

from .config import CensusConfig, apply_overrides, load_config
from .pipeline import (
    Manifest,
    PipelineError,
    run_graphs,
    run_groups,
    run_sets,
    run_stats,
    verify,
)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="census",
        description="Exhaustive census of small k-valent Cayley graphs.",
    )
    parser.add_argument("stage", choices=["groups", "sets", "graphs", "stats", "verify"])
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--valency", type=int)
    parser.add_argument("--max-order", dest="max_order", type=int)
    parser.add_argument("--pairs", help="subset of Sigma_k, e.g. '3:0,1:2'")
    parser.add_argument("--mode", choices=["extend", "ingest", "both"])
    parser.add_argument("--generator", choices=["orderly", "ordered"])
    parser.add_argument("--dim-bound", dest="dim_bound", type=int)
    parser.add_argument("--seeds", help="group file with trivial-radical seeds")
    parser.add_argument("--corpus", help="group file corpus for ingest mode")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--seed-rng", dest="seed_rng", type=int)
    parser.add_argument("--out", help="output directory (default 'out')")
    return parser


def resolve_config(args) -> CensusConfig:
    cfg = load_config(args.config) if args.config else CensusConfig()
    overrides = {
        key: getattr(args, key)
        for key in (
            "valency",
            "max_order",
            "pairs",
            "mode",
            "generator",
            "dim_bound",
            "seeds",
            "corpus",
            "threads",
            "seed_rng",
            "out",
        )
        if getattr(args, key) is not None
    }
    return apply_overrides(cfg, overrides)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
    except Exception as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1

    try:
        if args.stage == "verify":
            ok, report = verify(cfg)
            for line in report:
                print(line)
            return 0 if ok else 2

        manifest = Manifest(cfg.out)
        stage = run_groups(cfg, manifest)
        if args.stage == "groups":
            total = sum(len(v) for v in stage.storage.values())
            print("groups: %d cataloged through order %d" % (total, cfg.max_order))
            if stage.incomplete:
                print("incomplete orders: %s" % sorted(stage.incomplete))
            return 0

        sets = run_sets(cfg, stage, manifest)
        if args.stage == "sets":
            print("sets: %d records" % sum(len(v) for v in sets.values()))
            return 0

        rows = run_graphs(cfg, stage, sets, manifest)
        if args.stage == "graphs":
            print("graphs: %d after isomorphism reduction" % len(rows))
            return 0

        run_stats(cfg, rows, manifest)
        print("stats written for valency %d" % cfg.valency)
        return 0
    except (PipelineError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
