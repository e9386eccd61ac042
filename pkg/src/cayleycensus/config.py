"""Census configuration: line-oriented key=value files with CLI overrides."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .valence import ValencyPair, sigma


class ConfigError(ValueError):
    pass


KNOWN_KEYS = {
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
}

MODES = ("extend", "ingest", "both")
GENERATORS = ("orderly", "ordered")


@dataclass(frozen=True)
class CensusConfig:
    valency: int = 3
    max_order: int = 16
    pairs: tuple = ()  # empty means all of Sigma_k
    mode: str = "extend"
    generator: str = "orderly"
    dim_bound: int = 2
    seeds: Optional[str] = None  # group-file with trivial-radical seed groups
    corpus: Optional[str] = None  # group-file corpus for ingest mode
    threads: int = 1
    seed_rng: int = 190523
    out: str = "out"

    def resolved_pairs(self):
        if self.pairs:
            return self.pairs
        return sigma(self.valency).pairs

    def validate(self):
        if self.valency < 1:
            raise ConfigError("valency must be at least 1")
        if self.max_order < 1:
            raise ConfigError("max_order must be at least 1")
        if self.mode not in MODES:
            raise ConfigError("mode must be one of %s" % (MODES,))
        if self.generator not in GENERATORS:
            raise ConfigError("generator must be one of %s" % (GENERATORS,))
        if self.dim_bound < 1:
            raise ConfigError("dim_bound must be at least 1")
        if self.threads < 1:
            raise ConfigError("threads must be at least 1")
        if self.mode in ("ingest", "both") and not self.corpus:
            raise ConfigError("ingest mode requires a corpus file")
        for pair in self.pairs:
            if pair.k != self.valency:
                raise ConfigError("pair %s does not match valency %d" % (pair, self.valency))
        return self


def parse_pairs(text: str):
    """Parse 'a:b,a:b' into ValencyPair tuples."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a, b = chunk.split(":")
            out.append(ValencyPair(int(a), int(b)))
        except (ValueError, TypeError) as exc:
            raise ConfigError("bad pair %r (expected a:b)" % chunk) from exc
    return tuple(out)


def load_config(path) -> CensusConfig:
    cfg = CensusConfig()
    text = Path(path).read_text(encoding="utf-8")
    updates = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError("line %d: expected key=value" % lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigError("line %d: unknown key %r" % (lineno, key))
        updates[key] = value
    return apply_overrides(cfg, updates)


def apply_overrides(cfg: CensusConfig, updates: dict) -> CensusConfig:
    converted = {}
    for key, value in updates.items():
        if value is None:
            continue
        if key in ("valency", "max_order", "dim_bound", "threads", "seed_rng"):
            converted[key] = int(value)
        elif key == "pairs":
            converted[key] = parse_pairs(value) if isinstance(value, str) else tuple(value)
        elif key in ("mode", "generator", "seeds", "corpus", "out"):
            converted[key] = str(value)
        else:
            raise ConfigError("unknown key %r" % key)
    return replace(cfg, **converted).validate()
