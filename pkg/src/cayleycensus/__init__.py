"""Census engine for small k-valent Cayley graphs.

Library entry points mirror the pipeline stages; see the README for the
command line.
"""

__version__ = "0.1.0"

from .config import CensusConfig, apply_overrides, load_config
from .pipeline import run_all, run_graphs, run_groups, run_sets, run_stats, verify

__all__ = [
    "CensusConfig",
    "apply_overrides",
    "load_config",
    "run_all",
    "run_graphs",
    "run_groups",
    "run_sets",
    "run_stats",
    "verify",
]
