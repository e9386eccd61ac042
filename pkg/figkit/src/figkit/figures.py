"""Figure families over the tidy stats CSV (series,param,order,value).

Seven families: cumulative counts, GRR proportion, GRR parity split,
arc-transitive proportion, stabilizer ratio a(n,s), girth density, and the
bipartite proportion.  Rendering is deterministic: fixed style, a pinned
svg hash salt, and no timestamps, so re-rendering the same CSV gives
byte-identical files.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

plt.rcParams.update(
    {
        "svg.hashsalt": "figkit",
        "figure.figsize": (6.0, 4.0),
        "figure.dpi": 100,
        "font.size": 10,
    }
)


class FigureError(ValueError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    family: str
    stats_csv: Path
    out_path: Path
    image_format: str = "svg"
    selectors: tuple = field(default=())


# family -> (series name, parameter values or None, y label, title)
FAMILIES = {
    "counts": ("cum_count", None, "graphs", "Cumulative number of Cayley graphs"),
    "grr": ("cum_grr_prop", None, "proportion", "Cumulative proportion of GRRs"),
    "grr_parity": (
        "cum_grr_prop_parity",
        ("odd", "even"),
        "proportion",
        "GRR proportion by order parity",
    ),
    "at": (
        "cum_at_prop",
        None,
        "proportion",
        "Cumulative proportion of arc-transitive graphs",
    ),
    "stab_ratio": (
        "stab_ratio",
        ("1", "2", "3", "4", "5"),
        "a(n,s)",
        "Stabilizer ratio a(n,s)",
    ),
    "girth_density": (
        "girth_density",
        tuple(str(g) for g in range(3, 11)),
        "density",
        "Girth density |O(k,g) n {1..n}| / n",
    ),
    "bipartite": (
        "cum_bip_prop_even",
        None,
        "proportion",
        "Bipartite proportion over even orders",
    ),
}


def load_series(stats_csv: Path):
    """(series, param) -> sorted [(order, value)] from a tidy stats CSV."""
    table: dict[tuple, list] = {}
    with open(stats_csv, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["series", "param", "order", "value"]:
            raise FigureError(
                "stats CSV must have columns series,param,order,value; got %r" % header
            )
        for series, param, order, value in reader:
            table.setdefault((series, param), []).append((int(order), float(value)))
    for points in table.values():
        points.sort()
    return table


def render(spec: FigureSpec) -> Path:
    """Render one figure family; returns the written path."""
    if spec.family not in FAMILIES:
        raise FigureError("unknown family %r" % spec.family)
    series_name, params, ylabel, title = FAMILIES[spec.family]
    table = load_series(Path(spec.stats_csv))

    wanted = spec.selectors or params or ("",)
    plotted = 0
    fig, ax = plt.subplots()
    try:
        for param in wanted:
            points = table.get((series_name, param), [])
            if not points:
                continue  # empty sub-series are legal (e.g. odd cubic orders)
            xs = [n for n, _ in points]
            ys = [v for _, v in points]
            label = "%s=%s" % (series_name, param) if param else series_name
            ax.plot(xs, ys, marker=".", linewidth=1.0, label=label)
            plotted += 1
        if not plotted:
            raise FigureError(
                "family %r has no data in %s" % (spec.family, spec.stats_csv)
            )
        ax.set_xlabel("order")
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        if plotted > 1 or (params and len(wanted) > 1):
            ax.legend(fontsize=8)
        out = Path(spec.out_path)
        out.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out, format=spec.image_format, metadata=_no_date(spec.image_format))
        return out
    finally:
        plt.close(fig)


def _no_date(image_format: str):
    if image_format == "svg":
        return {"Date": None}
    return None


def render_all(stats_csv, out_dir, families=None, image_format="svg"):
    """Render every requested family; returns the written paths."""
    chosen = list(families) if families else list(FAMILIES)
    unknown = [f for f in chosen if f not in FAMILIES]
    if unknown:
        raise FigureError("unknown families: %s" % ", ".join(unknown))
    written = []
    for family in chosen:
        out = Path(out_dir) / ("%s.%s" % (family, image_format))
        written.append(
            render(FigureSpec(family, Path(stats_csv), out, image_format))
        )
    return written
