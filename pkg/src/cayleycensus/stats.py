"""Census statistics: per-order aggregates and the derived series.

The stats CSV is tidy: series,param,order,value.  Series:

  count / cum_count            graphs per order and cumulative
  grr / at / bip               per-order flag counts (bip at even orders)
  girth_hist (param g)         per-order girth histogram
  stab_hist (param s)          per-order vertex-stabilizer-order histogram
  cum_grr_prop                 cumulative GRR proportion
  cum_grr_prop_parity (odd|even)  the same split by order parity
  cum_at_prop                  cumulative arc-transitive proportion
  stab_ratio (param s)         a(n,s): among graphs of order <= n with
                               stabilizer order 2^t, t >= s, the fraction
                               with t = s exactly
  girth_density (param g)      |O(k,g) n {1..n}| / n
  cum_bip_prop_even            bipartite fraction among even-order graphs
  cage (param g)               n_c(k,g), least order with a girth-g graph
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import inf

STAB_RATIO_RANGE = range(1, 6)
GIRTH_DENSITY_RANGE = range(3, 11)


@dataclass(frozen=True)
class CensusRow:
    order: int
    valency: int
    group_id: str
    set_elems: tuple
    girth: object
    bipartite: bool
    aut_order: int
    stab_order: int
    grr: bool
    arc_transitive: bool
    cert_sha: str


CENSUS_COLUMNS = [
    "order",
    "valency",
    "group_id",
    "set_elems",
    "girth",
    "bipartite",
    "aut_order",
    "stab_order",
    "grr",
    "arc_transitive",
    "cert_sha",
]


def census_rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_COLUMNS)
    for r in rows:
        writer.writerow(
            [
                r.order,
                r.valency,
                r.group_id,
                ";".join(str(x) for x in r.set_elems),
                "inf" if r.girth is inf else r.girth,
                int(r.bipartite),
                r.aut_order,
                r.stab_order,
                int(r.grr),
                int(r.arc_transitive),
                r.cert_sha,
            ]
        )
    return buf.getvalue()


def census_rows_from_csv(text: str):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != CENSUS_COLUMNS:
        raise ValueError("unexpected census CSV header: %r" % header)
    rows = []
    for rec in reader:
        (order, valency, group_id, elems, girth_s, bip, aut, stab, grr, at, sha) = rec
        rows.append(
            CensusRow(
                order=int(order),
                valency=int(valency),
                group_id=group_id,
                set_elems=tuple(int(x) for x in elems.split(";")) if elems else (),
                girth=inf if girth_s == "inf" else int(girth_s),
                bipartite=bool(int(bip)),
                aut_order=int(aut),
                stab_order=int(stab),
                grr=bool(int(grr)),
                arc_transitive=bool(int(at)),
                cert_sha=sha,
            )
        )
    return rows


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return "%.10g" % value


def compute_stats_rows(rows, k: int, max_order: int):
    """Tidy (series, param, order, value) records for a census at valency k."""
    if any(r.valency != k for r in rows):
        raise ValueError("census rows with the wrong valency")
    if any(r.order > max_order for r in rows):
        raise ValueError("census rows beyond max_order")

    per_order: dict[int, list] = {n: [] for n in range(1, max_order + 1)}
    for r in rows:
        per_order[r.order].append(r)

    out = []
    cum = cum_grr = cum_at = 0
    cum_even = cum_bip_even = 0
    parity_cum = {0: 0, 1: 0}
    parity_grr = {0: 0, 1: 0}
    stab_cum: dict[int, int] = {}
    girth_orders: dict[int, set] = {g: set() for g in GIRTH_DENSITY_RANGE}
    cages: dict[int, int] = {}

    for n in range(1, max_order + 1):
        group = per_order[n]
        count = len(group)
        grr_n = sum(1 for r in group if r.grr)
        at_n = sum(1 for r in group if r.arc_transitive)
        out.append(("count", "", n, count))
        cum += count
        out.append(("cum_count", "", n, cum))
        out.append(("grr", "", n, grr_n))
        out.append(("at", "", n, at_n))
        cum_grr += grr_n
        cum_at += at_n
        if cum:
            out.append(("cum_grr_prop", "", n, cum_grr / cum))
            out.append(("cum_at_prop", "", n, cum_at / cum))
        parity = n % 2
        parity_cum[parity] += count
        parity_grr[parity] += grr_n
        if parity_cum[parity]:
            out.append(
                (
                    "cum_grr_prop_parity",
                    "odd" if parity else "even",
                    n,
                    parity_grr[parity] / parity_cum[parity],
                )
            )
        if parity == 0:
            bip_n = sum(1 for r in group if r.bipartite)
            out.append(("bip", "", n, bip_n))
            cum_even += count
            cum_bip_even += bip_n
            if cum_even:
                out.append(("cum_bip_prop_even", "", n, cum_bip_even / cum_even))

        girth_counts: dict[int, int] = {}
        for r in group:
            if r.girth is not inf:
                girth_counts[r.girth] = girth_counts.get(r.girth, 0) + 1
                if r.girth not in cages:
                    cages[r.girth] = n
                if r.girth in girth_orders:
                    girth_orders[r.girth].add(n)
        for g in sorted(girth_counts):
            out.append(("girth_hist", str(g), n, girth_counts[g]))
        for g in GIRTH_DENSITY_RANGE:
            out.append(("girth_density", str(g), n, len(girth_orders[g]) / n))

        stab_counts: dict[int, int] = {}
        for r in group:
            stab_counts[r.stab_order] = stab_counts.get(r.stab_order, 0) + 1
            stab_cum[r.stab_order] = stab_cum.get(r.stab_order, 0) + 1
        for s in sorted(stab_counts):
            out.append(("stab_hist", str(s), n, stab_counts[s]))

        # a(n, s): restrict to graphs whose stabilizer order is a power of two
        for s in STAB_RATIO_RANGE:
            pool = 0
            exact = 0
            for stab_order, cnt in stab_cum.items():
                t = _power_of_two_exponent(stab_order)
                if t is None or t < s:
                    continue
                pool += cnt
                if t == s:
                    exact += cnt
            if pool:
                out.append(("stab_ratio", str(s), n, exact / pool))

    for g in sorted(cages):
        out.append(("cage", str(g), cages[g], cages[g]))
    return out


def _power_of_two_exponent(value: int):
    if value < 1 or value & (value - 1):
        return None
    return value.bit_length() - 1


def stats_rows_to_csv(stat_rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["series", "param", "order", "value"])
    for series, param, order, value in stat_rows:
        writer.writerow([series, param, order, _fmt(value)])
    return buf.getvalue()


def cages_from_stats_csv(text: str):
    """girth -> cage order, parsed back from a stats CSV."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["series", "param", "order", "value"]:
        raise ValueError("unexpected stats CSV header")
    cages = {}
    for series, param, order, _value in reader:
        if series == "cage":
            cages[int(param)] = int(order)
    return cages
