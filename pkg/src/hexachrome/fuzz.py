"""Corpus-driven checks of the coloring procedures against the exact oracle."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .corpus import CorpusItem, corpus
from .engine import color_p2p3, color_p6
from .errors import HexachromeError
from .formats import write_graph6
from .oracle import chromatic_number, verify_coloring
from .recognition import (check_r1, check_r2, check_r3_r4, check_r5,
                          find_nondominating_triangle, independent_neighborhood_vertices)

ORACLE_N_MAX = 20
SCHEMA_VERSION = 1


def check_item(index: int, item: CorpusItem, seed: int = 0) -> dict:
    """Run every applicable check on one corpus graph; never raises for graph-level failures."""
    g, report = item.graph, item.report
    out = {
        "index": index,
        "graph6": write_graph6(g),
        "source": item.source,
        "n": g.n,
        "p6_class": report.in_p6_class,
        "p2p3_class": report.in_p2p3_class,
        "diamond_k4_free": report.diamond_k4_free,
        "bull_free": report.free("bull_free"),
        "violations": [],
    }
    bad = out["violations"]

    if report.diamond_k4_free:
        bad.extend(check_r1(g) + check_r2(g) + check_r3_r4(g))
        eligible = independent_neighborhood_vertices(g)
        if eligible:
            rng = random.Random(f"r5:{seed}:{index}")
            mult = {v: rng.randint(1, 3) for v in eligible}
            bad.extend(check_r5(g, mult))

    chi = None
    if report.in_p6_class:
        try:
            res = color_p6(g)
            out["colors_p6"] = res.colors_used
            out["bound_p6"] = res.bound
            out["theorems_p6"] = sorted({f"{t.theorem}/{t.case}" for t in res.traces})
            bad.extend(_soundness(g, res.coloring, res.colors_used, res.bound, "color_p6"))
            if res.colors_used > 6:
                bad.append(f"color_p6 used {res.colors_used} > 6 colors")
            if out["bull_free"] and res.colors_used > 4:
                bad.append(f"color_p6 used {res.colors_used} > 4 colors on a bull-free graph")
            if g.n <= ORACLE_N_MAX:
                chi = chromatic_number(g)
                out["chi"] = chi
                if not chi <= res.colors_used <= res.bound:
                    bad.append(f"sandwich failed: chi={chi}, used={res.colors_used}, bound={res.bound}")
        except HexachromeError as exc:
            bad.append(f"color_p6 raised {type(exc).__name__}: {exc}")

    if report.in_p2p3_class:
        try:
            res = color_p2p3(g)
            out["colors_p2p3"] = res.colors_used
            out["nondominating_triangle"] = find_nondominating_triangle(g) is not None
            bad.extend(_soundness(g, res.coloring, res.colors_used, res.bound, "color_p2p3"))
            if res.colors_used > 6:
                bad.append(f"color_p2p3 used {res.colors_used} > 6 colors")
            for t in res.traces:
                if t.theorem == "thm1" and len({c.color for c in t.classes if c.vertices}) > 4:
                    bad.append("color_p2p3 used more than 4 colors on a component with a non-dominating triangle")
            if out["nondominating_triangle"] and report.connected and res.colors_used > 4:
                bad.append(f"color_p2p3 used {res.colors_used} > 4 colors despite a non-dominating triangle")
            if g.n <= ORACLE_N_MAX:
                if chi is None:
                    chi = chromatic_number(g)
                    out["chi"] = chi
                if not chi <= res.colors_used <= res.bound:
                    bad.append(f"p2p3 sandwich failed: chi={chi}, used={res.colors_used}, bound={res.bound}")
        except HexachromeError as exc:
            bad.append(f"color_p2p3 raised {type(exc).__name__}: {exc}")
    return out


def _soundness(g, coloring, used, bound, who) -> list[str]:
    ok, edge = verify_coloring(g, coloring)
    out = []
    if not ok:
        out.append(f"{who} produced an improper coloring at edge {edge}")
    if used > bound:
        out.append(f"{who} used {used} colors above its bound {bound}")
    return out


def _check_packed(args):
    return check_item(*args)


def run_checks(items: Iterable[CorpusItem], seed: int = 0, jobs: int = 1) -> list[dict]:
    """Check items in order; results are ordered by index whatever ``jobs`` is."""
    work = ((i, item, seed) for i, item in enumerate(items))
    if jobs <= 1:
        return [check_item(*w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_packed, work, chunksize=32))


def summarize(results: list[dict], **header) -> dict:
    p6 = [r for r in results if r["p6_class"]]
    p2p3 = [r for r in results if r["p2p3_class"]]
    gaps = Counter(r["colors_p6"] - r["chi"] for r in p6 if "chi" in r and "colors_p6" in r)
    violations = [
        {"index": r["index"], "graph6": r["graph6"], "message": msg}
        for r in results for msg in r["violations"]
    ]

    def top(rows, key, pred=lambda r: True):
        vals = [r[key] for r in rows if key in r and pred(r)]
        return max(vals) if vals else None

    return {
        "schema_version": SCHEMA_VERSION,
        "command": "fuzz",
        **header,
        "trials": len(results),
        "class_members": {
            "p6": len(p6),
            "p6_bull_free": sum(1 for r in p6 if r["bull_free"]),
            "p2p3": len(p2p3),
            "diamond_k4_free": sum(1 for r in results if r["diamond_k4_free"]),
        },
        "max_colors": {
            "p6": top(p6, "colors_p6"),
            "p6_bull_free": top(p6, "colors_p6", lambda r: r["bull_free"]),
            "p2p3": top(p2p3, "colors_p2p3"),
            "p2p3_nondominating": top(p2p3, "colors_p2p3", lambda r: r.get("nondominating_triangle")),
        },
        "oracle_checked": sum(1 for r in results if "chi" in r),
        "gap_histogram": {str(k): gaps[k] for k in sorted(gaps)},
        "violation_count": len(violations),
        "violations": violations[:50],
    }


def fuzz(seed: int = 0, n_max: int = 8, trials: int | None = None, jobs: int = 1,
         samples: int | None = None) -> dict:
    items = corpus(seed, n_max, samples)
    if trials is not None:
        items = itertools.islice(items, trials)
    results = run_checks(items, seed, jobs)
    return summarize(results, seed=seed, n_max=n_max)


__all__ = ["check_item", "run_checks", "summarize", "fuzz", "ORACLE_N_MAX"]
