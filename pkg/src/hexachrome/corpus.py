"""Isomorph-free enumeration of small graphs and the fuzzing corpus.

Canonical labeling is individualization-refinement: refine to an equitable
ordered partition, branch on the first non-singleton cell, keep the largest
adjacency code over all leaves. Branches on twin vertices are skipped since
swapping twins is an automorphism that fixes the current partition.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Iterator

from . import atlas
from .formats import write_graph6
from .graph import Graph, bits, induced_subgraph, substitute_independent_sets, to_mask
from .recognition import ClassReport, Pattern, classify, find_induced

EXHAUSTIVE_MAX = 8


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [to_mask(c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def canonical_labeling(g: Graph) -> list[int]:
    """``order[i]`` is the original vertex placed at position ``i`` in the canonical form."""
    masks = g.masks
    best_code = None
    best_order: list[int] = []

    def code_of(order: list[int]) -> tuple[int, ...]:
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        return tuple(to_mask(pos[u] for u in bits(masks[v])) for v in order)

    def search(cells: list[list[int]]):
        nonlocal best_code, best_order
        cells = _refine(masks, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            code = code_of(order)
            if best_code is None or code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if any((masks[v] & ~(1 << u)) == (masks[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    if g.n:
        search([list(range(g.n))])
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return Graph.from_masks(to_mask(pos[u] for u in bits(g.mask(v))) for v in order)


def canonical_graph6(g: Graph) -> str:
    return write_graph6(canonical_form(g))


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, canonical and sorted by graph6."""
    if n == 0:
        return (Graph(0),)
    found: dict[str, Graph] = {}
    for h in _all_graphs(n - 1):
        # Every graph arises by adding a minimum-degree vertex to a smaller one,
        # so the new vertex's degree may not exceed any resulting degree.
        degs = [h.degree(v) for v in range(n - 1)]
        for nb in range(1 << (n - 1)):
            d = nb.bit_count()
            if any(d > degs[u] + (nb >> u & 1) for u in range(n - 1)):
                continue
            masks = [m | ((nb >> u & 1) << (n - 1)) for u, m in enumerate(h.masks)] + [nb]
            cf = canonical_form(Graph.from_masks(masks))
            key = write_graph6(cf)
            if key not in found:
                found[key] = cf
    return tuple(found[k] for k in sorted(found))


def all_graphs(n: int) -> list[Graph]:
    return list(_all_graphs(n))


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in _all_graphs(n) if g.is_connected()]


@dataclass
class CorpusItem:
    graph: Graph
    report: ClassReport
    source: str

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph)


_P6_CLASS = (Pattern.P6, Pattern.DIAMOND, Pattern.K4)
_P2P3_CLASS = (Pattern.P2uP3, Pattern.DIAMOND, Pattern.K4)


def _free_of(g: Graph, patterns) -> bool:
    return all(find_induced(g, p) is None for p in patterns)


def _grow(rng: random.Random, n: int, patterns, attempts: int = 40) -> Graph | None:
    """Add vertices one at a time with random neighborhoods, rejecting any step
    that leaves the class; the class is hereditary so every member is reachable."""
    g = rng.choice([atlas.bull(), atlas.cycle(5), atlas.complete(3), atlas.path(2)])
    if not _free_of(g, patterns):
        return None
    while g.n < n:
        density = rng.uniform(0.1, 0.6)
        for _ in range(attempts):
            nb = [v for v in range(g.n) if rng.random() < density]
            if not nb:
                nb = [rng.randrange(g.n)]
            nbm = to_mask(nb)
            cand = Graph.from_masks([m | ((nbm >> v & 1) << g.n) for v, m in enumerate(g.masks)] + [nbm])
            if _free_of(cand, patterns):
                g = cand
                break
        else:
            return None
    return g


_DUP_BASES = ("cycle(5)", "bull", "grotzsch", "petersen", "cycle(4)", "path(4)", "star(3)")
_SUB_BASES = ("schlafli_complement", "clebsch", "grotzsch")


def _duplicate(rng: random.Random, n: int) -> Graph | None:
    base = atlas.named_graph(rng.choice(_DUP_BASES))
    if base.n > n:
        return None
    eligible = [v for v in range(base.n) if base.is_independent(bits(base.mask(v)))]
    if not eligible:
        return None
    mult: dict[int, int] = {}
    for _ in range(n - base.n):
        v = rng.choice(eligible)
        mult[v] = mult.get(v, 1) + 1
    return substitute_independent_sets(base, mult)


def _random_induced(rng: random.Random, n: int) -> Graph | None:
    base = atlas.named_graph(rng.choice(_SUB_BASES))
    if base.n < n:
        return None
    return induced_subgraph(base, rng.sample(range(base.n), n))


def sample_graph(seed: int, index: int, n_lo: int, n_hi: int) -> tuple[Graph, str] | None:
    """The ``index``-th sampled corpus member for ``seed``; None when the draw was rejected."""
    rng = random.Random(f"hexachrome:{seed}:{index}")
    n = rng.randint(n_lo, n_hi)
    kind = index % 4
    if kind == 0:
        return _maybe(_grow(rng, n, _P6_CLASS), "grown-p6")
    if kind == 1:
        return _maybe(_grow(rng, n, _P2P3_CLASS), "grown-p2p3")
    if kind == 2:
        return _maybe(_duplicate(rng, n), "duplicated")
    return _maybe(_random_induced(rng, n), "induced")


def _maybe(g, source):
    return None if g is None else (g, source)


def corpus(seed: int = 0, n_max: int = EXHAUSTIVE_MAX, samples: int | None = None,
           n_min_sampled: int | None = None) -> Iterator[CorpusItem]:
    """Deterministic stream of graphs with classification reports.

    First every connected graph on ``1..min(n_max, 8)`` vertices (all of them,
    members of the target classes or not), then ``samples`` sampled class
    members with ``n_min_sampled..n_max`` vertices. Sampled members are kept
    only if they are (P6, diamond, K4)-free.
    """
    for n in range(1, min(n_max, EXHAUSTIVE_MAX) + 1):
        for g in connected_graphs(n):
            yield CorpusItem(g, classify(g), "exhaustive")
    if samples is None:
        samples = 0 if n_max <= EXHAUSTIVE_MAX else 64
    n_lo = n_min_sampled if n_min_sampled is not None else min(n_max, EXHAUSTIVE_MAX + 1)
    n_lo = max(1, min(n_lo, n_max))
    emitted = index = 0
    while emitted < samples and index < 50 * samples + 100:
        drawn = sample_graph(seed, index, n_lo, n_max)
        index += 1
        if drawn is None:
            continue
        g, source = drawn
        report = classify(g)
        if not report.in_p6_class:
            continue
        emitted += 1
        yield CorpusItem(g, report, source)
