"""Exact desk-scale ground truth: colorability, chromatic number, maximum clique.

All colorings are lists indexed by vertex with colors starting at 1.
Searches that exceed their time budget raise :class:`OracleUndecided`
instead of returning a guess.
"""

from __future__ import annotations

import os
import time
from typing import Mapping, Sequence

from .errors import OracleUndecided, PreconditionError
from .graph import Graph, bits

DEFAULT_BUDGET_MS = 120_000


def default_budget_ms() -> int:
    raw = os.environ.get("HEXACHROME_BUDGET_MS")
    return int(raw) if raw else DEFAULT_BUDGET_MS


class _Clock:
    __slots__ = ("deadline", "budget_ms", "ticks", "what")

    def __init__(self, budget_ms: int | None, what: str):
        self.budget_ms = default_budget_ms() if budget_ms is None else budget_ms
        self.deadline = time.monotonic() + self.budget_ms / 1000.0
        self.ticks = 0
        self.what = what

    def tick(self):
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise OracleUndecided(self.what, self.budget_ms)


def verify_coloring(
    g: Graph, coloring: Sequence[int] | Mapping[int, int]
) -> tuple[bool, tuple[int, int] | None]:
    """Check properness; returns ``(True, None)`` or ``(False, first_bad_edge)``.

    Raises :class:`PreconditionError` when some vertex has no color.
    """
    if isinstance(coloring, Mapping):
        missing = [v for v in range(g.n) if v not in coloring]
        colors = [coloring.get(v) for v in range(g.n)]
    else:
        colors = list(coloring)
        missing = list(range(len(colors), g.n))
        if len(colors) > g.n:
            raise PreconditionError(f"coloring has {len(colors)} entries for {g.n} vertices")
    if missing:
        raise PreconditionError(f"coloring is partial; first uncolored vertex {missing[0]}")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return False, (u, v)
    return True, None


def max_clique(g: Graph, budget_ms: int | None = None) -> list[int]:
    """A maximum clique, sorted; branch and bound with a greedy-coloring bound."""
    clock = _Clock(budget_ms, "max_clique")
    masks = g.masks
    best: list[int] = []

    def color_order(p: int) -> list[tuple[int, int]]:
        # Greedy sequential coloring of P; returns (vertex, color bound) ascending by bound.
        out = []
        color = 0
        rest = p
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~masks[v] & ~(1 << v)
                rest &= ~(1 << v)
                out.append((v, color))
        return out

    def expand(r: list[int], p: int):
        nonlocal best
        clock.tick()
        order = color_order(p)
        for v, c in reversed(order):
            if len(r) + c <= len(best):
                return
            r.append(v)
            sub = p & masks[v]
            if sub:
                expand(r, sub)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    if g.n:
        expand([], g.full_mask)
    return sorted(best)


def clique_number(g: Graph, budget_ms: int | None = None) -> int:
    return len(max_clique(g, budget_ms))


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [0] * n
    sat = [0] * n
    uncolored = g.full_mask
    for _ in range(n):
        v = max(bits(uncolored), key=lambda u: (sat[u].bit_count(), (g.mask(u) & uncolored).bit_count(), -u))
        c = 1
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in bits(g.mask(v)):
            sat[u] |= 1 << c
    return colors


def _k_color_search(g: Graph, k: int, seed: list[int], clock: _Clock) -> list[int] | None:
    n = g.n
    masks = g.masks
    colors = [0] * n
    counts = [[0] * (k + 1) for _ in range(n)]
    sat = [0] * n
    full = ((1 << k) - 1) << 1
    uncolored = g.full_mask

    def assign(v: int, c: int) -> bool:
        """Color v; False if some uncolored neighbor is left with no color."""
        nonlocal uncolored
        colors[v] = c
        uncolored &= ~(1 << v)
        ok = True
        for u in bits(masks[v]):
            cu = counts[u]
            cu[c] += 1
            if cu[c] == 1:
                sat[u] |= 1 << c
                if sat[u] == full and uncolored >> u & 1:
                    ok = False
        return ok

    def unassign(v: int, c: int):
        nonlocal uncolored
        colors[v] = 0
        uncolored |= 1 << v
        for u in bits(masks[v]):
            cu = counts[u]
            cu[c] -= 1
            if cu[c] == 0:
                sat[u] &= ~(1 << c)

    for i, v in enumerate(seed):
        if not assign(v, i + 1):
            return None

    def pick() -> int:
        best_v = -1
        best_key = None
        for u in bits(uncolored):
            key = (sat[u].bit_count(), (masks[u] & uncolored).bit_count())
            if best_key is None or key > best_key:
                best_key, best_v = key, u
        return best_v

    def rec(maxc: int) -> bool:
        if not uncolored:
            return True
        clock.tick()
        v = pick()
        # symmetry breaking: a fresh color is only ever the next unused one
        limit = min(maxc + 1, k)
        avail = ~sat[v] & (((1 << limit) - 1) << 1)
        for c in bits(avail):
            if assign(v, c) and rec(max(maxc, c)):
                return True
            unassign(v, c)
        return False

    if rec(len(seed)):
        return list(colors)
    return None


def is_k_colorable(g: Graph, k: int, budget_ms: int | None = None) -> list[int] | None:
    """A proper coloring with colors in 1..k, or None if none exists.

    Exhaustive DSATUR backtracking; a maximum clique is pre-colored 1..|Q| to
    break color symmetry.
    """
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    if g.n == 0:
        return []
    if k == 0:
        return None
    clock = _Clock(budget_ms, f"{k}-colorability")
    seed = max_clique(g, budget_ms)
    if len(seed) > k:
        return None
    result = _k_color_search(g, k, seed, clock)
    if result is not None:
        ok, edge = verify_coloring(g, result)
        assert ok, f"oracle produced an improper coloring at {edge}"
    return result


def optimal_coloring(g: Graph, budget_ms: int | None = None) -> list[int]:
    """A proper coloring with exactly χ(g) colors."""
    if g.n == 0:
        return []
    lower = clique_number(g, budget_ms)
    greedy = _dsatur_greedy(g)
    upper = max(greedy)
    for k in range(lower, upper):
        found = is_k_colorable(g, k, budget_ms)
        if found is not None:
            return found
    return greedy


def chromatic_number(g: Graph, budget_ms: int | None = None) -> int:
    col = optimal_coloring(g, budget_ms)
    return len(set(col))
