"""Induced-pattern detection, distance layers and domination tests.

Every pattern has a fixed reference labeling. A witness is the tuple of host
vertices ``(w_0, ..., w_{k-1})`` such that ``i -> w_i`` is an isomorphism
from the pattern onto the induced subgraph; searches return witnesses in
lexicographic order, so the first one found is the smallest.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import PreconditionError
from .graph import Graph, bits, substitute_independent_sets, to_mask


class Pattern(str, enum.Enum):
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P2uP3 = "P2uP3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    K3 = "K3"
    K4 = "K4"
    DIAMOND = "DIAMOND"
    BULL = "BULL"


def _path(k):
    return [(i, i + 1) for i in range(k - 1)]


def _cycle(k):
    return _path(k) + [(0, k - 1)]


# Vertex orders are chosen so every vertex after the first of a connected
# pattern has an earlier neighbor; that keeps the candidate sets small.
PATTERN_EDGES: dict[Pattern, tuple[int, list[tuple[int, int]]]] = {
    Pattern.P2: (2, _path(2)),
    Pattern.P3: (3, _path(3)),
    Pattern.P4: (4, _path(4)),
    Pattern.P5: (5, _path(5)),
    Pattern.P6: (6, _path(6)),
    Pattern.P2uP3: (5, [(0, 1), (2, 3), (3, 4)]),
    Pattern.C4: (4, _cycle(4)),
    Pattern.C5: (5, _cycle(5)),
    Pattern.C6: (6, _cycle(6)),
    Pattern.K3: (3, [(0, 1), (0, 2), (1, 2)]),
    Pattern.K4: (4, list(itertools.combinations(range(4), 2))),
    # a, b, c, d with edges ab, bc, cd, ad, bd (a and c nonadjacent)
    Pattern.DIAMOND: (4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]),
    # v1..v5 with edges v1v2, v2v3, v3v4, v2v5, v3v5
    Pattern.BULL: (5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
}


def pattern_graph(p: Pattern | str) -> Graph:
    k, edges = PATTERN_EDGES[Pattern(p)]
    return Graph(k, edges)


@dataclass(frozen=True)
class Witness:
    pattern: Pattern
    vertices: tuple[int, ...]

    def to_list(self) -> list[int]:
        return list(self.vertices)


def iter_induced(g: Graph, p: Pattern | str) -> Iterator[Witness]:
    """All induced copies of ``p`` as witnesses, in lexicographic order.

    Each copy appears once per automorphism of the pattern.
    """
    p = Pattern(p)
    k, edges = PATTERN_EDGES[p]
    padj = [0] * k
    for a, b in edges:
        padj[a] |= 1 << b
        padj[b] |= 1 << a
    pdeg = [m.bit_count() for m in padj]
    masks = g.masks
    eligible = [to_mask(v for v in range(g.n) if masks[v].bit_count() >= d) for d in pdeg]
    chosen = [0] * k

    def extend(i: int, cand_base: int) -> Iterator[tuple[int, ...]]:
        cand = cand_base & eligible[i]
        for j in range(i):
            if padj[i] >> j & 1:
                cand &= masks[chosen[j]]
            else:
                cand &= ~masks[chosen[j]]
        for v in bits(cand):
            chosen[i] = v
            if i + 1 == k:
                yield tuple(chosen)
            else:
                yield from extend(i + 1, cand_base & ~(1 << v))

    for tup in extend(0, g.full_mask):
        yield Witness(p, tup)


def find_induced(g: Graph, p: Pattern | str) -> Witness | None:
    """Lexicographically smallest witness of an induced ``p``, or None if ``g`` is p-free."""
    return next(iter_induced(g, p), None)


def find_induced_bruteforce(g: Graph, p: Pattern | str) -> Witness | None:
    """Reference search by plain enumeration of vertex subsets and bijections.

    Deliberately shares nothing with :func:`iter_induced`; used as a test oracle.
    """
    p = Pattern(p)
    k, edges = PATTERN_EDGES[p]
    want = {frozenset(e) for e in edges}
    want_degs = sorted(sum(1 for e in edges if i in e) for i in range(k))
    best = None
    for subset in itertools.combinations(range(g.n), k):
        sub_edges = {frozenset((a, b)) for a, b in itertools.combinations(subset, 2) if g.has_edge(a, b)}
        if len(sub_edges) != len(want):
            continue
        if sorted(sum(1 for e in sub_edges if v in e) for v in subset) != want_degs:
            continue
        for perm in itertools.permutations(subset):
            if all((frozenset((perm[a], perm[b])) in sub_edges) == (frozenset((a, b)) in want)
                   for a, b in itertools.combinations(range(k), 2)):
                if best is None or perm < best:
                    best = perm
    return None if best is None else Witness(p, tuple(best))


CLASS_FLAGS = {
    "p6_free": Pattern.P6,
    "p2up3_free": Pattern.P2uP3,
    "diamond_free": Pattern.DIAMOND,
    "k4_free": Pattern.K4,
    "bull_free": Pattern.BULL,
    "c5_free": Pattern.C5,
}


@dataclass
class ClassReport:
    """Freeness flags for the patterns the coloring theorems depend on."""

    n: int
    m: int
    connected: bool
    witnesses: dict[str, Witness | None] = field(default_factory=dict)

    def free(self, flag: str) -> bool:
        return self.witnesses[flag] is None

    def __getattr__(self, name):
        if name in CLASS_FLAGS:
            return self.witnesses[name] is None
        raise AttributeError(name)

    @property
    def in_p6_class(self) -> bool:
        """(P6, diamond, K4)-free."""
        return self.free("p6_free") and self.free("diamond_free") and self.free("k4_free")

    @property
    def in_p2p3_class(self) -> bool:
        """(P2 ∪ P3, diamond, K4)-free."""
        return self.free("p2up3_free") and self.free("diamond_free") and self.free("k4_free")

    @property
    def diamond_k4_free(self) -> bool:
        return self.free("diamond_free") and self.free("k4_free")

    def to_dict(self) -> dict:
        out = {"n": self.n, "m": self.m, "connected": self.connected}
        for flag in CLASS_FLAGS:
            out[flag] = self.free(flag)
        out["witnesses"] = {
            flag: w.to_list() for flag, w in self.witnesses.items() if w is not None
        }
        return out


def classify(g: Graph) -> ClassReport:
    report = ClassReport(n=g.n, m=g.m, connected=g.is_connected())
    for flag, pat in CLASS_FLAGS.items():
        report.witnesses[flag] = find_induced(g, pat)
    return report


@dataclass(frozen=True)
class LevelDecomposition:
    """Distance layers from a base set: ``layers[j-1]`` holds the vertices at distance j."""

    base: frozenset[int]
    layers: tuple[frozenset[int], ...]

    def layer(self, j: int) -> frozenset[int]:
        if j == 0:
            return self.base
        return self.layers[j - 1] if j <= len(self.layers) else frozenset()


def bfs_levels(g: Graph, base: Iterable[int]) -> LevelDecomposition:
    base_mask = to_mask(base)
    if not base_mask:
        raise PreconditionError("base set must be nonempty")
    if base_mask >> g.n:
        raise PreconditionError("base set has vertices outside the graph")
    seen = frontier = base_mask
    layers = []
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.mask(v)
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        layers.append(frozenset(bits(frontier)))
    missing = g.full_mask & ~seen
    if missing:
        v = (missing & -missing).bit_length() - 1
        raise PreconditionError(f"vertex {v} is unreachable from the base set (graph not connected)")
    return LevelDecomposition(frozenset(bits(base_mask)), tuple(layers))


def dominates(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every vertex is in the set or adjacent to it."""
    s = to_mask(vertices)
    cover = s
    for v in bits(s):
        cover |= g.mask(v)
    return cover == g.full_mask


def find_triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for a in range(g.n):
        up_a = g.mask(a) >> (a + 1) << (a + 1)
        for b in bits(up_a):
            for c in bits(up_a & g.mask(b) >> (b + 1) << (b + 1)):
                yield a, b, c


def find_nondominating_triangle(g: Graph) -> tuple[int, int, int] | None:
    for t in find_triangles(g):
        if not dominates(g, t):
            return t
    return None


def find_bulls(g: Graph) -> Iterator[Witness]:
    """Bull witnesses ordered (v1, v2, v3, v4, v5): path v1-v2-v3-v4, v5 on v2 and v3."""
    return iter_induced(g, Pattern.BULL)


def find_c5(g: Graph) -> Witness | None:
    return find_induced(g, Pattern.C5)


# Preliminary rules that hold in every (diamond, K4)-free graph. Each check
# returns a list of human-readable violations; empty means the rule holds.


def check_r1(g: Graph) -> list[str]:
    """A vertex outside a triangle has at most one neighbor in it."""
    out = []
    for t in find_triangles(g):
        tm = to_mask(t)
        for v in range(g.n):
            if not tm >> v & 1 and (g.mask(v) & tm).bit_count() > 1:
                out.append(f"R1: vertex {v} has >1 neighbor in triangle {t}")
    return out


def check_r2(g: Graph) -> list[str]:
    """Every neighborhood induces a graph of maximum degree at most one."""
    out = []
    for v in range(g.n):
        nv = g.mask(v)
        for u in bits(nv):
            if (g.mask(u) & nv).bit_count() > 1:
                out.append(f"R2: N({v}) has vertex {u} of degree >1")
    return out


def check_r3_r4(g: Graph) -> list[str]:
    """Nonadjacent pairs have independent common neighborhoods; adjacent pairs share at most one."""
    out = []
    for x, y in itertools.combinations(range(g.n), 2):
        common = g.mask(x) & g.mask(y)
        if g.has_edge(x, y):
            if common.bit_count() > 1:
                out.append(f"R4: adjacent {x},{y} have {common.bit_count()} common neighbors")
        elif not g.is_independent(bits(common)):
            out.append(f"R3: common neighbors of nonadjacent {x},{y} are not independent")
    return out


def independent_neighborhood_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.is_independent(bits(g.mask(v)))]


def check_r5(g: Graph, multiplicities: dict[int, int]) -> list[str]:
    """Duplicating vertices with independent neighborhoods keeps a diamond-free graph diamond-free."""
    if find_induced(g, Pattern.DIAMOND) is not None:
        return []
    bad = [v for v in multiplicities if multiplicities[v] > 1 and not g.is_independent(bits(g.mask(v)))]
    if bad:
        raise PreconditionError(f"vertices {bad} do not have independent neighborhoods")
    h = substitute_independent_sets(g, multiplicities)
    w = find_induced(h, Pattern.DIAMOND)
    return [] if w is None else [f"R5: duplication {multiplicities} created diamond {w.vertices}"]
