"""Immutable simple graphs over dense integer vertices, plus constructions.

Adjacency is stored as one Python int per vertex used as a bit vector, so
neighborhood intersections and unions are single integer operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import PreconditionError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; two graphs compare equal when they
    are the same *labeled* graph.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        """Build from per-vertex neighbor bit masks (must be symmetric, loop-free)."""
        g = cls.__new__(cls)
        g._adj = tuple(masks)
        g._n = len(g._adj)
        g._hash = None
        for v, m in enumerate(g._adj):
            if m >> v & 1 or m >> g._n:
                raise PreconditionError(f"bad adjacency mask for vertex {v}")
            for u in bits(m):
                if not g._adj[u] >> v & 1:
                    raise PreconditionError(f"asymmetric adjacency {v}->{u}")
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def mask(self, v: int) -> int:
        """Neighbor bit mask of ``v``."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """N(X): vertices outside X adjacent to some vertex of X."""
        x = to_mask(vertices)
        acc = 0
        for v in bits(x):
            acc |= self._adj[v]
        return frozenset(bits(acc & ~x))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        x = to_mask(vertices)
        return all(not (self._adj[v] & x) for v in bits(x))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        x = to_mask(vertices)
        return all((self._adj[v] | 1 << v) & x == x for v in bits(x))

    def first_edge_between(self, s: Iterable[int], t: Iterable[int]) -> tuple[int, int] | None:
        """Smallest edge ``(u, v)`` with ``u`` in ``s`` and ``v`` in ``t``, if any."""
        tm = to_mask(t)
        for u in sorted(s):
            hit = self._adj[u] & tm
            if hit:
                return u, (hit & -hit).bit_length() - 1
        return None

    def first_edge_within(self, s: Iterable[int]) -> tuple[int, int] | None:
        sm = to_mask(s)
        for u in bits(sm):
            hit = self._adj[u] & sm & ~((1 << (u + 1)) - 1)
            if hit:
                return u, (hit & -hit).bit_length() - 1
        return None

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[S], relabeled ``0..|S|-1`` in increasing order of the original ids."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} not in graph with n={g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    sel = to_mask(vs)
    return Graph.from_masks(to_mask(pos[u] for u in bits(g.mask(v) & sel)) for v in vs)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_masks(full & ~g.mask(v) & ~(1 << v) for v in range(g.n))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 ∪ G2 with the vertices of ``g2`` shifted up by ``g1.n``."""
    shift = g1.n
    return Graph.from_masks(list(g1.masks) + [m << shift for m in g2.masks])


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 + G2: the disjoint union plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    right = ((1 << n2) - 1) << n1
    left = (1 << n1) - 1
    return Graph.from_masks([m | right for m in g1.masks] + [(m << n1) | left for m in g2.masks])


def substitute_independent_sets(g: Graph, multiplicities: Mapping[int, int]) -> Graph:
    """Replace each vertex ``v`` by an independent set of ``multiplicities[v]`` copies.

    Vertices missing from the mapping keep multiplicity 1. Copies of a vertex
    are numbered consecutively, in vertex order, so the copies of ``v`` start
    at ``sum(mult[u] for u < v)``.
    """
    mult = [1] * g.n
    for v, k in multiplicities.items():
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} not in graph with n={g.n}")
        if k < 1:
            raise PreconditionError(f"multiplicity of vertex {v} must be positive, got {k}")
        mult[v] = k
    start = [0] * g.n
    for v in range(1, g.n):
        start[v] = start[v - 1] + mult[v - 1]
    block = [((1 << mult[v]) - 1) << start[v] for v in range(g.n)]
    masks = []
    for v in range(g.n):
        row = 0
        for u in bits(g.mask(v)):
            row |= block[u]
        masks.extend([row] * mult[v])
    return Graph.from_masks(masks)


def mycielskian(g: Graph) -> Graph:
    """Mycielski's construction: ``n`` originals, ``n`` shadows, one apex.

    Shadow ``n + u`` is adjacent to the original neighbors of ``u``; the apex
    ``2n`` is adjacent to every shadow.
    """
    n = g.n
    edges = list(g.edges())
    for u in range(n):
        for w in g.neighbors(u):
            edges.append((n + u, w))
        edges.append((n + u, 2 * n))
    return Graph(2 * n + 1, edges)
