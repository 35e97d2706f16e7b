"""Coloring (P2 ∪ P3, diamond, K4)-free graphs around a triangle.

A non-dominating triangle yields a 4-coloring; when every triangle dominates,
the three one-neighbor cells around any triangle yield a 6-coloring.
Triangle-free members are 4-colored by exact search.
"""

from __future__ import annotations

from ..errors import ClassViolation, HypothesisViolation, PreconditionError
from ..graph import Graph, bits, to_mask
from ..oracle import is_k_colorable
from ..recognition import (Pattern, bfs_levels, dominates, find_induced,
                           find_nondominating_triangle, find_triangles)
from .common import (ColoringOutcome, PartitionScheme, Trace, ColorClass, assemble,
                     color_by_components, require, require_connected, require_independent,
                     require_no_edges, split_matching_cell)


def _check_triangle(g: Graph, t) -> tuple[int, int, int]:
    t = tuple(t)
    if len(t) != 3 or len(set(t)) != 3 or not g.is_clique(t):
        raise PreconditionError(f"{list(t)} is not a triangle")
    return t


def _one_neighbor_cells(g: Graph, t: tuple[int, int, int], outside, step: str) -> list[frozenset[int]]:
    tm = to_mask(t)
    cells: list[list[int]] = [[], [], []]
    for x in sorted(outside):
        hit = g.mask(x) & tm
        require(hit.bit_count() == 1, step,
                f"vertex {x} has {hit.bit_count()} neighbors in the triangle, expected exactly one", [x])
        cells[t.index(hit.bit_length() - 1)].append(x)
    return [frozenset(c) for c in cells]


def partition_thm1(g: Graph, t) -> PartitionScheme:
    """Layers around a non-dominating triangle (v1, v2, v3) and the cells A_1..A_3, N_2."""
    t = _check_triangle(g, t)
    levels = bfs_levels(g, t)
    n1, n2 = levels.layer(1), levels.layer(2)
    a = _one_neighbor_cells(g, t, n1, "thm1/(1)")
    require(len(levels.layers) <= 2, "thm1/(2)", "vertices at distance >= 3 from the triangle",
            levels.layer(3))
    cells = {"A1": a[0], "A2": a[1], "A3": a[2], "N2": n2}
    s = split_matching_cell(g, a[0], "thm1/A1")
    cells["A1'"], cells["A1''"] = s.primed, s.double_primed
    s = split_matching_cell(g, n2, "thm1/(3)")
    cells["N2'"], cells["N2''"] = s.primed, s.double_primed
    return PartitionScheme("THM1", t, cells)


def _rotate(t, i: int):
    """Cyclic relabeling that puts ``t[i]`` first."""
    return tuple(t[(i + k) % len(t)] for k in range(len(t)))


def color_thm1(g: Graph, t) -> ColoringOutcome:
    """4-color a connected (P2∪P3, diamond, K4)-free graph from a non-dominating triangle."""
    t = _check_triangle(g, t)
    require_connected(g, "color_thm1")
    if dominates(g, t):
        raise PreconditionError(f"triangle {list(t)} dominates the graph")
    scheme = partition_thm1(g, t)
    n1 = scheme.union("A1", "A2", "A3")
    n2 = scheme["N2"]
    n2m = to_mask(n2)

    # (3): each component of [N2] is exactly the N2-neighborhood of some N1 vertex
    n2_graph_comps = _components_within(g, n2)
    for comp in n2_graph_comps:
        cm = to_mask(comp)
        require(any(g.mask(x) & n2m == cm for x in n1), "thm1/(3)",
                "component of [N2] is not the N2-neighborhood of any N1 vertex", comp)

    edge = g.first_edge_within(n2)
    if edge is not None:
        x = min(x for x in n1 if g.first_edge_within(bits(g.mask(x) & n2m)) is not None)
    else:
        x = min(x for x in n1 if g.mask(x) & n2m)
    i = next(k for k in range(3) if g.has_edge(x, t[k]))
    if i:
        t = _rotate(t, i)
        scheme = partition_thm1(g, t)
    v1, v2, v3 = t
    c = scheme.cells

    # (4): an A_i vertex with an N2 neighbor forces the other A_j to be independent
    for k in (1, 2, 3):
        if any(g.mask(y) & n2m for y in c[f"A{k}"]):
            for j in (1, 2, 3):
                if j != k:
                    require_independent(g, c[f"A{j}"], "thm1/(4)", f"A{j}")

    if edge is not None:
        require(not c["A2"] and not c["A3"], "thm1/K2-case",
                "A2 and A3 must be empty when [N2] has an edge", c["A2"] | c["A3"])
        classes = [
            (1, "{v1} | N2'", {v1} | c["N2'"]),
            (2, "{v2} | A1'", {v2} | c["A1'"]),
            (3, "{v3} | A1''", {v3} | c["A1''"]),
            (4, "N2''", c["N2''"]),
        ]
        return assemble(g, classes, "thm1", "n2-has-edge", t, 4)

    require_no_edges(g, c["A1''"], n2, "thm1/independent-case", "[A1'', N2]")
    classes = [
        (1, "{v1} | A2", {v1} | c["A2"]),
        (2, "{v2} | A1'", {v2} | c["A1'"]),
        (3, "{v3} | A1'' | N2", {v3} | c["A1''"] | n2),
        (4, "A3", c["A3"]),
    ]
    return assemble(g, classes, "thm1", "n2-independent", t, 4)


def _components_within(g: Graph, s) -> list[list[int]]:
    sm = to_mask(s)
    out = []
    seen = 0
    for v in bits(sm):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.mask(u)
            frontier = nxt & sm & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def partition_thm2(g: Graph, t) -> PartitionScheme:
    """Cells A_1..A_3 of vertices seeing exactly x_i of a dominating triangle."""
    t = _check_triangle(g, t)
    outside = set(range(g.n)) - set(t)
    a = _one_neighbor_cells(g, t, outside, "thm2/one-neighbor")
    cells = {}
    for k in range(3):
        cells[f"A{k + 1}"] = a[k]
    for k in range(3):
        s = split_matching_cell(g, a[k], f"thm2/A{k + 1}")
        cells[f"A{k + 1}'"], cells[f"A{k + 1}''"] = s.primed, s.double_primed
    return PartitionScheme("THM2", t, cells)


def color_thm2(g: Graph, t) -> ColoringOutcome:
    """6-color a connected (P2∪P3, diamond, K4)-free graph in which triangle ``t`` dominates.

    Fixed scheme: A_1 gets colors 1/2, A_2 gets 3/4, A_3 gets 5/6 (primed side
    odd); x1, x2, x3 get 3, 5, 1.
    """
    scheme = partition_thm2(g, t)
    x1, x2, x3 = scheme.anchor
    c = scheme.cells
    classes = [
        (1, "{x3} | A1'", {x3} | c["A1'"]),
        (2, "A1''", c["A1''"]),
        (3, "{x1} | A2'", {x1} | c["A2'"]),
        (4, "A2''", c["A2''"]),
        (5, "{x2} | A3'", {x2} | c["A3'"]),
        (6, "A3''", c["A3''"]),
    ]
    return assemble(g, classes, "thm2", "dominating", scheme.anchor, 6)


def _oracle_outcome(g: Graph, k: int, theorem: str, case: str, bound: int) -> ColoringOutcome:
    col = is_k_colorable(g, k)
    if col is None:
        raise HypothesisViolation(f"{theorem}/{case}", f"graph is not {k}-colorable", range(g.n))
    classes = [ColorClass(c, "oracle", tuple(v for v in range(g.n) if col[v] == c))
               for c in sorted(set(col))]
    return ColoringOutcome(col, bound, [Trace(theorem, case, (), classes)])


def check_class(g: Graph, patterns) -> None:
    for p in patterns:
        w = find_induced(g, p)
        if w is not None:
            raise ClassViolation(p.value, w.vertices)


def _color_p2p3_component(g: Graph) -> ColoringOutcome:
    t = find_nondominating_triangle(g)
    if t is not None:
        return color_thm1(g, t)
    t = next(find_triangles(g), None)
    if t is not None:
        return color_thm2(g, t)
    return _oracle_outcome(g, 4, "thm3", "triangle-free", 4)


def color_p2p3(g: Graph) -> ColoringOutcome:
    """6-color any (P2 ∪ P3, diamond, K4)-free graph, component by component."""
    check_class(g, (Pattern.P2uP3, Pattern.DIAMOND, Pattern.K4))
    return color_by_components(g, _color_p2p3_component)
