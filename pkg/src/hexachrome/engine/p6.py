"""Coloring (P6, diamond, K4)-free graphs.

Bull-free members are 4-colored around an induced C5 (or 3-colored exactly
when no C5 exists, since such a graph is perfect). Members with an induced
bull are 6-colored around a suitably chosen bull.
"""

from __future__ import annotations

import itertools

from ..errors import HypothesisViolation, PreconditionError
from ..graph import Graph, bits, to_mask
from ..recognition import Pattern, bfs_levels, find_bulls, find_c5, find_induced
from .common import (ColoringOutcome, PartitionScheme, assemble, color_by_components, require,
                     require_complete, require_connected, require_independent, require_no_edges,
                     split_matching_cell)
from .p2p3 import _components_within, _oracle_outcome, check_class


def _m(i: int) -> int:
    """Index modulo 5 into 1..5."""
    return (i - 1) % 5 + 1


def partition_thm4(g: Graph, c5) -> PartitionScheme:
    """W_i (sees only v_i) and Y_i (sees exactly v_{i-1}, v_{i+1}) around a 5-hole v1..v5."""
    v = tuple(c5)
    if len(v) != 5 or any(not g.has_edge(v[i], v[(i + 1) % 5]) for i in range(5)) \
            or any(g.has_edge(v[i], v[(i + 2) % 5]) for i in range(5)):
        raise PreconditionError(f"{list(v)} is not an induced C5")
    levels = bfs_levels(g, v)
    n0m = to_mask(v)
    idx = {(1 << v[i - 1]): f"W{i}" for i in range(1, 6)}
    for i in range(1, 6):
        idx[(1 << v[_m(i - 1) - 1]) | (1 << v[_m(i + 1) - 1])] = f"Y{i}"
    cells = {f"W{i}": set() for i in range(1, 6)} | {f"Y{i}": set() for i in range(1, 6)}
    for x in sorted(levels.layer(1)):
        lab = idx.get(g.mask(x) & n0m)
        if lab is None:
            raise HypothesisViolation("thm4/(1)", f"vertex {x} sees the 5-hole in neither K1 nor 2K1",
                                      [x, *bits(g.mask(x) & n0m)])
        cells[lab].add(x)
    out = {k: frozenset(s) for k, s in cells.items()}
    out["N2"] = levels.layer(2)
    out["N3+"] = frozenset().union(*levels.layers[2:])
    for i in range(1, 6):
        s = split_matching_cell(g, out[f"W{i}"], f"thm4/(2)(i) W{i}")
        out[f"W{i}'"], out[f"W{i}''"] = s.primed, s.double_primed
    return PartitionScheme("THM4", v, out)


def _check_thm4(g: Graph, scheme: PartitionScheme) -> None:
    c = scheme.cells
    W = lambda i: c[f"W{_m(i)}"]  # noqa: E731
    Y = lambda i: c[f"Y{_m(i)}"]  # noqa: E731
    for i in range(1, 6):
        require_no_edges(g, W(i), W(i + 1), "thm4/(2)(ii)", f"[W{i}, W{_m(i + 1)}]")
        require_complete(g, W(i), W(i + 2), "thm4/(2)(iii)", f"[W{i}, W{_m(i + 2)}]")
        if W(i):
            require_independent(g, W(i + 2), "thm4/(2)(iii)", f"W{_m(i + 2)}")
            require_independent(g, W(i - 2), "thm4/(2)(iii)", f"W{_m(i - 2)}")
        require_independent(g, Y(i) | Y(i + 2), "thm4/(2)(iv)", f"Y{i} | Y{_m(i + 2)}")
        require_no_edges(g, W(i), Y(i + 1), "thm4/(2)(v)", f"[W{i}, Y{_m(i + 1)}]")

    w_all = scheme.union(*(f"W{i}" for i in range(1, 6)))
    y_all = scheme.union(*(f"Y{i}" for i in range(1, 6)))
    n1 = w_all | y_all
    n2 = c["N2"]
    require_no_edges(g, w_all, n2, "thm4/(3)(i)", "[W, N2]")
    n1m = to_mask(n1)
    for a, b in _edges_within(g, n2):
        na, nb = g.mask(a) & n1m, g.mask(b) & n1m
        require(na == nb, "thm4/(3)(ii)", "edge of [N2] with different N1-neighborhoods", (a, b))
        require(na.bit_count() == 1, "thm4/(3)(ii)", "edge of [N2] with more than one N1 neighbor",
                [a, b, *bits(na)])
    for comp in _components_within(g, n2 | c["N3+"]):
        cm = to_mask(comp)
        require(any(g.mask(y) & cm == cm for y in y_all), "thm4/(3)(iii)",
                "component beyond N1 not fully seen by any Y vertex", comp)
    require(not c["N3+"], "thm4/(3)", "vertices at distance >= 3 from the 5-hole", c["N3+"])


def _edges_within(g: Graph, s):
    sm = to_mask(s)
    for a in bits(sm):
        for b in bits(g.mask(a) & sm & ~((1 << (a + 1)) - 1)):
            yield a, b


def _thm4_partition_checked(g: Graph, c5) -> PartitionScheme:
    scheme = partition_thm4(g, c5)
    _check_thm4(g, scheme)
    s = split_matching_cell(g, scheme["N2"], "thm4/(3) N2")
    scheme.cells["N2'"], scheme.cells["N2''"] = s.primed, s.double_primed
    c = scheme.cells
    nn = c["N2''"]
    for i in range(1, 6):
        ys = lambda *ks: scheme.union(*(f"Y{_m(i + k)}" for k in ks))  # noqa: E731
        require_no_edges(g, ys(0, 2), g.neighborhood(ys(1, 3, 4)) & nn, "thm4/(4)(i)",
                         f"[Y{i} | Y{_m(i + 2)}, N(Y{_m(i + 1)} | Y{_m(i + 3)} | Y{_m(i + 4)}) & N2'']")
        require_no_edges(g, ys(1, 3), g.neighborhood(ys(0, 2)) & nn, "thm4/(4)(ii)",
                         f"[Y{_m(i + 1)} | Y{_m(i + 3)}, N(Y{i} | Y{_m(i + 2)}) & N2'']")
    return scheme


def color_thm4(g: Graph) -> ColoringOutcome:
    """4-color a connected (P6, diamond, bull, K4)-free graph."""
    require_connected(g, "color_thm4")
    hole = find_c5(g)
    if hole is None:
        # no C5 here means no odd hole or antihole at all, so the graph is perfect
        return _oracle_outcome(g, 3, "thm4", "perfect", 4)
    scheme = _thm4_partition_checked(g, hole.vertices)
    c = scheme.cells
    empty = [not c[f"W{i}"] for i in range(1, 6)]

    def nbr_nn(*ys: int) -> frozenset[int]:
        return g.neighborhood(scheme.union(*(f"Y{k}" for k in ys))) & c["N2''"]

    def v(*ks: int) -> set[int]:
        return {scheme.anchor[k - 1] for k in ks}

    if all(empty):
        classes = [
            (1, "{v1,v3} | Y1 | Y3 | (N(Y2|Y4|Y5) & N2'')",
             v(1, 3) | c["Y1"] | c["Y3"] | nbr_nn(2, 4, 5)),
            (2, "{v2,v4} | Y2 | Y4 | (N(Y1|Y3) & N2'')",
             v(2, 4) | c["Y2"] | c["Y4"] | nbr_nn(1, 3)),
            (3, "{v5} | Y5", v(5) | c["Y5"]),
            (4, "N2'", c["N2'"]),
        ]
        return assemble(g, classes, "thm4", "case1", scheme.anchor, 4)

    if not any(empty):
        for i in range(1, 6):
            require_independent(g, c[f"W{i}"], "thm4/case2", f"W{i}")
        classes = [
            (1, "{v1,v3} | W2 | Y1 | Y3 | (N(Y2|Y4|Y5) & N2'')",
             v(1, 3) | c["W2"] | c["Y1"] | c["Y3"] | nbr_nn(2, 4, 5)),
            (2, "{v2,v4} | W3 | Y2 | Y4 | (N(Y1|Y3) & N2'')",
             v(2, 4) | c["W3"] | c["Y2"] | c["Y4"] | nbr_nn(1, 3)),
            (3, "{v5} | W1 | Y5", v(5) | c["W1"] | c["Y5"]),
            (4, "W4 | W5 | N2'", c["W4"] | c["W5"] | c["N2'"]),
        ]
        return assemble(g, classes, "thm4", "case2", scheme.anchor, 4)

    i = next(k for k in range(1, 6) if not empty[k - 1] and empty[_m(k - 1) - 1])
    if i != 1:
        a = scheme.anchor
        scheme = _thm4_partition_checked(g, tuple(a[(i - 1 + k) % 5] for k in range(5)))
        c = scheme.cells
    require_independent(g, c["W3"], "thm4/case3", "W3")
    require_independent(g, c["W4"], "thm4/case3", "W4")
    if not c["W4"]:
        classes = [
            (1, "{v1,v3} | W2' | Y1 | Y3 | (N(Y2|Y5) & N2'')",
             v(1, 3) | c["W2'"] | c["Y1"] | c["Y3"] | nbr_nn(2, 5)),
            (2, "{v2,v5} | W1' | Y2 | Y5 | (N(Y1|Y3|Y4) & N2'')",
             v(2, 5) | c["W1'"] | c["Y2"] | c["Y5"] | nbr_nn(1, 3, 4)),
            (3, "{v4} | W1'' | W2'' | N2'", v(4) | c["W1''"] | c["W2''"] | c["N2'"]),
            (4, "W3 | Y4", c["W3"] | c["Y4"]),
        ]
        return assemble(g, classes, "thm4", "case3a", scheme.anchor, 4)
    require_independent(g, c["W1"], "thm4/case3b", "W1")
    require_independent(g, c["W2"], "thm4/case3b", "W2")
    classes = [
        (1, "{v1,v3} | W2 | Y1 | Y3 | (N(Y2|Y5) & N2'')",
         v(1, 3) | c["W2"] | c["Y1"] | c["Y3"] | nbr_nn(2, 5)),
        (2, "{v2,v5} | W1 | Y2 | Y5 | (N(Y1|Y3|Y4) & N2'')",
         v(2, 5) | c["W1"] | c["Y2"] | c["Y5"] | nbr_nn(1, 3, 4)),
        (3, "{v4} | W3 | Y4", v(4) | c["W3"] | c["Y4"]),
        (4, "W4 | N2'", c["W4"] | c["N2'"]),
    ]
    return assemble(g, classes, "thm4", "case3b", scheme.anchor, 4)


# attachment of an N1 vertex to the bull (as anchor indices) -> cell label
_THM5_CELLS = {
    frozenset(s): "A" + "".join(map(str, sorted(s)))
    for s in [(1,), (2,), (3,), (4,), (5,), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 4), (4, 5),
              (1, 2, 4), (1, 3, 4), (1, 4, 5)]
}
THM5_BASE_CELLS = sorted(set(_THM5_CELLS.values()), key=lambda s: (len(s), s))


def partition_thm5(g: Graph, bull) -> PartitionScheme:
    """The fifteen N1 cells around an induced bull (v1, ..., v5), plus N2."""
    v = tuple(bull)
    bull_edges = {(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)}
    if len(v) != 5 or len(set(v)) != 5 or any(
            g.has_edge(v[a], v[b]) != ((a, b) in bull_edges) for a, b in itertools.combinations(range(5), 2)):
        raise PreconditionError(f"{list(v)} is not an induced bull in v1..v5 order")
    levels = bfs_levels(g, v)
    pos = {x: k + 1 for k, x in enumerate(v)}
    center = to_mask((v[1], v[2], v[4]))
    cells: dict[str, set[int]] = {lab: set() for lab in THM5_BASE_CELLS}
    n0m = to_mask(v)
    for x in sorted(levels.layer(1)):
        seen = g.mask(x) & n0m
        require((seen & center).bit_count() <= 1, "thm5/(1)",
                f"vertex {x} sees two of v2, v3, v5", [x, *bits(seen)])
        lab = _THM5_CELLS.get(frozenset(pos[u] for u in bits(seen)))
        require(lab is not None, "thm5/(1)", f"vertex {x} has an unexpected attachment", [x, *bits(seen)])
        cells[lab].add(x)
    out = {k: frozenset(s) for k, s in cells.items()}
    out["N2"] = levels.layer(2)
    out["N3+"] = frozenset().union(*levels.layers[2:])
    for i in range(1, 6):
        s = split_matching_cell(g, out[f"A{i}"], f"thm5/(2) A{i}")
        out[f"A{i}'"], out[f"A{i}''"] = s.primed, s.double_primed
    for lab in THM5_BASE_CELLS:
        if len(lab) > 2:
            require_independent(g, out[lab], "thm5/(2)", lab)
    return PartitionScheme("THM5", v, out)


def _sees_only(g: Graph, anchor, k: int) -> bool:
    """Whether some vertex outside the bull sees exactly anchor vertex v_k of it."""
    n0m = to_mask(anchor)
    target = 1 << anchor[k - 1]
    return any(g.mask(x) & n0m == target for x in range(g.n) if not n0m >> x & 1)


def _check_thm5(g: Graph, s: PartitionScheme) -> None:
    c = s.cells
    require(not c["A1"] or not c["A4"], "thm5/(3)", "A1 and A4 both nonempty", c["A1"] | c["A4"])
    require_complete(g, c["A1"], s.union("A14", "A15", "A45"), "thm5/(4)(i)", "[A1, A14 | A15 | A45]")
    require_no_edges(g, c["A5"], s.union("A15", "A45"), "thm5/(4)(ii)", "[A5, A15 | A45]")
    require_no_edges(g, c["A2''"], s.union("A12", "A24", "A124"), "thm5/(4)(iii)", "[A2'', A12 | A24 | A124]")
    require_no_edges(g, c["A3''"], s.union("A13", "A34", "A134"), "thm5/(4)(iii)", "[A3'', A13 | A34 | A134]")
    require_independent(g, s.union("A2''", "A12", "A24", "A124"), "thm5/(4)(iv)", "A2'' | A12 | A24 | A124")
    require_independent(g, s.union("A3''", "A13", "A34", "A134"), "thm5/(4)(iv)", "A3'' | A13 | A34 | A134")
    require_no_edges(g, c["A5''"], s.union("A14", "A145"), "thm5/(4)(v)", "[A5'', A14 | A145]")
    require_no_edges(g, s.union("A14", "A15", "A45"), c["A145"], "thm5/(4)(vi)", "[A14 | A15 | A45, A145]")
    n1 = s.union(*THM5_BASE_CELLS)
    for comp in _components_within(g, c["N2"] | c["N3+"]):
        cm = to_mask(comp)
        require(any(g.mask(x) & cm == cm for x in n1), "thm5/(5)",
                "component beyond N1 not fully seen by any N1 vertex", comp)
    require(not c["N3+"], "thm5/(5)", "vertices at distance >= 3 from the bull", c["N3+"])
    require_no_edges(g, s.union("A1", "A4", "A15", "A45"), c["N2"], "thm5/(6)", "[A1 | A4 | A15 | A45, N2]")


def color_thm5(g: Graph) -> ColoringOutcome:
    """6-color a connected (P6, diamond, K4)-free graph that contains an induced bull.

    Takes the lexicographically first bull with a vertex seeing only v1 or
    only v4 (Case 1, reflected so that vertex sees v1); if no bull has one,
    the first bull overall is used and Case 2's side conditions must hold.
    """
    require_connected(g, "color_thm5")
    first = chosen = None
    for w in find_bulls(g):
        if first is None:
            first = w.vertices
        if _sees_only(g, w.vertices, 1) or _sees_only(g, w.vertices, 4):
            chosen = w.vertices
            break
    if first is None:
        raise PreconditionError("graph contains no induced bull")

    if chosen is not None:
        if not _sees_only(g, chosen, 1):
            v1, v2, v3, v4, v5 = chosen
            chosen = (v4, v3, v2, v1, v5)
        anchor = chosen
    else:
        anchor = first
    s = partition_thm5(g, anchor)
    _check_thm5(g, s)
    sp = split_matching_cell(g, s["N2"], "thm5/(5) N2")
    s.cells["N2'"], s.cells["N2''"] = sp.primed, sp.double_primed
    c = s.cells
    v1, v2, v3, v4, v5 = anchor

    s1 = (1, "A2'' | A12 | A24 | A124", s.union("A2''", "A12", "A24", "A124"))
    s2 = (2, "A3'' | A13 | A34 | A134", s.union("A3''", "A13", "A34", "A134"))

    if chosen is not None:
        require(bool(c["A1"]) and not c["A4"], "thm5/case1", "expected A1 nonempty and A4 empty",
                c["A1"] | c["A4"])
        require_no_edges(g, c["A1"], c["A5"], "thm5/claim1(i)", "[A1, A5]")
        require_independent(g, s.union("A14", "A15", "A45"), "thm5/claim1(ii)", "A14 | A15 | A45")
        require_no_edges(g, c["A3"], c["N2"], "thm5/claim1(iii)", "[A3, N2]")
        require_no_edges(g, c["A5"], c["N2"], "thm5/claim1(iii)", "[A5, N2]")
        classes = [
            s1, s2,
            (3, "A2' | {v1,v5}", c["A2'"] | {v1, v5}),
            (4, "A3' | N2' | {v2,v4}", c["A3'"] | c["N2'"] | {v2, v4}),
            (5, "A1' | A5' | N2'' | {v3}", c["A1'"] | c["A5'"] | c["N2''"] | {v3}),
            (6, "A1'' | A5'' | A14 | A15 | A45 | A145",
             s.union("A1''", "A5''", "A14", "A15", "A45", "A145")),
        ]
        return assemble(g, classes, "thm5", "case1", anchor, 6)

    # No bull has a vertex seeing only v1 or only v4, so the side conditions
    # that would otherwise produce such a bull must hold here.
    require(not c["A1"] and not c["A4"], "thm5/case2", "expected A1 and A4 empty", c["A1"] | c["A4"])
    require_no_edges(g, s.union("A2", "A3", "A5"), c["N2"], "thm5/case2", "[A2 | A3 | A5, N2]")
    require_complete(g, c["A14"], c["A15"], "thm5/case2", "[A14, A15]")
    require_complete(g, c["A14"], c["A45"], "thm5/case2", "[A14, A45]")
    require(not c["A14"] or not c["A15"] or not c["A45"], "thm5/claim2",
            "A14, A15 and A45 all nonempty", s.union("A14", "A15", "A45"))
    if not c["A14"] or not c["A45"]:
        s5 = (5, "A5' | A15 | {v3}", c["A5'"] | c["A15"] | {v3})
        s6 = (6, "A5'' | A14 | A45 | A145", s.union("A5''", "A14", "A45", "A145"))
    else:
        s5 = (5, "A5' | A45 | {v3}", c["A5'"] | c["A45"] | {v3})
        s6 = (6, "A5'' | A14 | A145", s.union("A5''", "A14", "A145"))
    classes = [
        s1, s2,
        (3, "N2' | A2' | {v1,v5}", c["N2'"] | c["A2'"] | {v1, v5}),
        (4, "N2'' | A3' | {v2,v4}", c["N2''"] | c["A3'"] | {v2, v4}),
        s5, s6,
    ]
    return assemble(g, classes, "thm5", "case2", anchor, 6)


def _color_p6_component(g: Graph) -> ColoringOutcome:
    if find_induced(g, Pattern.BULL) is not None:
        return color_thm5(g)
    return color_thm4(g)


def color_p6(g: Graph) -> ColoringOutcome:
    """6-color any (P6, diamond, K4)-free graph, component by component."""
    check_class(g, (Pattern.P6, Pattern.DIAMOND, Pattern.K4))
    return color_by_components(g, _color_p6_component)
