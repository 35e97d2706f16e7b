"""Shared types and helpers for the constructive coloring procedures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..errors import HypothesisViolation, PreconditionError
from ..graph import Graph, bits, induced_subgraph, to_mask
from ..oracle import verify_coloring


@dataclass(frozen=True)
class Bipartition:
    primed: frozenset[int]
    double_primed: frozenset[int]


@dataclass
class PartitionScheme:
    """Named cells of the first and second neighborhood layers around an anchor.

    Unprimed labels are the base cells (pairwise disjoint, covering V minus
    the anchor); primed labels ``X'`` and ``X''`` split a base cell ``X``.
    """

    kind: str
    anchor: tuple[int, ...]
    cells: dict[str, frozenset[int]]

    def __getitem__(self, label: str) -> frozenset[int]:
        return self.cells[label]

    def base_labels(self) -> list[str]:
        return [k for k in self.cells if not k.endswith("'")]

    def union(self, *labels: str) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for lab in labels:
            out |= self.cells[lab]
        return out


@dataclass
class ColorClass:
    color: int
    expression: str
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"color": self.color, "cells": self.expression, "vertices": list(self.vertices)}


@dataclass
class Trace:
    """Which argument produced a coloring, around which anchor, and how."""

    theorem: str
    case: str
    anchor: tuple[int, ...] = ()
    classes: list[ColorClass] = field(default_factory=list)

    def relabeled(self, mapping: Sequence[int]) -> Trace:
        return Trace(
            self.theorem,
            self.case,
            tuple(mapping[v] for v in self.anchor),
            [ColorClass(c.color, c.expression, tuple(sorted(mapping[v] for v in c.vertices)))
             for c in self.classes],
        )

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "case": self.case,
            "anchor": list(self.anchor),
            "classes": [c.to_dict() for c in self.classes],
        }


@dataclass
class ColoringOutcome:
    """A verified proper coloring (colors start at 1) and one trace per component."""

    coloring: list[int]
    bound: int
    traces: list[Trace]

    @property
    def colors_used(self) -> int:
        return len(set(self.coloring))

    @property
    def trace(self) -> Trace:
        return self.traces[0]

    def to_dict(self) -> dict:
        return {
            "coloring": list(self.coloring),
            "colors_used": self.colors_used,
            "bound": self.bound,
            "trace": [t.to_dict() for t in self.traces],
        }


def split_matching_cell(g: Graph, cell: Iterable[int], step: str = "split") -> Bipartition:
    """Split a cell inducing disjoint K1's and K2's into a maximal independent side and the rest.

    The primed side takes every isolated vertex and the smaller endpoint of
    each edge, so every excluded vertex has a neighbor on the primed side.
    """
    cm = to_mask(cell)
    primed = []
    rest = []
    for v in bits(cm):
        inside = g.mask(v) & cm
        deg = inside.bit_count()
        if deg > 1:
            raise HypothesisViolation(step, "cell induces a component with 3 or more vertices",
                                      [v, *bits(inside)])
        if deg == 0:
            primed.append(v)
            continue
        u = inside.bit_length() - 1
        if (g.mask(u) & cm).bit_count() > 1:
            raise HypothesisViolation(step, "cell induces a component with 3 or more vertices",
                                      [v, u, *bits(g.mask(u) & cm)])
        (primed if v < u else rest).append(v)
    return Bipartition(frozenset(primed), frozenset(rest))


def require(cond: bool, step: str, message: str, vertices=()):
    if not cond:
        raise HypothesisViolation(step, message, vertices)


def require_independent(g: Graph, s: Iterable[int], step: str, what: str):
    e = g.first_edge_within(s)
    if e is not None:
        raise HypothesisViolation(step, f"{what} is not independent", e)


def require_no_edges(g: Graph, s: Iterable[int], t: Iterable[int], step: str, what: str):
    e = g.first_edge_between(s, t)
    if e is not None:
        raise HypothesisViolation(step, f"{what} has an edge", e)


def require_complete(g: Graph, s: Iterable[int], t: Iterable[int], step: str, what: str):
    tm = to_mask(t)
    for u in sorted(s):
        miss = tm & ~g.mask(u) & ~(1 << u)
        if miss:
            raise HypothesisViolation(step, f"{what} is not complete", (u, (miss & -miss).bit_length() - 1))


def neighbors_in(g: Graph, v: int, s: Iterable[int]) -> frozenset[int]:
    return frozenset(bits(g.mask(v) & to_mask(s)))


def assemble(g: Graph, classes: list[tuple[int, str, Iterable[int]]], theorem: str, case: str,
             anchor: tuple[int, ...], bound: int) -> ColoringOutcome:
    """Turn named color classes into a coloring, checking they partition V into independent sets."""
    coloring = [0] * g.n
    trace = Trace(theorem, case, anchor)
    step = f"{theorem}/{case}"
    for color, expr, members in classes:
        members = sorted(set(members))
        for v in members:
            if coloring[v]:
                raise HypothesisViolation(step, f"vertex lies in two color classes ({coloring[v]} and {color})", [v])
            coloring[v] = color
        e = g.first_edge_within(members)
        if e is not None:
            raise HypothesisViolation(step, f"color class {color} = {expr} is not independent", e)
        trace.classes.append(ColorClass(color, expr, tuple(members)))
    uncovered = [v for v in range(g.n) if not coloring[v]]
    if uncovered:
        raise HypothesisViolation(step, "color classes do not cover V", uncovered)
    ok, edge = verify_coloring(g, coloring)
    assert ok, edge
    if len(set(coloring)) > bound:
        raise HypothesisViolation(step, f"{len(set(coloring))} colors exceed bound {bound}", [])
    return ColoringOutcome(coloring, bound, [trace])


def color_by_components(g: Graph, color_component: Callable[[Graph], ColoringOutcome]) -> ColoringOutcome:
    """Color each connected component independently and merge, reusing colors."""
    if g.n == 0:
        return ColoringOutcome([], 0, [])
    coloring = [0] * g.n
    traces = []
    bound = 0
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        out = color_component(sub)
        for i, v in enumerate(comp):
            coloring[v] = out.coloring[i]
        traces.extend(t.relabeled(comp) for t in out.traces)
        bound = max(bound, out.bound)
    ok, edge = verify_coloring(g, coloring)
    assert ok, edge
    return ColoringOutcome(coloring, bound, traces)


def require_connected(g: Graph, what: str):
    if not g.is_connected():
        raise PreconditionError(f"{what} requires a connected graph")
