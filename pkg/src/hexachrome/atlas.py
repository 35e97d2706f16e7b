"""Named graphs with fixed canonical labelings."""

from __future__ import annotations

import itertools
import re

from .errors import PreconditionError
from .graph import Graph, disjoint_union, mycielskian

PARAMETRIC = ("path", "cycle", "complete", "empty", "star")
FIXED = ("diamond", "bull", "p2up3", "petersen", "clebsch", "grotzsch", "schlafli_complement")


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n)


def star(n: int) -> Graph:
    """K_{1,n}: center 0 with ``n`` leaves."""
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def diamond() -> Graph:
    # a, b, c, d = 0..3; a and c are the nonadjacent pair
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])


def bull() -> Graph:
    # v1..v5 = 0..4: path v1-v2-v3-v4 with v5 on v2 and v3
    return Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])


def p2up3() -> Graph:
    return disjoint_union(path(2), path(3))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def clebsch() -> Graph:
    """Folded 5-cube: F_2^4, adjacent when the difference is a unit vector or all-ones."""
    gens = (0b0001, 0b0010, 0b0100, 0b1000, 0b1111)
    return Graph(16, [(u, u ^ d) for u in range(16) for d in gens if u < u ^ d])


def grotzsch() -> Graph:
    return mycielskian(cycle(5))


def schlafli_complement() -> Graph:
    """Intersection graph of the 27 lines on a smooth cubic surface.

    Labels: a_1..a_6 -> 0..5, b_1..b_6 -> 6..11, c_ij (i < j, lexicographic) -> 12..26.
    a_i meets b_j (i != j); a_i and b_i meet c_jk when i is in {j, k}; c_ij meets
    c_kl when the index pairs are disjoint.
    """
    pairs = list(itertools.combinations(range(6), 2))
    c = {p: 12 + idx for idx, p in enumerate(pairs)}
    edges = []
    for i in range(6):
        for j in range(6):
            if i != j:
                edges.append((i, 6 + j))
    for (j, k), cv in c.items():
        for i in (j, k):
            edges.append((i, cv))
            edges.append((6 + i, cv))
    for p, q in itertools.combinations(pairs, 2):
        if not set(p) & set(q):
            edges.append((c[p], c[q]))
    return Graph(27, edges)


_FIXED_BUILDERS = {
    "diamond": diamond,
    "bull": bull,
    "p2up3": p2up3,
    "petersen": petersen,
    "clebsch": clebsch,
    "grotzsch": grotzsch,
    "schlafli_complement": schlafli_complement,
}
_PARAM_BUILDERS = {"path": path, "cycle": cycle, "complete": complete, "empty": empty, "star": star}
_NAME_RE = re.compile(r"^([a-z_0-9]+?)(?:\((\d+)\)|(\d+))?$")


def named_graph(name: str, n: int | None = None) -> Graph:
    """Look up a graph by name: ``"petersen"``, ``"cycle(5)"``, ``"path6"`` or ``("cycle", 5)``."""
    key = name.strip().lower().replace("-", "_")
    if key in _FIXED_BUILDERS and n is None:
        return _FIXED_BUILDERS[key]()
    match = _NAME_RE.match(key)
    if match and match.group(1) in _PARAM_BUILDERS:
        arg = match.group(2) or match.group(3)
        if arg is not None:
            if n is not None and int(arg) != n:
                raise PreconditionError(f"conflicting sizes in {name!r} and n={n}")
            n = int(arg)
        if n is None:
            raise PreconditionError(f"{match.group(1)} needs a size, e.g. {match.group(1)}(5)")
        if n < 0:
            raise PreconditionError(f"invalid size {n}")
        return _PARAM_BUILDERS[match.group(1)](n)
    known = ", ".join(sorted(_FIXED_BUILDERS) + [f"{p}(n)" for p in _PARAM_BUILDERS])
    raise PreconditionError(f"unknown graph name {name!r}; known: {known}")
