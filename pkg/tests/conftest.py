import itertools

import pytest
from hypothesis import strategies as st

from hexachrome.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def naive_chi(g):
    """Smallest k admitting a proper coloring, by trying every assignment."""
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if col[0] == 0 and all(col[u] != col[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def naive_omega(g):
    best = 0
    for r in range(1, g.n + 1):
        if any(all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
               for s in itertools.combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


@pytest.fixture(scope="session")
def graph_strategy():
    return graphs


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def acceptance_record():
    def record(number, ok, detail):
        ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
