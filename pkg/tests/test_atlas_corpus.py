import itertools

import pytest

from hexachrome import atlas
from hexachrome.corpus import (all_graphs, canonical_form, canonical_graph6, connected_graphs,
                               corpus, sample_graph)
from hexachrome.errors import PreconditionError
from hexachrome.graph import Graph, complement, induced_subgraph
from hexachrome.recognition import Pattern, find_induced


def srg_parameters(g):
    degs = {g.degree(v) for v in range(g.n)}
    lam, mu = set(), set()
    for u, v in itertools.combinations(range(g.n), 2):
        common = (g.mask(u) & g.mask(v)).bit_count()
        (lam if g.has_edge(u, v) else mu).add(common)
    return degs, lam, mu


def test_schlafli_complement_is_srg_27_10_1_5():
    g = atlas.schlafli_complement()
    assert g.n == 27 and g.m == 135
    assert srg_parameters(g) == ({10}, {1}, {5})
    assert srg_parameters(complement(g)) == ({16}, {10}, {8})


def test_clebsch_and_grotzsch():
    c = atlas.clebsch()
    assert (c.n, c.m) == (16, 40)
    assert srg_parameters(c) == ({5}, {0}, {2})
    assert find_induced(c, Pattern.K3) is None
    gr = atlas.grotzsch()
    assert (gr.n, gr.m) == (11, 20)
    assert find_induced(gr, Pattern.K3) is None


def test_petersen():
    assert srg_parameters(atlas.petersen()) == ({3}, {0}, {1})


def test_named_graph_lookup():
    assert atlas.named_graph("cycle(5)") == atlas.cycle(5)
    assert atlas.named_graph("path6") == atlas.path(6)
    assert atlas.named_graph("star", 3) == atlas.star(3)
    assert atlas.named_graph("Schlafli-Complement") == atlas.schlafli_complement()
    for bad in ("nosuch", "cycle", "cycle(2)"):
        with pytest.raises(PreconditionError):
            atlas.named_graph(bad)


def test_small_named_graphs_are_the_patterns():
    assert atlas.diamond().m == 5 and find_induced(atlas.diamond(), Pattern.DIAMOND)
    assert find_induced(atlas.bull(), Pattern.BULL).vertices == (0, 1, 2, 3, 4)
    assert find_induced(atlas.p2up3(), Pattern.P2uP3).vertices == (0, 1, 2, 3, 4)


# enumeration

@pytest.mark.parametrize("n, count", list(enumerate([1, 1, 2, 4, 11, 34, 156, 1044], start=0)))
def test_all_graph_counts(n, count):
    assert len(all_graphs(n)) == count


@pytest.mark.parametrize("n, count", list(enumerate([1, 1, 2, 6, 21, 112, 853], start=1)))
def test_connected_graph_counts(n, count):
    assert len(connected_graphs(n)) == count


def test_enumeration_matches_networkx_atlas():
    nx = pytest.importorskip("networkx")
    ours = {n: {canonical_graph6(g) for g in all_graphs(n)} for n in range(8)}
    theirs = {n: set() for n in range(8)}
    for h in nx.graph_atlas_g():
        g = Graph(h.number_of_nodes(), h.edges())
        theirs[g.n].add(canonical_graph6(g))
    assert ours == theirs


def test_canonical_form_is_invariant():
    g = atlas.petersen()
    for perm in ([3, 1, 4, 0, 5, 9, 2, 6, 8, 7], list(range(9, -1, -1))):
        pos = {v: i for i, v in enumerate(perm)}
        h = Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])
        assert canonical_form(h) == canonical_form(g)
    assert canonical_form(atlas.cycle(6)) != canonical_form(
        Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


# corpus

def test_corpus_small_contains_c5_and_bull():
    members = {canonical_graph6(it.graph) for it in corpus(0, 5) if it.report.in_p6_class}
    assert canonical_graph6(atlas.cycle(5)) in members
    assert canonical_graph6(atlas.bull()) in members


def test_corpus_is_deterministic():
    a = [(it.graph6, it.source) for it in corpus(3, 10, samples=20)]
    b = [(it.graph6, it.source) for it in corpus(3, 10, samples=20)]
    assert a == b
    c = [(it.graph6, it.source) for it in corpus(4, 10, samples=20)]
    assert a != c


def test_sampled_members_are_in_class():
    items = [it for it in corpus(0, 14, samples=40) if it.source != "exhaustive"]
    assert len(items) == 40
    assert all(it.report.in_p6_class and 9 <= it.graph.n <= 14 for it in items)
    assert {it.source for it in items} >= {"grown-p6", "duplicated", "induced"}


def test_sample_graph_depends_only_on_seed_and_index():
    assert sample_graph(7, 11, 9, 12) == sample_graph(7, 11, 9, 12)


def test_induced_subgraphs_of_class_stay_in_class():
    g = atlas.schlafli_complement()
    h = induced_subgraph(g, range(0, 27, 2))
    assert all(find_induced(h, p) is None for p in (Pattern.P6, Pattern.DIAMOND, Pattern.K4))
