import itertools

import pytest
from hypothesis import given, settings

from hexachrome import atlas
from hexachrome.errors import PreconditionError
from hexachrome.graph import Graph, bits, induced_subgraph, substitute_independent_sets
from hexachrome.recognition import (CLASS_FLAGS, Pattern, bfs_levels, check_r1, check_r2,
                                    check_r3_r4, check_r5, classify, dominates, find_bulls,
                                    find_c5, find_induced, find_induced_bruteforce,
                                    find_nondominating_triangle, find_triangles,
                                    independent_neighborhood_vertices, iter_induced,
                                    pattern_graph)

from conftest import graphs


def triangle_with_tail():
    # triangle 0,1,2 and path 0-3-4
    return Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])


def test_patterns_find_themselves():
    for p in Pattern:
        w = find_induced(pattern_graph(p), p)
        assert w is not None and w.vertices == tuple(range(pattern_graph(p).n))


def test_find_induced_examples():
    assert find_induced(atlas.diamond(), Pattern.DIAMOND) is not None
    assert find_induced(atlas.complete(4), Pattern.DIAMOND) is None
    assert find_induced(atlas.cycle(6), Pattern.P6) is None
    assert find_induced(atlas.path(7), Pattern.P6) is not None
    assert find_induced(atlas.schlafli_complement(), Pattern.P2uP3) is None


def test_witness_is_an_induced_copy():
    cases = [(atlas.petersen(), Pattern.C5), (atlas.petersen(), Pattern.C6),
             (atlas.cycle(9), Pattern.P6), (atlas.cycle(9), Pattern.P2uP3), (atlas.clebsch(), Pattern.P4)]
    for g, p in cases:
        w = find_induced(g, p)
        assert w is not None
        pg = pattern_graph(p)
        for a, b in itertools.combinations(range(pg.n), 2):
            assert g.has_edge(w.vertices[a], w.vertices[b]) == pg.has_edge(a, b)


def test_classify_examples():
    r = classify(atlas.grotzsch())
    assert all(r.free(f) for f in CLASS_FLAGS if f != "c5_free")
    assert not r.c5_free
    r = classify(atlas.complete(4))
    assert not r.k4_free and r.diamond_free
    assert r.to_dict()["witnesses"] == {"k4_free": [0, 1, 2, 3]}
    r = classify(atlas.path(6))
    assert not r.p6_free and r.witnesses["p6_free"].vertices == (0, 1, 2, 3, 4, 5)


def test_schlafli_complement_class():
    r = classify(atlas.schlafli_complement())
    assert r.p2up3_free and r.diamond_free and r.k4_free and not r.bull_free
    assert r.in_p2p3_class and r.in_p6_class


@given(graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_matcher_agrees_with_bruteforce(g):
    for p in Pattern:
        fast = find_induced(g, p)
        slow = find_induced_bruteforce(g, p)
        # both return the lexicographically smallest ordered witness
        assert (fast is None) == (slow is None), p
        if fast is not None:
            assert fast.vertices == slow.vertices, p


def test_iter_induced_is_lexicographic():
    ws = [w.vertices for w in iter_induced(atlas.cycle(6), Pattern.P3)]
    assert ws == sorted(ws) and len(ws) == len(set(ws))


# levels and domination

def test_bfs_levels_examples():
    lv = bfs_levels(triangle_with_tail(), [0, 1, 2])
    assert lv.layer(1) == {3} and lv.layer(2) == {4} and lv.layer(3) == frozenset()
    assert bfs_levels(atlas.cycle(5), range(5)).layers == ()
    lv = bfs_levels(atlas.cycle(5), [0])
    assert lv.layer(1) == {1, 4} and lv.layer(2) == {2, 3}
    with pytest.raises(PreconditionError):
        bfs_levels(atlas.cycle(5), [])
    with pytest.raises(PreconditionError):
        bfs_levels(Graph(3, [(0, 1)]), [0])


@given(graphs(min_n=1, max_n=10))
def test_levels_invariants(g):
    g = induced_subgraph(g, g.components()[0])
    lv = bfs_levels(g, [0])
    seen = set(lv.base)
    prev = lv.base
    for layer in lv.layers:
        assert layer and not (layer & seen)
        # every vertex at distance j has a neighbor at distance j - 1 and none below it
        for v in layer:
            assert g.mask(v) & sum(1 << u for u in prev)
            assert not g.mask(v) & sum(1 << u for u in seen - prev)
        seen |= layer
        prev = layer
    assert seen == set(range(g.n))


def test_dominates_examples():
    g = triangle_with_tail()
    assert dominates(g, range(g.n))
    assert not dominates(g, [0, 1, 2])
    assert dominates(atlas.star(4), [0])
    assert find_nondominating_triangle(g) == (0, 1, 2)


def test_triangle_bull_c5_finders():
    assert list(find_triangles(atlas.clebsch())) == []
    assert find_c5(atlas.grotzsch()) is not None
    assert next(find_bulls(atlas.clebsch()), None) is None
    assert next(find_bulls(atlas.schlafli_complement()), None) is not None
    tris = list(find_triangles(atlas.complete(4)))
    assert tris == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_petersen_is_p6_and_p2up3_free():
    g = atlas.petersen()
    assert find_induced(g, Pattern.P6) is None and find_induced_bruteforce(g, Pattern.P6) is None
    assert find_induced(g, Pattern.P2uP3) is None


def test_schlafli_triangles_all_dominate():
    g = atlas.schlafli_complement()
    assert find_nondominating_triangle(g) is None
    assert sum(1 for _ in find_triangles(g)) == 45


# structural rules on (diamond, K4)-free graphs

def diamond_k4_free(g):
    return find_induced(g, Pattern.DIAMOND) is None and find_induced(g, Pattern.K4) is None


@given(graphs(max_n=9))
@settings(max_examples=300, deadline=None)
def test_rules_r1_to_r4(g):
    if not diamond_k4_free(g):
        return
    assert check_r1(g) == []
    assert check_r2(g) == []
    assert check_r3_r4(g) == []


def test_rules_flag_a_diamond():
    d = atlas.diamond()
    assert check_r1(d) or check_r2(d) or check_r3_r4(d)


@given(graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_rule_r5_duplication(g):
    if not diamond_k4_free(g):
        return
    eligible = independent_neighborhood_vertices(g)
    mult = {v: 1 + (v % 3) for v in eligible}
    assert check_r5(g, mult) == []
    h = substitute_independent_sets(g, mult)
    assert find_induced(h, Pattern.DIAMOND) is None


def test_r5_precondition():
    k3 = atlas.complete(3)
    assert independent_neighborhood_vertices(k3) == []
    with pytest.raises(PreconditionError):
        check_r5(k3, {0: 2})
    assert all(k3.is_independent(bits(k3.mask(v))) is False for v in range(3))
