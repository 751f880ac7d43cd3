import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from alphapack.bipartite import (
    BipartiteGraph,
    gadget,
    max_cardinality_matching,
    max_center_left_p2,
    max_center_left_size,
)
from alphapack.oracles import brute_opt_center_left


def check_packing(B, packing):
    edges = set(B.edges)
    used = set()
    for x, m, y in packing.paths:
        assert m in B.left and x in B.right and y in B.right
        assert (m, x) in edges and (m, y) in edges
        assert not {x, m, y} & used
        used |= {x, m, y}


def random_bipartite(rng, nl, nr, p):
    L = list(range(nl))
    R = list(range(nl, nl + nr))
    return BipartiteGraph(L, R, [(l, r) for l in L for r in R if rng.random() < p])


def test_single_star():
    out = max_center_left_p2(BipartiteGraph([0], [1, 2], [(0, 1), (0, 2)]))
    assert out.paths == ((1, 0, 2),)


def test_shared_neighbour():
    B = BipartiteGraph([0, 1], [2, 3, 4], [(0, 2), (0, 3), (1, 3), (1, 4)])
    assert len(max_center_left_p2(B)) == 1 == brute_opt_center_left(B.left, B.right, B.edges)


def test_empty():
    assert len(max_center_left_p2(BipartiteGraph([], [], []))) == 0
    assert len(max_center_left_p2(BipartiteGraph([0, 1], [2], []))) == 0


def test_lexicographic_middles():
    # either middle alone is optimal; the smaller one is reported
    B = BipartiteGraph([0, 1], [2, 3], [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert [p[1] for p in max_center_left_p2(B).paths] == [0]


def test_edges_are_oriented():
    B = BipartiteGraph([0], [1, 2], [(1, 0), (0, 2)])
    assert B.edges == ((0, 1), (0, 2))


def test_rejects_bad_edges():
    with pytest.raises(ValueError):
        BipartiteGraph([0, 1], [2], [(0, 1)])
    with pytest.raises(ValueError):
        BipartiteGraph([0], [0], [])


def test_matching_on_odd_cycle_with_tail():
    # blossom case: a 5-cycle with a pendant edge has a perfect matching
    adj = [[1, 4, 5], [0, 2], [1, 3], [2, 4], [3, 0], [0]]
    mate = max_cardinality_matching(6, adj)
    assert all(m != -1 for m in mate)


def test_random_graphs_against_brute_force():
    rng = random.Random(2)
    for _ in range(300):
        B = random_bipartite(rng, rng.randint(0, 5), rng.randint(0, 7), rng.random())
        out = max_center_left_p2(B)
        check_packing(B, out)
        assert len(out) == brute_opt_center_left(B.left, B.right, B.edges)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.floats(0.05, 0.9), st.integers(0, 10 ** 6))
def test_blossom_matches_networkx(n, p, seed):
    rng = random.Random(seed)
    G = nx.gnp_random_graph(n, p, seed=rng.randrange(10 ** 6))
    adj = [sorted(G[v]) for v in range(n)]
    mate = max_cardinality_matching(n, adj)
    size = sum(1 for v, u in enumerate(mate) if u > v)
    for v, u in enumerate(mate):
        if u != -1:
            assert mate[u] == v and G.has_edge(u, v)
    assert size == len(nx.max_weight_matching(G, maxcardinality=True))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 6), st.integers(0, 8), st.floats(0, 1), st.integers(0, 10 ** 6))
def test_gadget_identity(nl, nr, p, seed):
    B = random_bipartite(random.Random(seed), nl, nr, p)
    adj = gadget(B)
    mate = max_cardinality_matching(len(adj), adj)
    size = sum(1 for v, u in enumerate(mate) if u > v)
    assert size == nl + max_center_left_size(B) == nl + len(max_center_left_p2(B))
