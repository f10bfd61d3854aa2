from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from barviz.errors import EmptyGraph, InvalidInput
from barviz.graphs import (A_TO_B, B_TO_A, Digraph, Graph, bipartition, complete_graph,
                           counterexample_graph, cube_graph, cut_vertices, cycle_graph,
                           directed_cycle, has_consistent_cycle, has_triangle, is_biconnected,
                           is_one_way_bipartite, lcf_graph, named_graph, orient_one_way,
                           oriented_complete_bipartite, path_graph, petersen_graph,
                           topological_order, transitive_tournament, validate_cubic_triangle_free)
from barviz.recognize import is_planar
from oracles import has_directed_cycle, random_graph


@pytest.mark.parametrize("n,arcs", [(1, 0), (4, 6), (16, 120)])
def test_transitive_tournament_counts(n, arcs):
    T = transitive_tournament(n)
    assert len(T.arcs) == arcs
    assert all(i < j for i, j in T.arcs)
    assert T.is_tournament()


def test_transitive_tournament_rejects_zero():
    with pytest.raises(EmptyGraph):
        transitive_tournament(0)


@given(st.integers(1, 25))
def test_transitive_tournament_is_acyclic(n):
    T = transitive_tournament(n)
    assert not has_consistent_cycle(T)
    assert T.arcs == {(i, j) for i in range(n) for j in range(n) if i < j}


def test_oriented_bipartite_k53():
    D = oriented_complete_bipartite(5, 3, A_TO_B)
    assert len(D.arcs) == 15
    assert set(D.sources()) == set(range(5)) and set(D.sinks()) == {5, 6, 7}
    assert oriented_complete_bipartite(1, 1).arcs == {(0, 1)}
    R = oriented_complete_bipartite(5, 3, B_TO_A)
    assert R == D.reversed()


@given(st.integers(1, 7), st.integers(1, 7), st.sampled_from([A_TO_B, B_TO_A]))
def test_oriented_bipartite_one_way(m, n, d):
    D = oriented_complete_bipartite(m, n, d)
    assert is_one_way_bipartite(D)
    assert len(D.arcs) == m * n
    assert not has_consistent_cycle(D)


def test_oriented_bipartite_bad_direction():
    with pytest.raises(InvalidInput):
        oriented_complete_bipartite(2, 2, "sideways")


def test_counterexample_graphs():
    G1, Gh = counterexample_graph("G1"), counterexample_graph("Ghat")
    assert (G1.n, len(G1.edges)) == (20, 27)
    assert (Gh.n, len(Gh.edges)) == (20, 36)
    assert G1.edges <= Gh.edges
    assert is_biconnected(Gh) and is_planar(Gh)
    with pytest.raises(InvalidInput):
        counterexample_graph("G2")


def test_consistent_cycle():
    assert has_consistent_cycle(directed_cycle(3))
    assert not has_consistent_cycle(transitive_tournament(5))
    assert not has_consistent_cycle(oriented_complete_bipartite(5, 3))


@given(st.integers(0, 2 ** 30), st.integers(1, 9))
def test_topological_order_matches_dfs_oracle(seed, n):
    import random
    rng = random.Random(seed)
    arcs = {(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.25}
    arcs = {a for a in arcs if (a[1], a[0]) not in arcs or a < (a[1], a[0])}
    G = Digraph(n, frozenset(arcs))
    order = topological_order(G)
    assert (order is None) == has_directed_cycle(G)
    if order is not None:
        pos = {v: i for i, v in enumerate(order)}
        assert all(pos[u] < pos[v] for u, v in G.arcs)


def test_cubic_triangle_free():
    assert validate_cubic_triangle_free(cube_graph())
    assert not validate_cubic_triangle_free(complete_graph(4))
    assert validate_cubic_triangle_free(petersen_graph())
    for name in ("k33", "prism5", "franklin", "heawood", "mobius_kantor"):
        assert validate_cubic_triangle_free(named_graph(name)), name


def test_petersen_girth_five():
    P = petersen_graph()
    adj = P.adjacency()
    # no 4-cycles either: two vertices share at most one neighbour
    assert all(len(adj[u] & adj[v]) <= 1 for u in range(10) for v in range(u + 1, 10))
    assert not has_triangle(P)


def test_graph_rejects_loops_and_range():
    with pytest.raises(InvalidInput):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(InvalidInput):
        Digraph(2, frozenset({(0, 2)}))


def test_cut_vertices_small():
    assert cut_vertices(path_graph(4)) == {1, 2}
    assert cut_vertices(cycle_graph(5)) == set()
    star = Graph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    assert cut_vertices(star) == {0}


@given(st.integers(0, 2 ** 30), st.integers(2, 10))
def test_cut_vertices_by_deletion(seed, n):
    import random
    from barviz.graphs import connected_components
    G = random_graph(random.Random(seed), n, 0.35)
    base = len(connected_components(G))
    expect = set()
    for v in range(n):
        keep = [u for u in range(n) if u != v]
        idx = {u: i for i, u in enumerate(keep)}
        H = Graph(n - 1, frozenset((idx[a], idx[b]) for a, b in G.edges if v not in (a, b)))
        isolated = G.degree(v) == 0
        if len(connected_components(H)) > base - (1 if isolated else 0):
            expect.add(v)
    assert cut_vertices(G) == expect


def test_bipartition_and_orientation():
    cube = cube_graph()
    D = orient_one_way(cube)
    assert is_one_way_bipartite(D) and D.underlying() == cube
    assert bipartition(complete_graph(3)) is None
    with pytest.raises(InvalidInput):
        orient_one_way(petersen_graph())


def test_lcf_and_named():
    mk = lcf_graph(16, [5, -5], 8)
    assert all(mk.degree(v) == 3 for v in range(16))
    assert named_graph("mobius_kantor") == mk
    with pytest.raises(InvalidInput):
        named_graph("dodecahedron")


def test_induced_relabels():
    T = transitive_tournament(5)
    S = T.induced([0, 2, 4])
    assert S == transitive_tournament(3)
