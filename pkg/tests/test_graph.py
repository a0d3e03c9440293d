import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle
from naive import naive_count_cliques
from gturan.constructions import turan_graph
from gturan.errors import CapacityError, PreconditionError
from gturan.graph import (
    COUNT_CAPACITY,
    Graph,
    checked_count,
    clique_degree,
    complement,
    components,
    count_cliques,
    disjoint_union,
    edge_index,
    induced_subgraph,
    join,
    members,
    neighborhood_classes,
    relabel,
    switch_class,
    switch_vertex,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def blowups(draw):
    """Random base graph with each vertex replaced by an independent set of
    twins, so neighbourhood classes of size > 1 show up often."""
    base = draw(graphs(max_n=5))
    sizes = draw(st.lists(st.integers(1, 3), min_size=base.n, max_size=base.n))
    start = [sum(sizes[:i]) for i in range(base.n)]
    edges = [
        (start[u] + a, start[v] + b)
        for u, v in base.edges()
        for a in range(sizes[u])
        for b in range(sizes[v])
    ]
    return Graph.from_edges(sum(sizes), edges)


def test_turan_7_3_has_12_triangles():
    assert count_cliques(turan_graph(7, 3), 3) == 12


def test_edge_and_vertex_counts():
    G = turan_graph(7, 3)
    assert count_cliques(G, 0) == 1
    assert count_cliques(G, 1) == 7
    assert count_cliques(G, 2) == G.num_edges == 16
    assert count_cliques(G, 4) == 0


def test_clique_degree_in_turan_6_3():
    G = turan_graph(6, 3)
    assert all(clique_degree(G, v, 2) == 4 for v in range(6))
    assert clique_degree(G, 0, 0) == 1


def test_switch_on_five_cycle():
    G = switch_vertex(cycle(5), 0, 2)
    assert sorted(G.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3), (3, 4)]


def test_switch_rejects_adjacent_pair():
    with pytest.raises(PreconditionError):
        switch_vertex(cycle(5), 0, 1)
    with pytest.raises(PreconditionError):
        switch_vertex(cycle(5), 2, 2)


def test_switch_class_reports_every_violation():
    G = Graph.from_edges(4, [(0, 1), (1, 2)])
    with pytest.raises(PreconditionError) as info:
        switch_class(G, [0, 1], [1, 3])
    v = info.value.violations
    assert "S and T are not disjoint" in v
    assert "S is not independent" in v
    assert len(v) >= 3


def test_neighborhood_classes_of_multipartite():
    G = turan_graph(5, 3)
    assert neighborhood_classes(G) == [(0, 1), (2, 3), (4,)]
    assert neighborhood_classes(G, [1, 2, 4]) == [(1,), (2,), (4,)]


def test_edge_index_matches_column_order():
    order = [(i, j) for j in range(1, 6) for i in range(j)]
    assert [edge_index(i, j) for i, j in order] == list(range(len(order)))
    assert edge_index(3, 1) == edge_index(1, 3)


def test_capacity_limits():
    Graph.empty(64)
    with pytest.raises(CapacityError):
        Graph.empty(65)
    with pytest.raises(CapacityError):
        disjoint_union(Graph.empty(40), Graph.empty(30))
    assert checked_count(COUNT_CAPACITY) == COUNT_CAPACITY
    with pytest.raises(OverflowError):
        checked_count(COUNT_CAPACITY + 1)


def test_constructor_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_components_and_induced_subgraph():
    G = disjoint_union(cycle(3), Graph.from_edges(3, [(0, 1)]))
    assert [members(c) for c in components(G)] == [[0, 1, 2], [3, 4], [5]]
    H = induced_subgraph(G, [0, 1, 3, 4])
    assert sorted(H.edges()) == [(0, 1), (2, 3)]


def test_join_counts():
    G = join(Graph.empty(4), Graph.complete(2))
    assert G.num_edges == 9
    assert count_cliques(G, 3) == 4


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(0, 5))
def test_count_matches_brute_force(G, r):
    assert count_cliques(G, r) == naive_count_cliques(G, r)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(1, 5))
def test_degree_sum_identity(G, r):
    # each r-clique is counted once from each of its r vertices
    assert sum(clique_degree(G, v, r - 1) for v in range(G.n)) == r * count_cliques(G, r)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6), st.integers(1, 4))
def test_disjoint_union_is_additive(G1, G2, r):
    assert count_cliques(disjoint_union(G1, G2), r) == count_cliques(G1, r) + count_cliques(G2, r)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6), st.integers(1, 4))
def test_join_counts_split_cliques(G1, G2, r):
    expected = sum(count_cliques(G1, a) * count_cliques(G2, r - a) for a in range(r + 1))
    assert count_cliques(join(G1, G2), r) == expected


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_switch_is_idempotent_and_predicts_count(G, data):
    pairs = [(u, v) for u in range(G.n) for v in range(G.n) if u != v and not G.has_edge(u, v)]
    if not pairs:
        return
    u, v = data.draw(st.sampled_from(pairs))
    r = data.draw(st.integers(1, 4))
    H = switch_vertex(G, u, v)
    assert H.adj[u] == G.adj[v]
    assert switch_vertex(H, u, v) == H
    assert count_cliques(H, r) - count_cliques(G, r) == clique_degree(G, v, r - 1) - clique_degree(G, u, r - 1)


@settings(max_examples=200, deadline=None)
@given(blowups(), st.data(), st.integers(2, 4))
def test_class_switch_changes_count_by_size_times_degree_gap(G, data, r):
    classes = neighborhood_classes(G)
    pairs = [
        (S, T)
        for S in classes
        for T in classes
        if S != T and not any(G.has_edge(s, t) for s in S for t in T)
    ]
    if not pairs:
        return
    S, T = data.draw(st.sampled_from(pairs))
    ds, dt = clique_degree(G, S[0], r - 1), clique_degree(G, T[0], r - 1)
    H = switch_class(G, S, T)
    assert count_cliques(H, r) - count_cliques(G, r) == len(S) * (dt - ds)
    # switching in the better direction never loses cliques
    best = max(count_cliques(H, r), count_cliques(switch_class(G, T, S), r))
    assert best >= count_cliques(G, r)


def test_class_sum_rule_misjudges_unequal_sizes():
    # S = {6, 7} both adjacent to the edge 4-5, T = {3} adjacent to the edge 0-1.
    # Per-vertex triangle degrees are equal, so either switch keeps the count,
    # although the summed degrees over S and T differ (2 vs 1).
    G = Graph.from_edges(8, [(0, 1), (3, 0), (3, 1), (4, 5), (6, 4), (6, 5), (7, 4), (7, 5)])
    S, T = (6, 7), (3,)
    assert neighborhood_classes(G, S + T) == [(3,), (6, 7)]
    dS = sum(clique_degree(G, v, 2) for v in S)
    dT = sum(clique_degree(G, v, 2) for v in T)
    assert (dS, dT) == (2, 1)
    base = count_cliques(G, 3)
    assert count_cliques(switch_class(G, S, T), 3) == base
    assert count_cliques(switch_class(G, T, S), 3) == base


def test_class_sum_rule_can_pick_losing_direction():
    # Three twins of per-vertex degree 1 against one vertex of degree 2:
    # the sums favour moving T onto S, which loses a triangle, while the
    # per-vertex rule moves S onto T and gains three.
    edges = [(0, 1), (1, 2), (3, 0), (3, 1), (3, 2), (4, 5)]
    edges += [(x, y) for x in (6, 7, 8) for y in (4, 5)]
    G = Graph.from_edges(9, edges)
    S, T = (6, 7, 8), (3,)
    base = count_cliques(G, 3)
    assert sum(clique_degree(G, v, 2) for v in S) == 3 > 2 == clique_degree(G, 3, 2)
    assert count_cliques(switch_class(G, T, S), 3) == base - 1
    assert count_cliques(switch_class(G, S, T), 3) == base + 3


def test_relabel_and_complement():
    rng = random.Random(3)
    G = Graph.from_edges(6, [(0, 1), (1, 2), (2, 5), (4, 3)])
    order = list(range(6))
    rng.shuffle(order)
    H = relabel(G, order)
    assert H.num_edges == G.num_edges
    assert sorted(H.degree(i) for i in range(6)) == sorted(G.degree(i) for i in range(6))
    assert complement(complement(G)) == G
    assert complement(G).num_edges == 15 - G.num_edges


def test_small_degree_examples():
    assert clique_degree(Graph.complete(4), 2, 2) == 3
    assert clique_degree(cycle(5), 4, 1) == 2


def test_switch_small_cases():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert switch_vertex(p3, 0, 2) == p3
    G = Graph.from_edges(3, [(0, 1)])
    assert sorted(switch_vertex(G, 2, 0).edges()) == [(0, 1), (1, 2)]


def test_class_switch_matches_vertex_iteration():
    G = Graph.from_edges(6, [(0, 4), (1, 4), (2, 5), (3, 5), (4, 5)])
    H = switch_class(G, (0, 1), (2, 3))
    assert H == switch_vertex(switch_vertex(G, 0, 3), 1, 2)
    with pytest.raises(PreconditionError) as info:
        switch_class(Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]), (0, 1), (2, 3))
    assert info.value.violations == ["edge between S and T"]
