import random

import networkx as nx
import pytest

from conftest import cycle, path, random_graph
from gturan.canon import canonical_form, canonical_key, canonical_mask, is_isomorphic
from gturan.constructions import turan_graph
from gturan.graph import Graph, relabel


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_relabelled_graphs_share_a_key(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(0, 9))
        order = list(range(G.n))
        rng.shuffle(order)
        assert canonical_key(relabel(G, order)) == canonical_key(G)


def test_agrees_with_networkx_on_random_pairs(rng):
    for _ in range(300):
        n = rng.randint(1, 7)
        p = rng.random()
        G, H = random_graph(rng, n, p), random_graph(rng, n, p)
        assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_regular_graphs_are_told_apart():
    # both 2-regular on 6 vertices
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_isomorphic(cycle(6), two_triangles)
    # both 3-regular on 6 vertices
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    k33 = turan_graph(6, 2)
    assert not is_isomorphic(prism, k33)


def test_canonical_form_is_a_fixed_point():
    for G in (cycle(7), path(5), turan_graph(7, 3), Graph.empty(3)):
        C = canonical_form(G)
        assert canonical_mask(C) == C.edge_mask() == canonical_mask(G)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_isomorphism_classes(n):
    # graphs on 1..5 vertices: 1, 2, 4, 11, 34 classes
    keys = {canonical_key(Graph.from_edge_mask(n, m)) for m in range(1 << (n * (n - 1) // 2))}
    assert len(keys) == [1, 2, 4, 11, 34][n - 1]
