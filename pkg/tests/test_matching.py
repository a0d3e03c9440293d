import networkx as nx
import pytest

from conftest import cycle, random_graph, star
from naive import naive_matching_number
from gturan.constructions import g_graph, turan_graph
from gturan.errors import BudgetError, CertificateError
from gturan.graph import Graph
from gturan.matching import (
    BergeCertificate,
    berge_certificate,
    berge_deficiency,
    berge_matching_number,
    berge_matching_numbers,
    matching_number,
    max_matching,
    verify_certificate,
)


def test_small_examples():
    assert matching_number(Graph.empty(5)) == 0
    assert matching_number(cycle(5)) == 2
    assert matching_number(star(6)) == 1
    assert matching_number(turan_graph(7, 3)) == 3
    assert matching_number(g_graph(7, 3, 2)) == 2


def test_matching_is_valid(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(0, 14))
        M = max_matching(G)
        used = [v for e in M.edges for v in e]
        assert len(used) == len(set(used))
        assert all(G.has_edge(u, v) for u, v in M.edges)
        assert M.size == matching_number(G)


def test_blossom_against_brute_force(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(0, 8))
        assert matching_number(G) == naive_matching_number(G) == berge_matching_number(G)


def test_blossom_against_networkx(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(10, 30))
        H = nx.Graph(list(G.edges()))
        assert matching_number(G) == len(nx.max_weight_matching(H, maxcardinality=True))


def test_petersen_like_odd_cycles():
    # two triangles joined by a path of length 2 force a blossom contraction
    G = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
    assert matching_number(G) == 3
    assert berge_deficiency(G) == 1


def test_vectorised_berge_matches_blossom_for_n5():
    values = berge_matching_numbers(5)
    for mask in range(len(values)):
        assert values[mask] == matching_number(Graph.from_edge_mask(5, mask))
    assert list(berge_matching_numbers(2)) == [0, 1]
    with pytest.raises(BudgetError):
        berge_matching_numbers(9)


def test_certificate_for_g_graph():
    G = g_graph(7, 3, 2)
    cert = berge_certificate(G, 2)
    assert cert.B == (5, 6)
    assert cert.components == ((0,), (1,), (2,), (3,), (4,))
    assert cert.s_witness == 2
    assert verify_certificate(G, cert, 2)
    assert berge_certificate(G, 1) is None


def test_certificate_for_single_edge_needs_odd_components():
    # B = {} has the largest deficiency (0) but leaves an even component
    G = Graph.from_edges(2, [(0, 1)])
    cert = berge_certificate(G, 1)
    assert all(cert.parities)
    assert verify_certificate(G, cert, 1)


def test_certificate_round_trip(rng):
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 12))
        nu = matching_number(G)
        cert = berge_certificate(G, nu)
        assert cert.s_witness == nu
        back = BergeCertificate.from_dict(cert.to_dict())
        assert back == cert and verify_certificate(G, back, nu)
        if nu:
            assert not verify_certificate(G, cert, nu - 1)


def test_verify_rejects_wrong_and_malformed():
    G = cycle(5)
    good = berge_certificate(G, 2)
    assert verify_certificate(G, good, 2)
    # components do not match G - B
    assert not verify_certificate(G, BergeCertificate((), ((0, 1, 2), (3, 4))), 2)
    with pytest.raises(CertificateError):
        verify_certificate(G, BergeCertificate((7,), ((0, 1, 2, 3, 4),)), 2)
    with pytest.raises(CertificateError):
        verify_certificate(G, BergeCertificate((0,), ((0, 1, 2, 3, 4),)), 2)
    with pytest.raises(CertificateError):
        BergeCertificate.from_dict({"B": [], "components": [[0, 1, 2, 3, 4]], "s_witness": 1})


def test_certificate_budget():
    with pytest.raises(BudgetError):
        berge_certificate(Graph.empty(21), 0)
