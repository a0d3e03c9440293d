import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from naive import naive_graph6
from gturan.errors import Graph6Error
from gturan.graph import Graph
from gturan.graph6 import decode_graph6, encode_graph6, read_graph6


def test_known_strings():
    assert encode_graph6(Graph.complete(3)) == "Bw"
    assert encode_graph6(Graph.empty(0)) == "?"
    assert encode_graph6(Graph.empty(1)) == "@"
    assert decode_graph6("Bw") == Graph.complete(3)
    assert decode_graph6(">>graph6<<Bw\n") == Graph.complete(3)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 62), st.data())
def test_encoding_matches_reference(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [e for e in pairs if data.draw(st.booleans())] if n <= 12 else data.draw(
        st.lists(st.sampled_from(pairs), max_size=60) if pairs else st.just([])
    )
    G = Graph.from_edges(n, edges)
    text = encode_graph6(G)
    assert text == naive_graph6(n, edges)
    assert decode_graph6(text) == G


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("B ", "truncated"),
        ("Bw?", "trailing"),
        ("Bx", "padding"),
        ("B\x7f", "outside"),
        ("~??", "long"),
        ("D", "truncated"),
    ],
)
def test_malformed_strings(text, fragment):
    with pytest.raises(Graph6Error, match=fragment):
        decode_graph6(text)


def test_reader_reports_line_numbers():
    with pytest.raises(Graph6Error) as info:
        list(read_graph6(["Bw", "", "Bx"]))
    assert info.value.line == 3
    assert "line 3" in str(info.value)
    assert len(list(read_graph6(["Bw", "", "@\n"]))) == 2


def test_encoder_capacity():
    with pytest.raises(Graph6Error):
        encode_graph6(Graph.empty(63))
