from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from babi.graph import Graph
from babi.graph6 import Graph6Error, _encode_n, graph6_decode, graph6_encode, read_graph6, write_graph6


def nx_bytes(G: Graph) -> bytes:
    H = nx.empty_graph(G.n)
    H.add_edges_from(G.edges())
    return nx.to_graph6_bytes(H, header=False).rstrip(b"\n")


@st.composite
def graphs(draw, max_n: int = 70):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Graph.empty(n)
    m = draw(st.integers(0, min(60, n * (n - 1) // 2)))
    edges = set()
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def test_empty_graph():
    assert graph6_encode(Graph.empty(0)) == b"?"
    assert graph6_decode("?") == Graph.empty(0)


def test_pentagon_round_trip():
    C = Graph.cycle(5)
    assert graph6_decode(graph6_encode(C)) == C


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_round_trip_and_matches_networkx(G):
    data = graph6_encode(G)
    assert graph6_decode(data) == G
    assert data == nx_bytes(G)


def test_long_forms():
    for n in (62, 63, 200):
        G = Graph.from_edges(n, [(0, n - 1)])
        data = graph6_encode(G)
        assert graph6_decode(data) == G
        assert data == nx_bytes(G)
    assert graph6_encode(Graph.empty(63))[:4] == b"~??~"
    # 8-byte size header; the body of such a graph is too large to build here
    assert _encode_n(258048) == b"~~???~??"
    assert _encode_n(258047) == b"~}~~"


def test_header_and_newline_accepted():
    assert graph6_decode(b">>graph6<<Dhc\n") == graph6_decode(b"Dhc")


@pytest.mark.parametrize(
    "data, offset",
    [
        (b"D h", 1),      # byte out of range
        (b"Dh", 2),       # truncated
        (b"Dhcc", 3),     # trailing bytes
        (b"Dhd", 2),      # non-zero padding
        (b"~?", 2),       # truncated size
    ],
)
def test_errors_carry_offsets(data, offset):
    with pytest.raises(Graph6Error) as info:
        graph6_decode(data)
    assert info.value.offset == offset


def test_files(tmp_path):
    p = tmp_path / "c5.g6"
    write_graph6(Graph.cycle(5), p)
    assert read_graph6(p) == Graph.cycle(5)
    p.write_bytes(b"Dhc\nDhc\n")
    with pytest.raises(Graph6Error):
        read_graph6(p)
