from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from babi.graph import Graph
from babi.named import heawood, petersen, robertson
from babi.search.canon import canonical_form, canonical_graph, graph_canonical_form, is_isomorphic, relabel


def shuffled(G: Graph, seed: int) -> Graph:
    order = list(range(G.n))
    random.Random(seed).shuffle(order)
    return relabel(G, order)


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(0, 10**6))
def test_form_is_invariant_under_relabelling(G, seed):
    assert graph_canonical_form(G) == graph_canonical_form(shuffled(G, seed))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_form_decides_isomorphism_like_networkx(G, H):
    if G.n != H.n:
        return
    a, b = nx.empty_graph(G.n), nx.empty_graph(H.n)
    a.add_edges_from(G.edges())
    b.add_edges_from(H.edges())
    assert is_isomorphic(G, H) == nx.is_isomorphic(a, b)


def test_atlas_forms_are_distinct():
    # the atlas lists each graph on <= 7 vertices exactly once
    seen = set()
    for H in nx.graph_atlas_g():
        G = Graph.from_edges(H.number_of_nodes(), H.edges())
        seen.add(graph_canonical_form(G))
    assert len(seen) == len(nx.graph_atlas_g())


@pytest.mark.parametrize("make", [petersen, heawood, robertson])
def test_vertex_transitive_and_friends(make):
    G = make()
    for seed in range(5):
        assert canonical_graph(shuffled(G, seed)) == canonical_graph(G)


def test_strongly_regular_pair_distinguished():
    # Shrikhande vs 4x4 rook's graph: same parameters, not isomorphic
    rook = nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4))
    rook = nx.convert_node_labels_to_integers(rook)
    shr = nx.Graph()
    for x in range(4):
        for y in range(4):
            for dx, dy in ((1, 0), (0, 1), (1, 1)):
                shr.add_edge(4 * x + y, 4 * ((x + dx) % 4) + (y + dy) % 4)
    A = Graph.from_edges(16, rook.edges())
    B = Graph.from_edges(16, shr.edges())
    assert not is_isomorphic(A, B)
    assert is_isomorphic(B, shuffled(B, 3))


def test_colours_are_respected():
    P = Graph.cycle(4)
    masks = P.masks()
    assert canonical_form(masks, [0, 1, 0, 1]) == canonical_form(masks, [1, 0, 1, 0])
    assert canonical_form(masks, [0, 0, 1, 1]) != canonical_form(masks, [0, 1, 0, 1])


def test_empty():
    assert canonical_form([]) == (0, (), ())
