"""Shared checks for built graphs, computed straight from the edge list."""

from __future__ import annotations

import networkx as nx

from babi.graph import BabiParams, Graph, max_fat_edge_sum


def census_problems(G: Graph, p: BabiParams) -> list[str]:
    """Violations of the edge-count identities and the fat-edge degree-sum bound; [] when all hold."""
    deg = G.degrees()
    v = G.n
    f = sum(1 for a, b in G.edges() if deg[a] == deg[b] == p.s)
    t = sum(1 for a, b in G.edges() if deg[a] == deg[b] == p.r)
    m = G.num_edges() - f - t
    out = []
    if 2 * f + m != v // 2 * p.s:
        out.append(f"2f+m={2 * f + m} != {v // 2 * p.s}")
    if 2 * t + m != v // 2 * p.r:
        out.append(f"2t+m={2 * t + m} != {v // 2 * p.r}")
    if 4 * f != v * (p.s - p.r) + 4 * t:
        out.append(f"f={f} != v(s-r)/4+t")
    if f and max_fat_edge_sum(G, p) < 2 * (p.s - p.r):
        out.append("no fat edge with fat-degree sum >= 2(s-r)")
    return out


def independent_girth(G: Graph) -> int | None:
    H = nx.empty_graph(G.n)
    H.add_edges_from(G.edges())
    g = nx.girth(H)
    return None if g == float("inf") else int(g)


def is_babi(G: Graph, p: BabiParams) -> bool:
    from collections import Counter

    c = Counter(G.degrees())
    return set(c) == {p.r, p.s} and c[p.r] == c[p.s] and independent_girth(G) == p.g
