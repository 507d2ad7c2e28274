"""General existence: join an r-regular and an s-regular graph of girth g by switching."""

from __future__ import annotations

from math import lcm

from ..graph import BabiParams, Graph, connect_switch, edge_off_cycle, girth, girth_cycle, replicate
from ._common import Built, ConstructionError, finish


def _regular_degree(G: Graph, name: str) -> int:
    degs = set(G.degrees())
    if len(degs) != 1:
        raise ConstructionError(f"{name} is not regular")
    return degs.pop()


def _scale(G: Graph, k: int, n: int) -> Graph:
    """``n`` copies of ``G`` made into one graph: replication for k > 2, disjoint cycles for k = 2."""
    if k > 2:
        return replicate(G, n)
    out = G
    for _ in range(n - 1):
        out = out.disjoint_union(G)
    return out


def compose_babi(G_r: Graph, G_s: Graph, g: int) -> Built:
    """(r,s;g)-babi-graph of order 2*lcm(|G_r|, |G_s|).

    Both inputs are scaled to the common order lcm(|G_r|, |G_s|) rather than
    the product of the orders; any common order works.
    """
    r = _regular_degree(G_r, "G_r")
    s = _regular_degree(G_s, "G_s")
    if not 2 <= r < s:
        raise ConstructionError(f"need 2 <= r < s, got r={r}, s={s}")
    if girth(G_r) != g or girth(G_s) != g:
        raise ConstructionError(f"both inputs must have girth {g}; got {girth(G_r)} and {girth(G_s)}")
    n = lcm(G_r.n, G_s.n)
    big_r = _scale(G_r, r, n // G_r.n)
    big_s = _scale(G_s, s, n // G_s.n)
    e_s = edge_off_cycle(big_s, girth_cycle(big_s))
    e_r = big_r.edges()[0]
    G = connect_switch(big_r, e_r, big_s, e_s)
    return finish(
        G,
        BabiParams(r, s, g),
        f"compose_babi: {n // G_r.n} x {r}-regular ({G_r.n}) and {n // G_s.n} x {s}-regular ({G_s.n}), "
        f"switched {e_r} with {e_s}; common order lcm {n} instead of the product {G_r.n * G_s.n}",
        2 * n,
    )
