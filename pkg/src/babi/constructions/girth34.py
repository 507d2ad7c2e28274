"""Exact babi-cages of girth 3 and 4."""

from __future__ import annotations

from ..bounds import babi_g3_exact, babi_g4_exact
from ..graph import BabiParams, Graph
from ._common import Built, finish


def one_factorization(n: int) -> list[list[tuple[int, int]]]:
    """Round-robin decomposition of K_n (n even) into n-1 perfect matchings."""
    if n % 2:
        raise ValueError("K_n has a 1-factorization only for even n")
    m = n - 1
    rounds = []
    for t in range(m):
        pairs = [(t, n - 1)]
        for k in range(1, n // 2):
            pairs.append(((t + k) % m, (t - k) % m))
        rounds.append(pairs)
    return rounds


def hamilton_decomposition(n: int) -> list[list[int]]:
    """Walecki decomposition of K_n (n odd) into (n-1)/2 Hamilton cycles, as vertex lists."""
    if n % 2 == 0 or n < 3:
        raise ValueError("K_n splits into Hamilton cycles only for odd n >= 3")
    m = (n - 1) // 2
    hub = n - 1
    cycles = []
    for t in range(m):
        path = [t]
        for k in range(1, m + 1):
            path.append((t + k) % (2 * m))
            if len(path) < 2 * m:
                path.append((t - k) % (2 * m))
        cycles.append([hub] + path[: 2 * m])
    return cycles


def _cycle_edges(cycle: list[int]) -> list[tuple[int, int]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def babi_g3(r: int, s: int) -> Built:
    if r < 2 or s <= r:
        raise ValueError(f"need 2 <= r < s, got r={r}, s={s}")
    p = BabiParams(r, s, 3)
    expected = babi_g3_exact(r, s).value
    if s + 1 >= 2 * r:
        k = s - r + 1
        edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
        edges += [(k + i, (i + j) % k) for i in range(k) for j in range(r)]
        G = Graph.from_edges(2 * k, edges)
        return finish(G, p, f"babi_g3({r},{s}): K_{k} on u, w_i ~ u_(i..i+{r - 1})", expected)

    v = expected
    h = v // 2
    extra = v - s
    U = list(range(h))
    W = list(range(h, v))
    edges = {(a, b) for a in U for b in U if a < b}
    # K_{h,h} minus the matchings u_a w_(a+t), t < extra-1
    edges |= {(a, W[(a + t) % h]) for a in U for t in range(extra - 1, h)}
    W_edges = {(W[a], W[b]) for a in range(h) for b in range(a + 1, h)}
    if h % 2 == 0:
        removed = [e for f in one_factorization(h)[: s - r] for e in f]
    else:
        removed = [e for c in hamilton_decomposition(h)[: (s - r) // 2] for e in _cycle_edges(c)]
    for a, b in removed:
        W_edges.discard((min(W[a], W[b]), max(W[a], W[b])))
    G = Graph.from_edges(v, edges | W_edges)
    how = "1-factors" if h % 2 == 0 else "Hamilton cycles"
    return finish(G, p, f"babi_g3({r},{s}): K_{v} minus {extra - 1} UW matchings and W {how}", expected)


def _gamma2(r: int, s: int) -> tuple[Graph, list[int], list[int]]:
    """Complete bipartite {u,x}-{w,y} minus u_i w_(i+j), j < s-r; returns graph, x and y labels."""
    q = s // 2
    u = list(range(q))
    x = list(range(q, 2 * q))
    w = list(range(2 * q, 3 * q))
    y = list(range(3 * q, 4 * q))
    missing = {(u[i], w[(i + j) % q]) for i in range(q) for j in range(s - r)}
    edges = [(a, b) for a in u + x for b in w + y if (a, b) not in missing]
    return Graph.from_edges(4 * q, edges), x, y


def babi_g4(r: int, s: int) -> Built:
    if r < 2 or s <= r:
        raise ValueError(f"need 2 <= r < s, got r={r}, s={s}")
    p = BabiParams(r, s, 4)
    expected = babi_g4_exact(r, s).value
    if s >= 2 * r:
        d = s - r
        u = list(range(d))
        x = list(range(d, 2 * d))
        w = list(range(2 * d, 3 * d))
        y = list(range(3 * d, 4 * d))
        edges = [(a, b) for a in x for b in y]
        for i in range(1, d + 1):
            for j in range(r):
                edges.append((x[i - 1], w[(i + j) % d]))
                edges.append((y[i - 1], u[(i + j) % d]))
        G = Graph.from_edges(4 * d, edges)
        return finish(G, p, f"babi_g4({r},{s}): K_{d},{d} core with u/w attachments", expected)
    if s % 2 == 0:
        G, _, _ = _gamma2(r, s)
        return finish(G, p, f"babi_g4({r},{s}): K_{s},{s} minus u_i w_(i+j)", expected)
    G, x, y = _gamma2(r, s + 1)
    G = G.remove_edges(list(zip(x, y)))
    return finish(G, p, f"babi_g4({r},{s}): gamma2({r},{s + 1}) minus x_i y_i", expected)
