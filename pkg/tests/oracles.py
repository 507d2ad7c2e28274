"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's search or canonical-form code.
"""

from __future__ import annotations

import itertools

import networkx as nx


def brute_girth(n: int, edges) -> int | None:
    """Shortest cycle by trying every vertex sequence; None for forests. n <= 10."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for length in range(3, n + 1):
        for combo in itertools.combinations(range(n), length):
            first = combo[0]
            for rest in itertools.permutations(combo[1:]):
                if rest[0] > rest[-1]:
                    continue
                cyc = (first,) + rest
                if all(cyc[(i + 1) % length] in adj[cyc[i]] for i in range(length)):
                    return length
    return None


def _dist_at_most(adj, a: int, b: int, limit: int) -> bool:
    frontier, seen = {a}, {a}
    for _ in range(limit):
        frontier = {w for x in frontier for w in adj[x]} - seen
        if b in frontier:
            return True
        seen |= frontier
    return False


def labeled_degree_graphs(degrees: list[int], min_girth: int = 3):
    """Every labelled simple graph with this degree sequence and no cycle shorter than min_girth.

    Pairs are decided one at a time in lexicographic order; no symmetry is exploited.
    """
    n = len(degrees)
    adj: list[set[int]] = [set() for _ in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    left = list(degrees)
    chosen: list[tuple[int, int]] = []

    def rec(k: int):
        if k == len(pairs):
            if not any(left):
                yield list(chosen)
            return
        i, j = pairs[k]
        # undecided partners: j..n-1 for i; i..n-1 (minus itself) for any later vertex
        if left[i] > n - j or any(left[w] > n - 1 - i for w in range(i + 1, n)):
            return
        if left[i] and left[j] and not _dist_at_most(adj, i, j, min_girth - 2):
            left[i] -= 1
            left[j] -= 1
            chosen.append((i, j))
            adj[i].add(j)
            adj[j].add(i)
            yield from rec(k + 1)
            adj[i].discard(j)
            adj[j].discard(i)
            chosen.pop()
            left[i] += 1
            left[j] += 1
        # (i, n-1) is the last pair that can still serve vertex i
        if j == n - 1 and left[i]:
            return
        yield from rec(k + 1)

    yield from rec(0)


def naive_babi_classes(r: int, s: int, g: int, v: int) -> list[nx.Graph]:
    """Isomorphism classes of (r,s;g)-babi-graphs on v vertices, by brute force."""
    if v % 2:
        return []
    reps: dict[tuple, list[nx.Graph]] = {}
    for edges in labeled_degree_graphs([s] * (v // 2) + [r] * (v // 2), g):
        G = nx.empty_graph(v)
        G.add_edges_from(edges)
        if nx.girth(G) != g:
            continue
        inv = (tuple(sorted(nx.triangles(G).values())), tuple(sorted(d for _, d in G.degree())))
        bucket = reps.setdefault(inv, [])
        if not any(nx.is_isomorphic(G, H) for H in bucket):
            bucket.append(G)
    return [H for b in reps.values() for H in b]


def naive_exists(r: int, s: int, g: int, v: int) -> bool:
    """Whether some labelled (r,s;g)-babi-graph on v vertices exists."""
    if v % 2:
        return False
    for edges in labeled_degree_graphs([s] * (v // 2) + [r] * (v // 2), g):
        G = nx.empty_graph(v)
        G.add_edges_from(edges)
        if nx.girth(G) == g:
            return True
    return False


def naive_min_order(r: int, s: int, g: int, v_max: int) -> int | None:
    """Smallest even order <= v_max carrying an (r,s;g)-babi-graph, or None."""
    for v in range(2, v_max + 1, 2):
        if naive_exists(r, s, g, v):
            return v
    return None
