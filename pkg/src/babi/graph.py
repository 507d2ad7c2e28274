"""Simple undirected graphs, girth, babi verification and the switching operators."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Sequence

Edge = tuple[int, int]


@total_ordering
class Acyclic:
    """Girth of a forest. Compares greater than every integer."""

    _instance: Acyclic | None = None

    def __new__(cls) -> Acyclic:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Acyclic)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Acyclic)):
            return False
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, int):
            return True
        if isinstance(other, Acyclic):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("acyclic")

    def __repr__(self) -> str:
        return "ACYCLIC"

    def __str__(self) -> str:
        return "acyclic"


ACYCLIC = Acyclic()


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[i]`` is a frozenset of neighbours. Use :meth:`neighbors` for the
    sorted view.
    """

    __slots__ = ("n", "adj", "_masks")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows, expected {n}")
        rows = tuple(frozenset(a) for a in adj)
        for i, row in enumerate(rows):
            if i in row:
                raise ValueError(f"loop at vertex {i}")
            for j in row:
                if not 0 <= j < n:
                    raise ValueError(f"neighbour {j} of {i} out of range")
                if i not in rows[j]:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        self.n = n
        self.adj = rows
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [()] * n)

    def copy(self) -> Graph:
        return Graph(self.n, self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(sum(1 << j for j in row) for row in self.adj)
        return self._masks

    def add_edges(self, edges: Iterable[Edge]) -> Graph:
        adj = [set(a) for a in self.adj]
        for u, v in edges:
            if v in adj[u]:
                raise ValueError(f"edge {(u, v)} already present")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(self.n, adj)

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        adj = [set(a) for a in self.adj]
        for u, v in edges:
            if v not in adj[u]:
                raise ValueError(f"edge {(u, v)} not present")
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph(self.n, adj)

    def delete_vertices(self, doomed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Remove vertices and re-index densely. Returns the graph and the old->new map."""
        gone = set(doomed)
        keep = [v for v in range(self.n) if v not in gone]
        remap = {old: new for new, old in enumerate(keep)}
        adj = [[remap[w] for w in self.adj[v] if w not in gone] for v in keep]
        return Graph(len(keep), adj), remap

    def induced(self, vertices: Sequence[int]) -> Graph:
        remap = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), [[remap[w] for w in self.adj[v] if w in remap] for v in vertices])

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        adj = [set(a) for a in self.adj] + [{w + shift for w in a} for a in other.adj]
        return Graph(self.n + other.n, adj)

    def distances_from(self, source: int) -> list[int | None]:
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d is not None for d in self.distances_from(0))

    def diameter(self) -> int | None:
        """Largest distance, or ``None`` when disconnected."""
        best = 0
        for v in range(self.n):
            dist = self.distances_from(v)
            if any(d is None for d in dist):
                return None
            best = max(best, max(dist, default=0))
        return best

    def is_bipartite(self) -> bool:
        side: list[int | None] = [None] * self.n
        for root in range(self.n):
            if side[root] is not None:
                continue
            side[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if side[w] is None:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True


def girth(G: Graph) -> int | Acyclic:
    """Length of a shortest cycle, or ``ACYCLIC`` for forests.

    BFS distance shells from every root, as bitsets. An edge inside shell k
    closes an odd cycle of length 2k+1; a vertex of shell k+1 with two
    neighbours in shell k closes an even cycle of length 2k+2. Rooted on a
    shortest cycle one of these is hit at exactly the girth.
    """
    masks = G.masks()
    best: int | None = None
    for root in range(G.n):
        seen = 1 << root
        shell = 1 << root
        k = 0
        while shell:
            if best is not None and 2 * k + 1 >= best:
                break
            # odd closure inside shell k
            if k > 0:
                rest = shell
                while rest:
                    low = rest & -rest
                    v = low.bit_length() - 1
                    rest ^= low
                    if masks[v] & shell:
                        best = 2 * k + 1
                        break
                if best == 2 * k + 1:
                    break
            if best is not None and 2 * k + 2 >= best:
                break
            nxt = 0
            rest = shell
            while rest:
                low = rest & -rest
                rest ^= low
                nxt |= masks[low.bit_length() - 1]
            nxt &= ~seen
            rest = nxt
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                if (masks[w] & shell).bit_count() >= 2:
                    best = 2 * k + 2
                    break
            if best == 2 * k + 2:
                break
            seen |= nxt
            shell = nxt
            k += 1
    return ACYCLIC if best is None else best


def girth_cycle(G: Graph) -> list[int] | None:
    """A shortest cycle as a vertex list, from the lowest root that realises the girth."""
    g = girth(G)
    if g is ACYCLIC:
        return None
    for root in range(G.n):
        parent = {root: -1}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(G.adj[u]):
                if w == parent[u]:
                    continue
                if w in depth:
                    if depth[u] + depth[w] + 1 != g:
                        continue
                    left = _path_to_root(parent, u)
                    right = _path_to_root(parent, w)
                    if set(left[:-1]) & set(right[:-1]):
                        continue
                    return _join(left, right)
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    raise AssertionError("girth attained but no cycle reconstructed")


def _path_to_root(parent: dict[int, int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _join(left: list[int], right: list[int]) -> list[int]:
    # left = u..root, right = w..root; cycle root..u, w..(before root)
    return left[::-1] + right[:-1]


@dataclass(frozen=True)
class BabiParams:
    r: int
    s: int
    g: int

    def __post_init__(self) -> None:
        if not 1 <= self.r < self.s:
            raise ValueError(f"need 1 <= r < s, got r={self.r}, s={self.s}")
        if self.g < 3:
            raise ValueError(f"need g >= 3, got {self.g}")

    @classmethod
    def parse(cls, text: str) -> BabiParams:
        parts = [int(p) for p in text.replace(";", ",").split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected r,s,g, got {text!r}")
        return cls(*parts)

    def __str__(self) -> str:
        return f"({self.r},{self.s};{self.g})"


@dataclass(frozen=True)
class EdgeCensus:
    f: int
    t: int
    m: int
    v: int

    def to_dict(self) -> dict[str, int]:
        return {"fat": self.f, "thin": self.t, "mixed": self.m, "order": self.v}


@dataclass
class Certificate:
    order: int
    degrees: dict[int, int]
    girth: int | Acyclic
    balanced: bool
    census: EdgeCensus | None
    provenance: str = ""
    params: BabiParams | None = None
    connected: bool = True
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "schema": 1,
            "order": self.order,
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
            "girth": self.girth if isinstance(self.girth, int) else "acyclic",
            "balanced": self.balanced,
            "census": self.census.to_dict() if self.census else None,
            "connected": self.connected,
            "provenance": self.provenance,
        }
        if self.params is not None:
            out["params"] = {"r": self.params.r, "s": self.params.s, "g": self.params.g}
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _census(G: Graph, r: int, s: int) -> EdgeCensus:
    deg = G.degrees()
    f = t = m = 0
    for u, v in G.edges():
        kinds = (deg[u] == s) + (deg[v] == s)
        if kinds == 2:
            f += 1
        elif kinds == 0:
            t += 1
        else:
            m += 1
    return EdgeCensus(f=f, t=t, m=m, v=G.n)


def verify_babi(G: Graph, p: BabiParams, provenance: str = "") -> Certificate:
    """Check the (r,s;g) babi conditions. Failures are reported, never raised."""
    counts = Counter(G.degrees())
    g = girth(G)
    half = G.n // 2
    balanced = (
        G.n % 2 == 0
        and G.n > 0
        and set(counts) == {p.r, p.s}
        and counts[p.r] == half
        and counts[p.s] == half
        and g == p.g
    )
    census = _census(G, p.r, p.s) if set(counts) <= {p.r, p.s} else None
    return Certificate(
        order=G.n,
        degrees=dict(counts),
        girth=g,
        balanced=balanced,
        census=census,
        provenance=provenance,
        params=p,
        connected=G.is_connected(),
    )


def edge_census(G: Graph, p: BabiParams) -> EdgeCensus:
    bad = [v for v in range(G.n) if G.degree(v) not in (p.r, p.s)]
    if bad:
        raise ValueError(f"vertex {bad[0]} has degree {G.degree(bad[0])}, not in {{{p.r}, {p.s}}}")
    return _census(G, p.r, p.s)


def fat_degrees(G: Graph, s: int) -> list[int]:
    """Number of fat edges through each vertex (0 for thin vertices)."""
    deg = G.degrees()
    return [sum(1 for w in G.adj[v] if deg[w] == s) if deg[v] == s else 0 for v in range(G.n)]


def max_fat_edge_sum(G: Graph, p: BabiParams) -> int:
    if not verify_babi(G, p).balanced:
        raise ValueError(f"graph is not a {p}-babi-graph")
    degf = fat_degrees(G, p.s)
    deg = G.degrees()
    return max(
        (degf[u] + degf[v] for u, v in G.edges() if deg[u] == p.s and deg[v] == p.s),
        default=0,
    )


def _canon_edge(G: Graph, e: Edge) -> Edge:
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise ValueError(f"{e} is not an edge")
    return u, v


def connect_switch(G1: Graph, e1: Edge, G2: Graph, e2: Edge) -> Graph:
    """Disjoint union minus ``e1``, ``e2`` plus the cross edges ``x1x2`` and ``y1y2``.

    ``G2``'s vertices are shifted by ``G1.n``. Degrees are preserved.
    """
    if G1 is G2:
        raise ValueError("G1 and G2 must be distinct graph objects; pass a copy")
    x1, y1 = _canon_edge(G1, e1)
    x2, y2 = _canon_edge(G2, e2)
    shift = G1.n
    union = G1.disjoint_union(G2)
    return union.remove_edges([(x1, y1), (x2 + shift, y2 + shift)]).add_edges(
        [(x1, x2 + shift), (y1, y2 + shift)]
    )


def edge_off_cycle(G: Graph, cycle: Sequence[int]) -> Edge:
    on = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    for e in G.edges():
        if frozenset(e) not in on:
            return e
    raise ValueError("every edge lies on the cycle")


def replicate(G: Graph, n: int) -> Graph:
    """A k-regular graph of order ``n * G.n`` and the same girth (k > 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    degs = set(G.degrees())
    if len(degs) != 1:
        raise ValueError("G must be regular")
    k = degs.pop()
    if k <= 2:
        raise ValueError(f"replication needs degree > 2, got {k}")
    cycle = girth_cycle(G)
    if cycle is None:
        raise ValueError("G must contain a cycle")
    e = edge_off_cycle(G, cycle)
    out = G.copy()
    for _ in range(n - 1):
        out = connect_switch(G.copy(), e, out, out.edges()[0])
    return out


def glue_leaves(G: Graph, s: int) -> Graph:
    """Attach ``s - deg(u)`` pendant vertices to every vertex ``u``."""
    adj = [set(a) for a in G.adj]
    for u in range(G.n):
        need = s - G.degree(u)
        if need < 0:
            raise ValueError(f"vertex {u} has degree {G.degree(u)} > {s}")
        for _ in range(need):
            adj.append({u})
            adj[u].add(len(adj) - 1)
    return Graph(len(adj), adj)


def strip_leaves(G: Graph) -> Graph:
    return G.delete_vertices([v for v in range(G.n) if G.degree(v) == 1])[0]
