"""Canonical forms of small vertex-coloured graphs.

Equitable refinement of an ordered partition, then individualisation of the
first non-singleton cell. Children are pruned by twin classes and by the
automorphisms discovered when two leaves give the same code. The canonical
form is the largest leaf code.
"""

from __future__ import annotations

from typing import Sequence

from ..graph import Graph

Cells = list[list[int]]


def refine(masks: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement; new cells are ordered by neighbour-count signature."""
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: Cells = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                m = masks[v]
                sig = tuple((m & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _code(masks: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    code = []
    for v in order:
        m = masks[v]
        row = 0
        while m:
            low = m & -m
            row |= 1 << pos[low.bit_length() - 1]
            m ^= low
        code.append(row)
    return tuple(code)


def _twin_reps(masks: Sequence[int], cell: list[int]) -> list[int]:
    seen: set[int] = set()
    reps = []
    for v in cell:
        if v in seen:
            continue
        reps.append(v)
        for w in cell:
            if w != v and w not in seen and masks[v] & ~(1 << w) == masks[w] & ~(1 << v):
                seen.add(w)
    return reps


class _Labeler:
    def __init__(self, masks: Sequence[int]):
        self.masks = masks
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.first: tuple[tuple[int, ...], list[int]] | None = None
        self.autos: list[list[int]] = []

    def _record_auto(self, a: list[int], b: list[int]) -> None:
        perm = list(range(len(a)))
        for x, y in zip(a, b):
            perm[x] = y
        self.autos.append(perm)

    def _orbit_root(self, fixed: list[int]):
        n = len(self.masks)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.autos:
            if all(perm[x] == x for x in fixed):
                for x in range(n):
                    a, b = find(x), find(perm[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def search(self, cells: Cells, fixed: list[int]) -> None:
        cells = refine(self.masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(self.masks, order)
            if self.first is None:
                self.first = (code, order)
            elif code == self.first[0]:
                self._record_auto(self.first[1], order)
            if self.best is None or code > self.best:
                self.best, self.best_order = code, order
            elif code == self.best and self.best_order is not None:
                self._record_auto(self.best_order, order)
            return
        cell = cells[target]
        explored: list[int] = []
        for x in _twin_reps(self.masks, cell):
            if explored:
                find = self._orbit_root(fixed)
                if any(find(x) == find(y) for y in explored):
                    continue
            rest = [v for v in cell if v != x]
            self.search(cells[:target] + [[x], rest] + cells[target + 1 :], fixed + [x])
            explored.append(x)


def canonical_order(masks: Sequence[int], colors: Sequence) -> list[int]:
    """Vertex order giving the canonical form; ``colors`` must be sortable."""
    n = len(masks)
    if n == 0:
        return []
    by_color: dict = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    cells = [by_color[c] for c in sorted(by_color)]
    lab = _Labeler(masks)
    lab.search(cells, [])
    assert lab.best_order is not None
    return lab.best_order


def canonical_form(masks: Sequence[int], colors: Sequence | None = None) -> tuple:
    """Hashable isomorphism invariant that is complete: equal iff isomorphic (colour-preserving)."""
    if colors is None:
        colors = [0] * len(masks)
    order = canonical_order(masks, colors)
    return (len(masks), tuple(colors[v] for v in order), _code(masks, order))


def graph_canonical_form(G: Graph, colors: Sequence | None = None) -> tuple:
    return canonical_form(G.masks(), colors)


def relabel(G: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is ``order[i]`` of G."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(G.n, [(pos[u], pos[v]) for u, v in G.edges()])


def canonical_graph(G: Graph) -> Graph:
    return relabel(G, canonical_order(G.masks(), [0] * G.n))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.num_edges() == H.num_edges() and graph_canonical_form(G) == graph_canonical_form(H)
