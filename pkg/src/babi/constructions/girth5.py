"""Girth-5 babi-graphs: deletions from cages, explicit graphs and amalgamation."""

from __future__ import annotations

import itertools
import os

import networkx as nx

from ..bounds import semireg5_lower
from ..geometry import biaffine, fano_subplane_pg24, levi, pg2
from ..graph import BabiParams, Graph, girth, verify_babi
from ..named import load_named, petersen, robertson, robertson_wegner, hoffman_singleton
from ._common import Built, ConstructionError, finish, remap_note


def _lowest_path(G: Graph, length: int, start: int | None = None, end: int | None = None) -> list[int]:
    """Lexicographically first path on ``length`` vertices with optional fixed ends."""
    def extend(path: list[int]):
        if len(path) == length:
            if end is None or path[-1] == end:
                yield path
            return
        for w in G.neighbors(path[-1]):
            if w not in path:
                yield from extend(path + [w])

    starts = [start] if start is not None else range(G.n)
    for v in starts:
        for p in extend([v]):
            return p
    raise ConstructionError(f"no path on {length} vertices")


def babi_235() -> Built:
    """Petersen minus both ends of its lowest edge."""
    G = petersen()
    u, v = G.edges()[0]
    H, remap = G.delete_vertices([u, v])
    return finish(H, BabiParams(2, 3, 5), f"babi_235: petersen minus edge {u}-{v}; {remap_note(remap)}", 8)


def babi_345() -> Built:
    """Robertson graph minus the vertices of its lowest 3-path."""
    G = robertson()
    path = _lowest_path(G, 3)
    H, remap = G.delete_vertices(path)
    return finish(
        H,
        BabiParams(3, 4, 5),
        f"babi_345: robertson minus path {path}; {remap_note(remap)}",
        semireg5_lower(3).value,
    )


def babi_565(assets: str | os.PathLike | None = None) -> Built:
    """(6,5)-cage minus a 4-path joining two vertices at distance 3."""
    G = load_named("cage_6_5", assets)
    for u in range(G.n):
        dist = G.distances_from(u)
        far = [w for w in range(G.n) if dist[w] == 3]
        if far:
            path = _lowest_path(G, 4, start=u, end=far[0])
            break
    else:
        raise ConstructionError("the (6,5)-cage asset has no pair at distance 3")
    H, remap = G.delete_vertices(path)
    return finish(
        H,
        BabiParams(5, 6, 5),
        f"babi_565: (6,5)-cage minus path {path}; {remap_note(remap)}",
        semireg5_lower(5).value,
    )


def babi_675(max_tries: int = 25) -> Built:
    """Hoffman-Singleton minus one edge of a 1-factor, then 6 more factor edges."""
    G = hoffman_singleton()
    nxg = nx.Graph(G.edges())
    p = BabiParams(6, 7, 5)
    matching = sorted(tuple(sorted(e)) for e in nx.max_weight_matching(nxg, maxcardinality=True))
    if len(matching) != G.n // 2:
        raise ConstructionError("no 1-factor found")
    for attempt, (u1, u2) in enumerate(matching[:max_tries]):
        rest = [e for e in matching if e != (u1, u2)]
        hit = set(G.neighbors(u1)) | set(G.neighbors(u2))
        mixed = [e for e in rest if (e[0] in hit) != (e[1] in hit)]
        both = [e for e in rest if e[0] not in hit and e[1] not in hit]
        if len(mixed) != 12 or len(both) != 12:
            continue
        H, remap = G.delete_vertices([u1, u2])
        H = H.remove_edges([(remap[a], remap[b]) for a, b in both[:6]])
        how = (
            f"babi_675: hoffman_singleton 1-factor (max matching), deleted factor edge {u1}-{u2} "
            f"(try {attempt}), then factor edges {both[:6]}; {remap_note(remap)}"
        )
        return finish(H, p, how, semireg5_lower(6).value)
    raise ConstructionError("no factor edge gave the 12/12 split")


# Robertson vertices 1..19 are 0..18; the extra pentagon a..e is 19..23.
_PENTAGON = "abcde"
_EXTRA_EDGES_455 = ("a11", "a12", "a13", "b2", "b6", "c3", "c15", "d8", "d17", "e1", "e7")
_FIVES_455 = ("1", "2", "3", "6", "7", "8", "11", "12", "13", "15", "17", "a")


def _label_455(tok: str) -> int:
    return 19 + _PENTAGON.index(tok) if tok in _PENTAGON else int(tok) - 1


def babi_455_24() -> Built:
    """Robertson graph plus a pentagon a..e and eleven connecting edges."""
    R = robertson()
    edges = list(R.edges())
    edges += [(19 + i, 19 + (i + 1) % 5) for i in range(5)]
    edges += [(_label_455(t[0]), _label_455(t[1:])) for t in _EXTRA_EDGES_455]
    G = Graph.from_edges(24, edges)
    fives = {v for v in range(24) if G.degree(v) == 5}
    if fives != {_label_455(t) for t in _FIVES_455}:
        raise ConstructionError(f"unexpected degree-5 set {sorted(fives)}")
    return finish(
        G, BabiParams(4, 5, 5), "babi_455_24: robertson (1..19 -> 0..18) + pentagon a..e (19..23) + 11 edges", 24
    )


def babi_455_28() -> Built:
    """Levi graph of PG(2,4) minus a Fano subplane, plus the tangent matching."""
    plane = pg2(4)
    fano = fano_subplane_pg24()
    np_ = len(plane.points)
    L = levi(plane)
    H, remap = L.delete_vertices(list(fano.points) + [np_ + l for l in fano.lines])
    H = H.add_edges([(remap[np_ + e], remap[np_ + f]) for e, f in fano.tangents])
    return finish(
        H,
        BabiParams(4, 5, 5),
        f"babi_455_28: levi(PG(2,4)) minus Fano points {list(fano.points)} and lines "
        f"{list(fano.lines)}, plus tangent pairs {[list(t) for t in fano.tangents]}",
        28,
    )


def _cube_faces(cube: tuple[int, ...], D: Graph, common) -> list[tuple[int, int, int, int]]:
    """Faces of an inscribed cube as cyclic 4-tuples; cube edges are pentagon diagonals."""
    adj = {v: [w for w in cube if w != v and len(common(v, w)) == 1] for v in cube}
    faces = set()
    for a in cube:
        for b, d in itertools.combinations(adj[a], 2):
            for c in set(adj[b]) & set(adj[d]):
                if c != a:
                    faces.add(frozenset((a, b, c, d)))
    out = []
    for f in sorted(sorted(f) for f in faces):
        a = f[0]
        b, d = [w for w in adj[a] if w in f]
        c = next(w for w in f if w not in (a, b, d))
        out.append((a, b, c, d))
    return out


def babi_3555_from_rw() -> Built:
    """Robertson-Wegner graph minus one cube's two tetrahedral vertices and ten edges.

    The listed deletion includes the edge E1F1; keeping it is what the degree
    count requires (see the module docs), so only the other ten are removed.
    """
    rw = robertson_wegner()
    D = rw.dodecahedron
    G = rw.graph
    p = BabiParams(3, 5, 5)

    def common(x: int, y: int) -> set[int]:
        return set(D.neighbors(x)) & set(D.neighbors(y))

    def apex(x: int, y: int) -> int | None:
        c = common(x, y)
        return next(iter(c)) if len(c) == 1 else None

    def pentagon(a: int, e: int, b: int) -> tuple[int, int] | None:
        """The face a-e-b-g-h: returns (g, h) with b~g, g~h, h~a."""
        for g in D.neighbors(b):
            if g == e:
                continue
            for h in D.neighbors(g):
                if h not in (b, e, a) and D.has_edge(h, a):
                    return g, h
        return None

    for ci, cube in enumerate(rw.cubes):
        tets = [20 + t for t, c in enumerate(rw.cube_of) if c == ci]
        faces = _cube_faces(cube, D, common)
        for f1 in faces:
            f2_set = set(cube) - set(f1)
            for rot in range(4):
                A1, B1, C1, D1 = f1[rot:] + f1[:rot]
                # opposite vertices: X2 is the cube neighbour of X1 in the other face
                nbr2 = {}
                for x in (A1, B1, C1, D1):
                    cand = [w for w in f2_set if len(common(x, w)) == 1]
                    if len(cand) != 1:
                        break
                    nbr2[x] = cand[0]
                else:
                    A2, B2, C2, D2 = (nbr2[x] for x in (A1, B1, C1, D1))
                    E1, F1 = apex(A1, B1), apex(C1, D1)
                    E2, F2 = apex(A2, B2), apex(C2, D2)
                    if None in (E1, F1, E2, F2) or not (D.has_edge(E1, F1) and D.has_edge(E2, F2)):
                        continue
                    gh, kl = pentagon(A2, E2, B2), pentagon(C2, F2, D2)
                    if gh is None or kl is None:
                        continue
                    (G2, H2), (K2, L2) = gh, kl
                    removed = [
                        (A1, E1), (B1, E1), (C1, F1), (D1, F1),
                        (A2, H2), (H2, G2), (G2, B2), (C2, L2), (L2, K2), (K2, D2),
                    ]
                    RWp, remap = G.delete_vertices(tets)
                    H = RWp.remove_edges([(remap[x], remap[y]) for x, y in removed])
                    cert = verify_babi(H, p)
                    if not cert.balanced:
                        continue
                    labels = dict(A1=A1, B1=B1, C1=C1, D1=D1, E1=E1, F1=F1, A2=A2, B2=B2, C2=C2,
                                  D2=D2, E2=E2, F2=F2, G2=G2, H2=H2, K2=K2, L2=L2)
                    how = (
                        f"babi_3555: robertson_wegner minus tetrahedral vertices {tets} of cube {ci}, "
                        f"labels {labels}, edges removed {removed} (E1F1 kept); {remap_note(remap)}"
                    )
                    return finish(H, p, how, 28)
    raise ConstructionError("no cube labelling yields a (3,5;5)-babi-graph")


def amalgamate(q: int, kind: int, gamma: Graph) -> Built:
    """Copy ``gamma`` onto every amalgamation class of a biaffine plane's Levi graph."""
    plane = biaffine(q, kind)
    size = q if kind == 1 else q - 1
    if gamma.n != size:
        raise ConstructionError(f"gamma must have {size} vertices, has {gamma.n}")
    degs = set(gamma.degrees())
    if len(degs) != 1 or 0 in degs:
        raise ConstructionError("gamma must be k-regular with k >= 1")
    k = degs.pop()
    if girth(gamma) < 5:
        raise ConstructionError(f"gamma has girth {girth(gamma)} < 5")
    L = levi(plane)
    new = [(cls[a], cls[b]) for cls in plane.classes for a, b in gamma.edges()]
    G = L.add_edges(new)
    v = 2 * q * q if kind == 1 else 2 * q * q - 2
    return finish(
        G,
        BabiParams(q, q + k, 5),
        f"amalgamate: {k}-regular gamma on {size} vertices into biaffine type {kind} of PG(2,{q})",
        v,
    )
