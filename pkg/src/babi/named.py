"""Providers for the specific cages used by the constructions.

Every provider checks order, degrees and girth before returning.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .geometry import levi, pg2
from .graph import BabiParams, Graph, edge_census, girth, verify_babi
from .graph6 import read_graph6

ASSET_ENV = "BABI_ASSETS"
DEFAULT_ASSET_DIR = Path(__file__).parent / "data"


class NamedGraphError(AssertionError):
    """A provider produced a graph that misses its stated parameters."""


class AssetNotFoundError(FileNotFoundError):
    pass


class AssetValidationError(ValueError):
    pass


def _regular(G: Graph, k: int, g: int, order: int, name: str) -> Graph:
    if G.n != order:
        raise NamedGraphError(f"{name}: order {G.n}, expected {order}")
    if set(G.degrees()) != {k}:
        raise NamedGraphError(f"{name}: not {k}-regular")
    if girth(G) != g:
        raise NamedGraphError(f"{name}: girth {girth(G)}, expected {g}")
    return G


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, a in enumerate(pairs)
        for j, b in enumerate(pairs)
        if i < j and not set(a) & set(b)
    ]
    return _regular(Graph.from_edges(10, edges), 3, 5, 10, "petersen")


# House of Graphs no. 1288, vertices 1..19.
ROBERTSON_TABLE: dict[int, tuple[int, ...]] = {
    1: (2, 3, 4, 5),
    2: (1, 8, 9, 10),
    3: (1, 12, 14, 16),
    4: (1, 11, 18, 19),
    5: (1, 13, 15, 17),
    6: (7, 14, 17, 19),
    7: (6, 15, 16, 18),
    8: (2, 13, 14, 18),
    9: (2, 11, 16, 17),
    10: (2, 12, 15, 19),
    11: (4, 9, 14, 15),
    12: (3, 10, 17, 18),
    13: (5, 8, 16, 19),
    14: (3, 6, 8, 11),
    15: (5, 7, 10, 11),
    16: (3, 7, 9, 13),
    17: (5, 6, 9, 12),
    18: (4, 7, 8, 12),
    19: (4, 6, 10, 13),
}


def robertson() -> Graph:
    """The (4,5)-cage. Vertex ``i`` of the table is vertex ``i - 1`` here."""
    adj = [[w - 1 for w in ROBERTSON_TABLE[v]] for v in range(1, 20)]
    return _regular(Graph(19, adj), 4, 5, 19, "robertson")


def heawood() -> Graph:
    return _regular(levi(pg2(2)), 3, 6, 14, "heawood")


def hoffman_singleton() -> Graph:
    """Pentagons P_h, pentagrams Q_h; P_{h,i} ~ Q_{k, hk+i mod 5}.

    P_{h,i} is vertex ``5h + i`` and Q_{h,i} is vertex ``25 + 5h + i``.
    """
    def P(h: int, i: int) -> int:
        return 5 * h + i % 5

    def Q(h: int, i: int) -> int:
        return 25 + 5 * h + i % 5

    edges = set()
    for h in range(5):
        for i in range(5):
            edges.add(tuple(sorted((P(h, i), P(h, i + 1)))))
            edges.add(tuple(sorted((Q(h, i), Q(h, i + 2)))))
            for k in range(5):
                edges.add((P(h, i), Q(k, h * k + i)))
    return _regular(Graph.from_edges(50, edges), 7, 5, 50, "hoffman_singleton")


# -- Robertson-Wegner graph -------------------------------------------------

class ZPhi(tuple):
    """``a + b*phi`` with integer a, b and phi^2 = phi + 1."""

    def __new__(cls, a: int, b: int = 0):
        return super().__new__(cls, (a, b))

    def __add__(self, o):
        return ZPhi(self[0] + o[0], self[1] + o[1])

    def __sub__(self, o):
        return ZPhi(self[0] - o[0], self[1] - o[1])

    def __neg__(self):
        return ZPhi(-self[0], -self[1])

    def __mul__(self, o):
        a, b = self
        c, d = o
        return ZPhi(a * c + b * d, a * d + b * c + b * d)

    def sign(self) -> int:
        # 2(a + b*phi) = (2a + b) + b*sqrt(5)
        x, y = 2 * self[0] + self[1], self[1]
        sx, sy = (x > 0) - (x < 0), (y > 0) - (y < 0)
        if sx == sy or sy == 0:
            return sx
        if sx == 0:
            return sy
        return sx if x * x > 5 * y * y else sy


ONE, PHI, INV_PHI, ZERO = ZPhi(1), ZPhi(0, 1), ZPhi(-1, 1), ZPhi(0)


def dodecahedron_coordinates() -> list[tuple[ZPhi, ZPhi, ZPhi]]:
    pts = []
    for sx, sy, sz in itertools.product((1, -1), repeat=3):
        pts.append((ZPhi(sx), ZPhi(sy), ZPhi(sz)))
    for s1, s2 in itertools.product((1, -1), repeat=2):
        a, b = ZPhi(s1) * INV_PHI, ZPhi(s2) * PHI
        pts.append((ZERO, a, b))
        pts.append((a, b, ZERO))
        pts.append((b, ZERO, a))
    return pts


def _dist2(p, q) -> ZPhi:
    total = ZERO
    for x, y in zip(p, q):
        d = x - y
        total = total + d * d
    return total


@dataclass(frozen=True)
class RobertsonWegner:
    """The (5,5)-cage on 30 vertices with its dodecahedral scaffolding.

    Vertices 0..19 are the dodecahedron vertices, 20..29 the tetrahedral
    vertices. ``tetrahedra[t]`` lists the four dodecahedron vertices of
    tetrahedral vertex ``20 + t``; ``cube_of[t]`` is the index of its cube.
    """

    graph: Graph
    dodecahedron: Graph
    coords: tuple
    cubes: tuple[tuple[int, ...], ...]
    tetrahedra: tuple[tuple[int, ...], ...]
    cube_of: tuple[int, ...]


def _find_cubes(coords, near: list[set[int]]) -> list[tuple[int, ...]]:
    index = {c: i for i, c in enumerate(coords)}

    def at(vec):
        return index.get(tuple(vec))

    def comb(*terms):
        out = [ZERO, ZERO, ZERO]
        for k, v in terms:
            for a in range(3):
                out[a] = out[a] + ZPhi(k) * coords[v][a]
        return out

    cubes = set()
    for v in range(len(coords)):
        for a, b, c in itertools.combinations(sorted(near[v]), 3):
            extra = [
                at(comb((1, a), (1, b), (-1, v))),
                at(comb((1, a), (1, c), (-1, v))),
                at(comb((1, b), (1, c), (-1, v))),
                at(comb((1, a), (1, b), (1, c), (-2, v))),
            ]
            if None in extra:
                continue
            verts = frozenset([v, a, b, c, *extra])
            if len(verts) != 8:
                continue
            if all(sum(1 for w in verts if w in near[u]) == 3 for u in verts):
                cubes.add(tuple(sorted(verts)))
    return sorted(cubes)


def robertson_wegner() -> RobertsonWegner:
    coords = dodecahedron_coordinates()
    n = len(coords)
    d2 = {(i, j): _dist2(coords[i], coords[j]) for i in range(n) for j in range(i + 1, n)}
    shortest = None
    for d in set(d2.values()):
        if shortest is None or (d - shortest).sign() < 0:
            shortest = d
    dodeca = Graph.from_edges(n, [e for e, d in d2.items() if d == shortest])
    _regular(dodeca, 3, 5, 20, "dodecahedron")

    cube_edge = ZPhi(4)
    near = [set() for _ in range(n)]
    for (i, j), d in d2.items():
        if d == cube_edge:
            near[i].add(j)
            near[j].add(i)
    cubes = _find_cubes(coords, near)
    if len(cubes) != 5:
        raise NamedGraphError(f"found {len(cubes)} inscribed cubes, expected 5")

    tetrahedra: list[tuple[int, ...]] = []
    cube_of: list[int] = []
    for ci, cube in enumerate(cubes):
        start = cube[0]
        side_a = {start} | {w for w in cube if w != start and d2[min(start, w), max(start, w)] == ZPhi(8)}
        side_b = set(cube) - side_a
        for side in (side_a, side_b):
            if len(side) != 4:
                raise NamedGraphError("cube does not split into two tetrahedra")
            tetrahedra.append(tuple(sorted(side)))
            cube_of.append(ci)

    edges = set(dodeca.edges())
    for t, verts in enumerate(tetrahedra):
        edges.update((v, n + t) for v in verts)
    for t, u in itertools.combinations(range(len(tetrahedra)), 2):
        if cube_of[t] == cube_of[u]:
            edges.add((n + t, n + u))
    G = _regular(Graph.from_edges(n + len(tetrahedra), edges), 5, 5, 30, "robertson_wegner")
    return RobertsonWegner(
        graph=G,
        dodecahedron=dodeca,
        coords=tuple(coords),
        cubes=tuple(cubes),
        tetrahedra=tuple(tetrahedra),
        cube_of=tuple(cube_of),
    )


# -- data assets ---------------------------------------------------------------

@dataclass(frozen=True)
class NamedGraphEntry:
    name: str
    filename: str
    order: int
    girth: int
    regular: int | None = None
    params: BabiParams | None = None
    census: tuple[int, int] | None = None  # (fat, thin)
    diameter: int | None = None
    source: str = "data-file"


ASSETS: dict[str, NamedGraphEntry] = {
    e.name: e
    for e in (
        NamedGraphEntry("cage_6_5", "cage_6_5.g6", order=40, girth=5, regular=6, diameter=3),
        NamedGraphEntry("hog_53705", "hog_53705.g6", order=14, girth=5, params=BabiParams(2, 4, 5)),
        NamedGraphEntry(
            "hog_54321", "hog_54321.g6", order=12, girth=6, params=BabiParams(2, 3, 6), census=(6, 3)
        ),
    )
}


def asset_dir(override: str | os.PathLike | None = None) -> Path:
    """Asset directory: explicit argument, then ``$BABI_ASSETS``, then the packaged data."""
    if override is not None:
        return Path(override)
    env = os.environ.get(ASSET_ENV)
    if env:
        return Path(env)
    return DEFAULT_ASSET_DIR


def load_named(name: str, path: str | os.PathLike | None = None) -> Graph:
    """Load and validate a graph6 asset.

    ``path`` may be the asset file itself or a directory holding it.
    """
    try:
        entry = ASSETS[name]
    except KeyError:
        raise AssetNotFoundError(f"unknown asset {name!r}; known: {sorted(ASSETS)}") from None
    p = Path(path) if path is not None else asset_dir()
    if p.is_dir() or path is None:
        p = p / entry.filename
    if not p.is_file():
        raise AssetNotFoundError(f"asset file {p} not found")
    G = read_graph6(p)

    problems = []
    if G.n != entry.order:
        problems.append(f"order {G.n} != {entry.order}")
    if entry.regular is not None:
        if set(G.degrees()) != {entry.regular}:
            problems.append(f"not {entry.regular}-regular: {dict(Counter(G.degrees()))}")
        if girth(G) != entry.girth:
            problems.append(f"girth {girth(G)} != {entry.girth}")
    if entry.params is not None:
        cert = verify_babi(G, entry.params)
        if not cert.balanced:
            problems.append(f"fails {entry.params}-babi check")
        elif entry.census is not None:
            c = edge_census(G, entry.params)
            if (c.f, c.t) != entry.census:
                problems.append(f"census fat={c.f} thin={c.t}, expected {entry.census}")
    if entry.diameter is not None and not problems and G.diameter() != entry.diameter:
        problems.append(f"diameter {G.diameter()} != {entry.diameter}")
    if problems:
        raise AssetValidationError(f"{name} ({p}): " + "; ".join(problems))
    return G
