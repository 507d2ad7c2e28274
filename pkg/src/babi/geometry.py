"""Desarguesian planes PG(2,q), biaffine planes, the Fano subplane of PG(2,4) and conics."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .field import FieldTable, gf
from .graph import Graph

Triple = tuple[int, int, int]

# Full pairwise axiom check up to this order, sampled above it.
EXHAUSTIVE_AXIOM_ORDER = 9
SAMPLED_PAIRS = 1000


def normalize(t: Sequence[int], F: FieldTable) -> Triple:
    """Scale a non-zero triple so that its first non-zero coordinate is 1."""
    lead = next((x for x in t if x), None)
    if lead is None:
        raise ValueError("the zero triple is not a projective point")
    s = F.inv[lead]
    return tuple(F.mul[s][x] for x in t)  # type: ignore[return-value]


def projective_triples(F: FieldTable) -> list[Triple]:
    """All normalised triples in lexicographic order."""
    return [t for t in itertools.product(F.elements, repeat=3) if any(t) and normalize(t, F) == t]


def incident(point: Triple, line: Triple, F: FieldTable) -> bool:
    a = F.mul[point[0]][line[0]]
    b = F.mul[point[1]][line[1]]
    c = F.mul[point[2]][line[2]]
    return F.add[F.add[a][b]][c] == 0


@dataclass
class IncidenceStructure:
    """Points, lines and, for each line, the sorted indices of its points."""

    points: list
    lines: list
    incidence: list[tuple[int, ...]]
    name: str = ""
    classes: list[tuple[int, ...]] = field(default_factory=list)

    def point_lines(self) -> list[list[int]]:
        through: list[list[int]] = [[] for _ in self.points]
        for li, pts in enumerate(self.incidence):
            for p in pts:
                through[p].append(li)
        return through

    def point_index(self, label) -> int:
        return self.points.index(label)

    def line_index(self, label) -> int:
        return self.lines.index(label)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "points": [list(p) if isinstance(p, tuple) else p for p in self.points],
            "lines": [list(l) if isinstance(l, tuple) else l for l in self.lines],
            "incidence": [list(pts) for pts in self.incidence],
            "classes": [list(c) for c in self.classes],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class AxiomError(AssertionError):
    pass


def check_projective_axioms(inc: IncidenceStructure, q: int, sample: int | None = None, seed: int = 0) -> None:
    """Raise :class:`AxiomError` unless P1-P4 hold.

    With ``sample`` set, P1/P2 are checked on that many random pairs only.
    """
    n = q * q + q + 1
    if len(inc.points) != n or len(inc.lines) != n:
        raise AxiomError(f"expected {n} points and lines")
    if any(len(pts) != q + 1 for pts in inc.incidence):
        raise AxiomError("P3: a line does not carry q+1 points")
    through = inc.point_lines()
    if any(len(ls) != q + 1 for ls in through):
        raise AxiomError("P4: a point is not on q+1 lines")
    line_sets = [set(pts) for pts in inc.incidence]
    point_sets = [set(ls) for ls in through]
    if sample is None:
        pairs = itertools.combinations(range(n), 2)
    else:
        rng = random.Random(seed)
        pairs = (tuple(rng.sample(range(n), 2)) for _ in range(sample))
    for a, b in pairs:
        if len(point_sets[a] & point_sets[b]) != 1:
            raise AxiomError(f"P1 fails for points {a}, {b}")
        if len(line_sets[a] & line_sets[b]) != 1:
            raise AxiomError(f"P2 fails for lines {a}, {b}")


@lru_cache(maxsize=None)
def pg2(q: int) -> IncidenceStructure:
    """PG(2,q): point P lies on line L iff the dot product of their triples is 0."""
    F = gf(q)
    triples = projective_triples(F)
    add, mul = F.add, F.mul
    incidence = []
    for a, b, c in triples:
        ra, rb, rc = mul[a], mul[b], mul[c]
        incidence.append(
            tuple(i for i, (x, y, z) in enumerate(triples) if add[add[ra[x]][rb[y]]][rc[z]] == 0)
        )
    inc = IncidenceStructure(points=list(triples), lines=list(triples), incidence=incidence, name=f"PG(2,{q})")
    check_projective_axioms(inc, q, sample=None if q <= EXHAUSTIVE_AXIOM_ORDER else SAMPLED_PAIRS)
    return inc


def levi(inc: IncidenceStructure) -> Graph:
    """Incidence graph: vertices are the points, then the lines."""
    np_ = len(inc.points)
    edges = [(p, np_ + li) for li, pts in enumerate(inc.incidence) for p in pts]
    return Graph.from_edges(np_ + len(inc.lines), edges)


def _restrict(
    inc: IncidenceStructure, drop_points: set[int], drop_lines: set[int], name: str
) -> tuple[IncidenceStructure, dict[int, int]]:
    keep_p = [p for p in range(len(inc.points)) if p not in drop_points]
    keep_l = [l for l in range(len(inc.lines)) if l not in drop_lines]
    remap = {old: new for new, old in enumerate(keep_p)}
    incidence = [tuple(remap[p] for p in inc.incidence[l] if p in remap) for l in keep_l]
    sub = IncidenceStructure(
        points=[inc.points[p] for p in keep_p],
        lines=[inc.lines[l] for l in keep_l],
        incidence=incidence,
        name=name,
    )
    return sub, remap


def biaffine(q: int, kind: int) -> IncidenceStructure:
    """Biaffine plane of PG(2,q) with amalgamation classes attached.

    P is the point (1,0,0); l is the lexicographically first line through P
    (``kind=1``) or not through P (``kind=2``). The classes are the surviving
    points of the deleted lines through P other than l.
    """
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    plane = pg2(q)
    P = plane.point_index((1, 0, 0))
    through = plane.point_lines()[P]
    if kind == 1:
        ell = through[0]
    else:
        ell = next(l for l in range(len(plane.lines)) if P not in plane.incidence[l])
    drop_lines = set(through) | {ell}
    drop_points = set(plane.incidence[ell]) | {P}
    sub, remap = _restrict(plane, drop_points, drop_lines, f"biaffine type {kind} of PG(2,{q})")
    sub.classes = [
        tuple(sorted(remap[p] for p in plane.incidence[l] if p in remap)) for l in through if l != ell
    ]
    return sub


@dataclass(frozen=True)
class FanoSubplane:
    """The GF(2)-subplane of PG(2,4), as indices into ``pg2(4)``.

    ``tangents[i]`` is the pair of lines through ``points[i]`` that meet the
    subplane only there.
    """

    points: tuple[int, ...]
    lines: tuple[int, ...]
    tangents: tuple[tuple[int, int], ...]


def fano_subplane_pg24() -> FanoSubplane:
    plane = pg2(4)
    sub = gf(4).subfield(2)
    pts = tuple(i for i, t in enumerate(plane.points) if all(x in sub for x in t))
    lns = tuple(i for i, t in enumerate(plane.lines) if all(x in sub for x in t))
    through = plane.point_lines()
    tangents = tuple(tuple(l for l in through[p] if l not in lns) for p in pts)
    if any(len(t) != 2 for t in tangents):
        raise AssertionError("each subplane point must lie on exactly two tangents")
    return FanoSubplane(points=pts, lines=lns, tangents=tangents)  # type: ignore[arg-type]


@dataclass
class OvalClassification:
    """The conic Y = X^2 in PG(2,q), q odd, with incidence and algebraic tags.

    ``line_tags``/``point_tags`` come from counting incidences. The
    ``algebraic_*`` tags come from discriminants: an affine point (a, b) is
    external iff a^2 - b is a non-zero square, an affine line Y = mX + k is a
    secant iff m^2 + 4k is a non-zero square.
    """

    q: int
    oval: tuple[int, ...]
    P: int
    tangent_at_P: int
    line_tags: dict[int, str]
    point_tags: dict[int, str]
    algebraic_line_tags: dict[int, str]
    algebraic_point_tags: dict[int, str]

    def count(self, tag: str) -> int:
        if tag in ("tangent", "secant", "external line"):
            want = "external" if tag == "external line" else tag
            return sum(1 for t in self.line_tags.values() if t == want)
        if tag in ("external point", "internal point"):
            want = tag.split()[0]
            return sum(1 for t in self.point_tags.values() if t == want)
        raise KeyError(tag)

    def disagreements(self) -> list[tuple[str, int]]:
        bad = [("line", l) for l, t in self.line_tags.items() if self.algebraic_line_tags[l] != t]
        bad += [("point", p) for p, t in self.point_tags.items() if self.algebraic_point_tags[p] != t]
        return bad


def conic_oval(q: int) -> OvalClassification:
    if q % 2 == 0:
        raise ValueError(f"conic classification needs odd q, got {q}")
    F = gf(q)
    plane = pg2(q)
    idx = {t: i for i, t in enumerate(plane.points)}
    lidx = {t: i for i, t in enumerate(plane.lines)}
    squares = F.squares()

    def pt(x: int, y: int, z: int) -> int:
        return idx[normalize((x, y, z), F)]

    P = pt(0, 1, 0)
    oval = tuple(sorted({pt(x, F.mul[x][x], 1) for x in F.elements} | {P}))
    oval_set = set(oval)

    line_tags: dict[int, str] = {}
    for l, pts in enumerate(plane.incidence):
        hits = len(oval_set.intersection(pts))
        line_tags[l] = {0: "external", 1: "tangent", 2: "secant"}[hits]
    tangents = [l for l, t in line_tags.items() if t == "tangent"]
    through = plane.point_lines()
    point_tags: dict[int, str] = {}
    for p in range(len(plane.points)):
        if p in oval_set:
            continue
        k = sum(1 for l in through[p] if line_tags[l] == "tangent")
        if k not in (0, 2):
            raise AssertionError(f"point {p} lies on {k} tangents")
        point_tags[p] = "external" if k == 2 else "internal"

    def disc_tag(d: int, yes: str, no: str) -> str:
        if d == 0:
            return "tangent"
        return yes if d in squares else no

    algebraic_points: dict[int, str] = {}
    for p in point_tags:
        x, y, z = plane.points[p]
        if z == 0:
            algebraic_points[p] = "external"
        else:
            zi = F.inv[z]
            a, b = F.mul[x][zi], F.mul[y][zi]
            algebraic_points[p] = disc_tag(F.sub(F.mul[a][a], b), "external", "internal")

    four = F.add[F.add[1][1]][F.add[1][1]]
    algebraic_lines: dict[int, str] = {}
    for l, (a, b, c) in enumerate(plane.lines):
        if b == 0:
            # vertical lines X = cZ meet the conic at P and one affine point;
            # the line at infinity touches it at P
            algebraic_lines[l] = "secant" if a else "tangent"
            continue
        # aX + bY + cZ = 0  <=>  Y = mX + k
        nb = F.neg[F.inv[b]]
        m, k = F.mul[a][nb], F.mul[c][nb]
        d = F.add[F.mul[m][m]][F.mul[four][k]]
        algebraic_lines[l] = disc_tag(d, "secant", "external")

    return OvalClassification(
        q=q,
        oval=oval,
        P=P,
        tangent_at_P=lidx[(0, 0, 1)],
        line_tags=line_tags,
        point_tags=point_tags,
        algebraic_line_tags=algebraic_lines,
        algebraic_point_tags=algebraic_points,
    )
