"""Girth-6 babi-graphs from PG(2,q) by deleting points, lines and edges."""

from __future__ import annotations

from ..geometry import conic_oval, levi, pg2
from ..graph import BabiParams
from ._common import Built, ConstructionError, finish, independent_edges, remap_note


def _levi_minus(q: int, points: list[int], lines: list[int]):
    plane = pg2(q)
    np_ = len(plane.points)
    L = levi(plane)
    return plane, np_, L.delete_vertices(list(points) + [np_ + l for l in lines])


def babi_g6_pair(q: int) -> Built:
    """Delete a non-incident point-line pair, then balance with independent fat edges."""
    plane = pg2(q)
    P = plane.point_index((1, 0, 0))
    ell = next(l for l in range(len(plane.lines)) if P not in plane.incidence[l])
    _, _, (H, remap) = _levi_minus(q, [P], [ell])
    drop = independent_edges(H, q + 1, (q * q - q - 2) // 2)
    H = H.remove_edges(drop)
    return finish(
        H,
        BabiParams(q, q + 1, 6),
        f"babi_g6_pair: levi(PG(2,{q})) minus point {P}, line {ell}, independent edges {drop}",
        2 * (q * q + q),
    )


def babi_g6_triangle(q: int) -> Built:
    """Delete a triangle's vertices and sides, then balance with independent fat edges."""
    if q <= 3:
        raise ValueError(f"the triangle construction needs q > 3, got {q}")
    plane = pg2(q)
    pts = [plane.point_index(t) for t in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    lns = [plane.line_index(t) for t in ((0, 0, 1), (1, 0, 0), (0, 1, 0))]
    _, _, (H, remap) = _levi_minus(q, pts, lns)
    drop = independent_edges(H, q + 1, (q - 1) * (q - 4) // 2)
    H = H.remove_edges(drop)
    return finish(
        H,
        BabiParams(q, q + 1, 6),
        f"babi_g6_triangle: levi(PG(2,{q})) minus points {pts}, lines {lns}, independent edges {drop}",
        2 * (q * q + q - 2),
    )


def babi_g6_mod4(q: int) -> Built:
    """Incident pair (P, l): drop l and its points except P, then (q-1)/4 point-line edges."""
    if q % 4 != 1:
        raise ValueError(f"needs q = 1 mod 4, got {q}")
    plane = pg2(q)
    P = plane.point_index((1, 0, 0))
    through = plane.point_lines()[P]
    ell = through[0]
    doomed = [x for x in plane.incidence[ell] if x != P]
    np_ = len(plane.points)
    picks = []
    for l in through[1 : 1 + (q - 1) // 4]:
        x = next(x for x in plane.incidence[l] if x != P)
        picks.append((x, l))
    L = levi(plane).remove_edges([(x, np_ + l) for x, l in picks])
    H, remap = L.delete_vertices(doomed + [np_ + ell])
    return finish(
        H,
        BabiParams(q, q + 1, 6),
        f"babi_g6_mod4: levi(PG(2,{q})) minus line {ell} and its points except {P}, "
        f"incidences (point, line) {picks} removed",
        2 * q * q + q + 1,
    )


def babi_g6_oval(q: int) -> Built:
    """Delete the conic, the tangent at its infinite point P, all tangents and lines through P."""
    if q % 2 == 0 or q <= 3:
        raise ValueError(f"the oval construction needs odd q > 3, got {q}")
    oc = conic_oval(q)
    plane = pg2(q)
    through_P = set(plane.point_lines()[oc.P])
    pts = sorted(set(oc.oval) | set(plane.incidence[oc.tangent_at_P]))
    lns = sorted({l for l, t in oc.line_tags.items() if t == "tangent"} | through_P)
    _, _, (H, remap) = _levi_minus(q, pts, lns)
    r = q - 2
    if min(H.degrees()) != r:
        raise ConstructionError("oval deletion left an unexpected degree")
    return finish(
        H,
        BabiParams(r, q, 6),
        f"babi_g6_oval: levi(PG(2,{q})) minus conic Y=X^2, the line at infinity, "
        f"all tangents and lines through {oc.P}",
        2 * (q * q - q),
    )
