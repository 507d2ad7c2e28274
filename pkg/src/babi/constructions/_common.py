from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..graph import BabiParams, Certificate, Graph, verify_babi


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Built:
    """A constructed graph with its verification certificate."""

    graph: Graph
    certificate: Certificate

    @property
    def order(self) -> int:
        return self.graph.n


def finish(G: Graph, params: BabiParams, provenance: str, expected_order: int | None = None) -> Built:
    """Certify a construction; raise if it is not the promised babi-graph."""
    cert = verify_babi(G, params, provenance)
    if min(G.degrees(), default=0) < params.r:
        raise ConstructionError(f"{provenance}: a vertex fell below degree {params.r}")
    if not cert.balanced:
        raise ConstructionError(
            f"{provenance}: not a {params}-babi-graph (degrees {cert.degrees}, girth {cert.girth})"
        )
    if expected_order is not None and G.n != expected_order:
        raise ConstructionError(f"{provenance}: order {G.n}, expected {expected_order}")
    return Built(G, cert)


def remap_note(remap: dict[int, int]) -> str:
    moved = {o: n for o, n in remap.items() if o != n}
    return "old->new " + ",".join(f"{o}:{n}" for o, n in sorted(moved.items())) if moved else "labels kept"


def independent_edges(G: Graph, degree: int, count: int) -> list[tuple[int, int]]:
    """``count`` pairwise disjoint edges whose endpoints both have ``degree``.

    Greedy in lexicographic edge order; falls back to a maximum matching of
    the subgraph spanned by those vertices when greedy stalls.
    """
    if count == 0:
        return []
    heavy = {v for v in range(G.n) if G.degree(v) == degree}
    candidates = [(u, v) for u, v in G.edges() if u in heavy and v in heavy]
    used: set[int] = set()
    chosen = []
    for u, v in candidates:
        if u not in used and v not in used:
            chosen.append((u, v))
            used.update((u, v))
            if len(chosen) == count:
                return chosen
    H = nx.Graph()
    H.add_edges_from(candidates)
    matching = sorted(tuple(sorted(e)) for e in nx.max_weight_matching(H, maxcardinality=True))
    if len(matching) < count:
        raise ConstructionError(f"only {len(matching)} independent edges available, need {count}")
    return matching[:count]
