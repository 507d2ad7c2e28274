"""Regenerate the graph6 assets shipped in src/babi/data.

cage_6_5.g6   Hoffman-Singleton minus the Petersen subgraph on the pentagon P_0
              and pentagram Q_0: the unique (6,5)-cage on 40 vertices.
hog_53705.g6  the (2,4;5)-babi-graph of order 14, unique up to isomorphism by
              exhaustive search.
hog_54321.g6  the (2,3;6)-babi-graph of order 12 with 6 fat and 3 thin edges,
              unique with that census by exhaustive search.

Usage: python tools/make_assets.py [--check]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from babi.graph import BabiParams, edge_census
from babi.graph6 import graph6_encode
from babi.named import DEFAULT_ASSET_DIR, hoffman_singleton
from babi.search.canon import canonical_graph
from babi.search.search import enumerate_babi


def cage_6_5():
    G = hoffman_singleton()
    petersen_part = list(range(5)) + list(range(25, 30))
    return G.delete_vertices(petersen_part)[0]


def hog_53705():
    graphs = enumerate_babi(BabiParams(2, 4, 5), 14)
    if len(graphs) != 1:
        raise SystemExit(f"expected one (2,4;5)-graph on 14 vertices, found {len(graphs)}")
    return graphs[0]


def hog_54321():
    p = BabiParams(2, 3, 6)
    hits = [G for G in enumerate_babi(p, 12) if (edge_census(G, p).f, edge_census(G, p).t) == (6, 3)]
    if len(hits) != 1:
        raise SystemExit(f"expected one (2,3;6)-graph on 12 vertices with census (6,3), found {len(hits)}")
    return hits[0]


BUILDERS = {"cage_6_5.g6": cage_6_5, "hog_53705.g6": hog_53705, "hog_54321.g6": hog_54321}


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the files on disk instead of writing")
    ap.add_argument("--out", type=Path, default=DEFAULT_ASSET_DIR)
    args = ap.parse_args(argv)
    status = 0
    for name, build in BUILDERS.items():
        data = graph6_encode(canonical_graph(build())) + b"\n"
        path = args.out / name
        if args.check:
            same = path.is_file() and path.read_bytes() == data
            print(f"{name}: {'ok' if same else 'DIFFERS'}")
            status |= not same
        else:
            path.write_bytes(data)
            print(f"wrote {path}")
    return status


if __name__ == "__main__":
    sys.exit(main())
