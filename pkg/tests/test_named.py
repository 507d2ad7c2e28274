from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import networkx as nx
import pytest

from babi.graph import Graph, girth
from babi.graph6 import write_graph6
from babi.named import (
    ASSET_ENV,
    ROBERTSON_TABLE,
    AssetNotFoundError,
    AssetValidationError,
    heawood,
    hoffman_singleton,
    load_named,
    petersen,
    robertson,
    robertson_wegner,
)

ROOT = Path(__file__).resolve().parents[1]


def as_nx(G: Graph) -> nx.Graph:
    H = nx.empty_graph(G.n)
    H.add_edges_from(G.edges())
    return H


@pytest.mark.parametrize(
    "make, n, k, g, diam",
    [(petersen, 10, 3, 5, 2), (robertson, 19, 4, 5, 3), (heawood, 14, 3, 6, 3), (hoffman_singleton, 50, 7, 5, 2)],
)
def test_cage_parameters(make, n, k, g, diam):
    G = make()
    assert G.n == n and set(G.degrees()) == {k} and girth(G) == g and G.diameter() == diam


def test_against_networkx_generators():
    assert nx.is_isomorphic(as_nx(petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(as_nx(heawood()), nx.heawood_graph())
    assert nx.is_isomorphic(as_nx(hoffman_singleton()), nx.hoffman_singleton_graph())


def test_robertson_table_is_symmetric():
    for v, nbrs in ROBERTSON_TABLE.items():
        assert len(set(nbrs)) == 4
        assert all(v in ROBERTSON_TABLE[w] for w in nbrs)


def test_robertson_matches_its_table():
    H = nx.from_dict_of_lists({v - 1: [w - 1 for w in ws] for v, ws in ROBERTSON_TABLE.items()})
    assert nx.is_isomorphic(H, as_nx(robertson()))


def test_robertson_wegner():
    rw = robertson_wegner()
    G = rw.graph
    assert G.n == 30 and set(G.degrees()) == {5} and girth(G) == 5
    assert len(rw.cubes) == 5 and len(rw.tetrahedra) == 10
    assert sorted(v for t in rw.tetrahedra for v in t) == sorted(list(range(20)) * 2)
    assert nx.is_isomorphic(as_nx(rw.dodecahedron), nx.dodecahedral_graph())
    # tetrahedral vertices pair up with the other half of their cube
    T, _ = G.delete_vertices(range(20))
    assert set(T.degrees()) == {1}
    assert all(rw.cube_of[a] == rw.cube_of[b] for a, b in T.edges())


def test_packaged_assets_load():
    C = load_named("cage_6_5")
    assert C.n == 40 and set(C.degrees()) == {6} and girth(C) == 5
    assert load_named("hog_53705").n == 14
    assert load_named("hog_54321").n == 12


def test_asset_errors(tmp_path, monkeypatch):
    with pytest.raises(AssetNotFoundError):
        load_named("no_such_graph")
    with pytest.raises(AssetNotFoundError):
        load_named("cage_6_5", tmp_path)
    write_graph6(petersen(), tmp_path / "cage_6_5.g6")
    with pytest.raises(AssetValidationError):
        load_named("cage_6_5", tmp_path)
    monkeypatch.setenv(ASSET_ENV, str(tmp_path))
    with pytest.raises(AssetValidationError):
        load_named("cage_6_5")
    monkeypatch.delenv(ASSET_ENV)
    assert load_named("cage_6_5").n == 40


def test_explicit_file_path(tmp_path):
    p = tmp_path / "x.g6"
    write_graph6(load_named("hog_53705"), p)
    assert load_named("hog_53705", p).n == 14


def test_assets_regenerate_identically():
    out = subprocess.run(
        [sys.executable, str(ROOT / "tools" / "make_assets.py"), "--check"], capture_output=True, text=True
    )
    assert out.returncode == 0, out.stdout + out.stderr
