from __future__ import annotations

import json

import pytest

from babi.bounds import admissible_order
from babi.graph import BabiParams, girth
from babi.named import load_named
from babi.search.canon import is_isomorphic
from babi.search.search import (
    BudgetExhausted,
    SearchSpec,
    certify_cage,
    count_nonisomorphic,
    enumerate_babi,
    exhaustive_min,
)

from oracles import brute_girth, naive_babi_classes, naive_min_order

# Isomorphism-class counts of (r,s;g)-babi-graphs, produced by the brute-force
# oracle (labelled enumeration + VF2 dedupe). Every admissible (r,s,g,v) with
# v <= 8, and v = 10 with g >= 4, not listed here has no graph.
ORACLE_COUNTS = {
    (2, 3, 3, 4): 1,
    (2, 4, 3, 6): 1, (3, 5, 3, 6): 1,
    (2, 3, 3, 8): 18, (2, 4, 3, 8): 12, (3, 4, 3, 8): 49, (2, 5, 3, 8): 2, (3, 5, 3, 8): 13,
    (4, 5, 3, 8): 28, (3, 6, 3, 8): 1, (4, 6, 3, 8): 4, (5, 6, 3, 8): 5, (4, 7, 3, 8): 1,
    (5, 7, 3, 8): 1, (6, 7, 3, 8): 1,
    (2, 3, 4, 8): 9, (2, 4, 4, 8): 1, (3, 4, 4, 8): 1, (2, 3, 5, 8): 1,
    (2, 4, 4, 10): 4,
}


def oracle_grid():
    for v in (4, 6, 8, 10):
        for g in range(3, 11):
            if v == 10 and g == 3:
                continue
            for s in range(3, v):
                for r in range(2, s):
                    if admissible_order(r, s, v):
                        yield r, s, g, v


@pytest.mark.parametrize("r,s,g,v", list(oracle_grid()))
def test_counts_match_frozen_oracle(r, s, g, v):
    assert count_nonisomorphic(BabiParams(r, s, g), v) == ORACLE_COUNTS.get((r, s, g, v), 0)


@pytest.mark.parametrize("r,s,g,v", [k for k in oracle_grid() if k[3] <= 6] + [(2, 3, 5, 8), (2, 5, 3, 8)])
def test_counts_match_live_oracle(r, s, g, v):
    assert count_nonisomorphic(BabiParams(r, s, g), v) == len(naive_babi_classes(r, s, g, v))


@pytest.mark.slow
@pytest.mark.parametrize("r,s,g,v", [k for k in oracle_grid() if k[3] == 8 and k[2] == 3][:6])
def test_counts_match_live_oracle_order_8(r, s, g, v):
    assert len(naive_babi_classes(r, s, g, v)) == ORACLE_COUNTS.get((r, s, g, v), 0)


def test_order_10_triangle_counts_agree_under_complement():
    # on 10 vertices, complementing maps degrees {r,s} to {9-s,9-r}
    def n(r, s, g):
        return count_nonisomorphic(BabiParams(r, s, g), 10)

    assert n(3, 5, 3) == n(4, 6, 3) + sum(n(4, 6, g) for g in (4, 5, 6)) == 844
    assert n(5, 7, 3) == n(2, 4, 3) + n(2, 4, 4) + n(2, 4, 5) == 167
    assert n(3, 7, 3) == n(2, 6, 3) == 2


def test_min_order_matches_naive_oracle():
    for g in range(3, 11):
        for s in range(3, 10):
            for r in range(2, s):
                out = exhaustive_min(SearchSpec(BabiParams(r, s, g), 10, "prove-min", v_min=2))
                assert out.exhaustive
                assert out.min_order == naive_min_order(r, s, g, 10), (r, s, g)


def test_enumerated_graphs_have_correct_girth():
    for p, v in [(BabiParams(2, 3, 4), 8), (BabiParams(2, 3, 5), 12), (BabiParams(2, 3, 6), 12)]:
        for G in enumerate_babi(p, v):
            assert girth(G) == p.g
            if v <= 10:
                assert brute_girth(G.n, G.edges()) == p.g


# -- headline values ------------------------------------------------------------------

def test_prove_min_235():
    out = exhaustive_min(SearchSpec(BabiParams(2, 3, 5), 12, "prove-min", v_min=2))
    assert out.min_order == 8 and out.exhaustive and out.witness.n == 8


def test_prove_min_236():
    out = exhaustive_min(SearchSpec(BabiParams(2, 3, 6), 12, "prove-min", v_min=2))
    assert out.min_order == 12 and out.exhaustive


def test_245_witness_is_unique_and_matches_asset():
    out = exhaustive_min(SearchSpec(BabiParams(2, 4, 5), 16, "prove-min", v_min=2))
    assert out.min_order == 14 and out.exhaustive
    assert is_isomorphic(out.witness, load_named("hog_53705"))
    assert count_nonisomorphic(BabiParams(2, 4, 5), 14) == 1


def test_236_order_12_classes():
    assert count_nonisomorphic(BabiParams(2, 3, 6), 12) == 9
    assert count_nonisomorphic(BabiParams(2, 3, 5), 12) == 97


def test_certify_cage():
    G8 = enumerate_babi(BabiParams(2, 3, 5), 8)[0]
    assert certify_cage(G8, BabiParams(2, 3, 5))
    G12 = enumerate_babi(BabiParams(2, 3, 5), 12)[0]
    assert not certify_cage(G12, BabiParams(2, 3, 5))
    with pytest.raises(ValueError):
        certify_cage(G8, BabiParams(2, 3, 6))


# -- budget, determinism, checkpoints ------------------------------------------------

def test_budget_reports_non_exhaustive():
    out = exhaustive_min(SearchSpec(BabiParams(2, 4, 5), 14, node_limit=3, v_min=2))
    assert not out.exhaustive and out.min_order is None
    with pytest.raises(BudgetExhausted):
        count_nonisomorphic(BabiParams(2, 3, 6), 12, node_limit=5)
    G12 = load_named("hog_54321")
    with pytest.raises(BudgetExhausted):
        certify_cage(G12, BabiParams(2, 3, 6), node_limit=2)
    assert certify_cage(G12, BabiParams(2, 3, 6))


def test_time_limit():
    out = exhaustive_min(SearchSpec(BabiParams(3, 4, 6), 40, time_limit=0.05))
    assert not out.exhaustive


def test_parallel_equals_sequential():
    p = BabiParams(2, 3, 6)
    a = {tuple(G.edges()) for G in enumerate_babi(p, 12, workers=1)}
    b = {tuple(G.edges()) for G in enumerate_babi(p, 12, workers=2)}
    assert a == b
    o1 = exhaustive_min(SearchSpec(BabiParams(2, 4, 5), 14, v_min=2), workers=1)
    o2 = exhaustive_min(SearchSpec(BabiParams(2, 4, 5), 14, v_min=2), workers=2)
    assert o1.witness == o2.witness


def test_checkpoint_and_resume(tmp_path):
    spec_cut = SearchSpec(BabiParams(2, 4, 5), 14, "prove-min", node_limit=40, v_min=2)
    ck = tmp_path / "ck.json"
    first = exhaustive_min(spec_cut, checkpoint=ck)
    assert not first.exhaustive
    data = json.loads(ck.read_text())
    assert data["version"] == 1 and data["orders"]
    # the interrupted subtree is stored as such and must be redone on resume
    assert any(d["exceeded"] for o in data["orders"].values() for d in o.values())
    spec = SearchSpec(BabiParams(2, 4, 5), 14, "prove-min", v_min=2)
    resumed = exhaustive_min(spec, resume=ck, checkpoint=ck)
    fresh = exhaustive_min(spec)
    assert resumed.min_order == fresh.min_order == 14
    assert resumed.witness == fresh.witness and resumed.exhaustive
    with pytest.raises(ValueError):
        exhaustive_min(SearchSpec(BabiParams(2, 3, 5), 10), resume=ck)


def test_spec_validation_and_orders():
    with pytest.raises(ValueError):
        SearchSpec(BabiParams(2, 3, 5), 10, mode="fast")
    assert SearchSpec(BabiParams(2, 3, 5), 20).orders() == [8, 12, 16, 20]
    assert SearchSpec(BabiParams(2, 4, 5), 16).orders() == [14, 16]
    assert SearchSpec(BabiParams(2, 3, 5), 20).to_dict()["v_max"] == 20
