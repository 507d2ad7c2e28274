"""Exhaustive isomorph-free search for babi-graphs of small order.

Vertices 0..v/2-1 are fat (degree s), the rest thin (degree r). The search
completes vertices in index order, choosing all missing neighbours of the
current vertex among later vertices. Pruning:

* an edge uv is only added when dist(u, v) >= g - 1, so no cycle shorter
  than g ever appears;
* every unsaturated vertex must keep enough admissible partners;
* untouched vertices of the same degree class are interchangeable, so only
  the lowest-indexed ones are ever chosen;
* a partial graph isomorphic (with degree targets) to one already expanded
  is skipped, since both have the same completions up to isomorphism.

The tree is cut into independent subtrees at the frontier reached after the
first two vertices are completed. Subtrees are solved with private state and
merged by index, so results and node counts do not depend on the worker
count.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ..bounds import admissible_order, babi_lower
from ..graph import BabiParams, Graph, girth, verify_babi
from ..graph6 import graph6_decode, graph6_encode
from .canon import canonical_form

CHECKPOINT_VERSION = 1
FRONTIER_DEPTH = 2


class BudgetExhausted(RuntimeError):
    """Raised by helpers that need a complete answer when the budget runs out."""


@dataclass(frozen=True)
class SearchSpec:
    params: BabiParams
    v_max: int
    mode: str = "find-first"  # or "prove-min"
    node_limit: int | None = None
    time_limit: float | None = None
    v_min: int | None = None  # defaults to the babi lower bound

    def __post_init__(self) -> None:
        if self.mode not in ("find-first", "prove-min"):
            raise ValueError(f"mode must be 'find-first' or 'prove-min', got {self.mode!r}")
        if self.v_max < 0:
            raise ValueError("v_max must be non-negative")

    def orders(self) -> list[int]:
        """Admissible orders from the starting order up to the ceiling v_max."""
        r, s, g = self.params.r, self.params.s, self.params.g
        start = self.v_min if self.v_min is not None else babi_lower(r, s, g).value
        return [v for v in range(max(start, 2), self.v_max + 1) if admissible_order(r, s, v)]

    def to_dict(self) -> dict:
        return {
            "params": [self.params.r, self.params.s, self.params.g],
            "v_max": self.v_max,
            "mode": self.mode,
            "node_limit": self.node_limit,
            "time_limit": self.time_limit,
            "v_min": self.v_min,
        }


@dataclass
class SearchOutcome:
    min_order: int | None
    witness: Graph | None
    nodes: int
    exhaustive: bool
    orders_searched: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "min_order": self.min_order if self.min_order is not None else "none <= v_max",
            "witness": graph6_encode(self.witness).decode() if self.witness is not None else None,
            "nodes": self.nodes,
            "exhaustive": self.exhaustive,
            "orders_searched": self.orders_searched,
        }


# -- the kernel --------------------------------------------------------------------

class _Budget:
    def __init__(self, node_limit: int | None, deadline: float | None):
        self.node_limit = node_limit
        self.deadline = deadline
        self.nodes = 0
        self.exceeded = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self.exceeded = True
        elif self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            self.exceeded = True
        return not self.exceeded


class _Kernel:
    """Mutable DFS state for one order v."""

    def __init__(self, r: int, s: int, g: int, v: int):
        self.r, self.s, self.g, self.v = r, s, g, v
        h = v // 2
        self.target = [s] * h + [r] * (v - h)
        self.adj = [0] * v
        self.deg = [0] * v
        self.full = (1 << v) - 1

    # state helpers
    def snapshot(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(self.adj), tuple(self.deg)

    def restore(self, snap) -> None:
        self.adj, self.deg = list(snap[0]), list(snap[1])

    def add(self, u: int, w: int) -> None:
        self.adj[u] |= 1 << w
        self.adj[w] |= 1 << u
        self.deg[u] += 1
        self.deg[w] += 1

    def remove(self, u: int, w: int) -> None:
        self.adj[u] &= ~(1 << w)
        self.adj[w] &= ~(1 << u)
        self.deg[u] -= 1
        self.deg[w] -= 1

    def ball(self, u: int, radius: int) -> int:
        seen = frontier = 1 << u
        adj = self.adj
        for _ in range(radius):
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
        return seen

    def open_mask(self) -> int:
        return sum(1 << u for u in range(self.v) if self.deg[u] < self.target[u])

    def feasible(self) -> bool:
        """Every unsaturated vertex still has enough partners at distance >= g-1."""
        open_ = self.open_mask()
        m = open_
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            partners = open_ & ~self.ball(u, self.g - 2)
            if partners.bit_count() < self.target[u] - self.deg[u]:
                return False
        return True

    def next_vertex(self) -> int | None:
        for u in range(self.v):
            if self.deg[u] < self.target[u]:
                return u
        return None

    def key(self) -> tuple:
        colors = [(self.target[u], self.deg[u]) for u in range(self.v)]
        return canonical_form(self.adj, colors)

    def choices(self, u: int):
        """Yield once per admissible neighbour set of u, with the edges added in place."""
        need = self.target[u] - self.deg[u]
        fresh = [self.deg[w] == 0 for w in range(self.v)]
        cand = [w for w in range(u + 1, self.v) if self.deg[w] < self.target[w]]

        def rec(start: int, need: int, blocked: set[int]):
            if need == 0:
                yield
                return
            reach = self.ball(u, self.g - 2)
            for i in range(start, len(cand)):
                if len(cand) - i < need:
                    return
                w = cand[i]
                cls = self.target[w]
                if fresh[w] and cls in blocked:
                    continue
                if not (reach >> w) & 1:
                    self.add(u, w)
                    yield from rec(i + 1, need - 1, blocked)
                    self.remove(u, w)
                if fresh[w]:
                    # skipping a fresh vertex forbids later fresh ones of its class
                    blocked = blocked | {cls}

        yield from rec(0, need, set())

    def is_complete(self) -> bool:
        return all(d == t for d, t in zip(self.deg, self.target))

    def graph(self) -> Graph:
        return Graph(self.v, [[w for w in range(self.v) if (self.adj[u] >> w) & 1] for u in range(self.v)])


def _frontier(r: int, s: int, g: int, v: int) -> list[tuple]:
    """Pairwise non-isomorphic states after the first FRONTIER_DEPTH completions, in DFS order."""
    k = _Kernel(r, s, g, v)
    states: list[tuple] = []
    seen: set = set()

    def walk(depth: int) -> None:
        if depth == FRONTIER_DEPTH or k.next_vertex() is None:
            key = k.key()
            if key not in seen:
                seen.add(key)
                states.append(k.snapshot())
            return
        u = k.next_vertex()
        for _ in k.choices(u):
            if k.feasible():
                walk(depth + 1)

    walk(0)
    return states


@dataclass
class _SubResult:
    nodes: int
    exceeded: bool
    forms: list  # canonical forms of complete graphs, girth exactly g
    witness: str | None  # graph6


def _solve_subtree(args) -> _SubResult:
    r, s, g, v, snap, find_first, node_limit, deadline = args
    k = _Kernel(r, s, g, v)
    k.restore(snap)
    budget = _Budget(node_limit, deadline)
    memo: set = set()
    forms: dict = {}
    witness: list[str] = []

    def dfs() -> bool:
        """Returns False to stop (budget or first witness found)."""
        if not budget.tick():
            return False
        u = k.next_vertex()
        if u is None:
            G = k.graph()
            if girth(G) == g:
                form = canonical_form(k.adj, k.target)
                if form not in forms:
                    forms[form] = G
                    if not witness:
                        witness.append(graph6_encode(G).decode())
                if find_first:
                    return False
            return True
        for _ in k.choices(u):
            if not k.feasible():
                continue
            key = k.key()
            if key in memo:
                continue
            memo.add(key)
            if not dfs():
                return False
        return True

    dfs()
    return _SubResult(budget.nodes, budget.exceeded, list(forms), witness[0] if witness else None)


@dataclass
class OrderResult:
    v: int
    nodes: int
    exhaustive: bool
    forms: list
    witness: Graph | None
    completed: list[int]


def search_order(
    p: BabiParams,
    v: int,
    find_first: bool = True,
    node_limit: int | None = None,
    deadline: float | None = None,
    workers: int = 1,
    done: dict[int, dict] | None = None,
    on_subtree=None,
) -> OrderResult:
    """Search one order. ``done`` maps finished subtree indices to stored results (resume)."""
    r, s, g = p.r, p.s, p.g
    if not admissible_order(r, s, v) or v < s + 1:
        return OrderResult(v, 0, True, [], None, [])
    frontier = _frontier(r, s, g, v)
    done = dict(done or {})
    remaining = node_limit
    nodes = sum(d["nodes"] for d in done.values())
    if remaining is not None:
        remaining -= nodes
    forms: dict = {}
    witness: Graph | None = None
    exhaustive = all(not d["exceeded"] for d in done.values())
    for i in sorted(done):
        for f in done[i]["forms"]:
            forms.setdefault(_from_json_form(f), None)
        if witness is None and done[i]["witness"]:
            witness = graph6_decode(done[i]["witness"])
    if find_first and witness is not None:
        return OrderResult(v, nodes, exhaustive, list(forms), witness, sorted(done))

    todo = [i for i in range(len(frontier)) if i not in done]

    def args(i: int, limit):
        return (r, s, g, v, frontier[i], find_first, limit, deadline)

    def absorb(i: int, res: _SubResult) -> bool:
        nonlocal nodes, witness, exhaustive, remaining
        nodes += res.nodes
        if remaining is not None:
            remaining -= res.nodes
        if res.exceeded:
            exhaustive = False
        for f in res.forms:
            forms.setdefault(f, None)
        if witness is None and res.witness:
            witness = graph6_decode(res.witness)
        done[i] = {"nodes": res.nodes, "exceeded": res.exceeded, "forms": [_to_json_form(f) for f in res.forms],
                   "witness": res.witness}
        if on_subtree is not None:
            on_subtree(i, done[i])
        stop = res.exceeded or (find_first and witness is not None)
        return not stop

    if workers <= 1 or node_limit is not None:
        # a node limit is shared sequentially so that counts stay deterministic
        for i in todo:
            if remaining is not None and remaining <= 0:
                exhaustive = False
                break
            if not absorb(i, _solve_subtree(args(i, remaining))):
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_subtree, [args(i, None) for i in todo]))
        for i, res in zip(todo, results):
            if not absorb(i, res):
                break
    if len(done) < len(frontier) and not (find_first and witness is not None):
        exhaustive = False
    return OrderResult(v, nodes, exhaustive, list(forms), witness, sorted(done))


def _to_json_form(form: tuple) -> list:
    n, colors, code = form
    return [n, list(colors), list(code)]


def _from_json_form(data: list) -> tuple:
    n, colors, code = data
    return (n, tuple(colors), tuple(code))


# -- public entry points ---------------------------------------------------------------

def exhaustive_min(
    spec: SearchSpec,
    workers: int = 1,
    checkpoint: str | os.PathLike | None = None,
    resume: str | os.PathLike | None = None,
) -> SearchOutcome:
    """Smallest admissible order in range carrying an (r,s;g)-babi-graph.

    ``exhaustive`` is True only when every order below the reported one (and
    the reported one up to its witness) was searched completely.
    """
    p = spec.params
    deadline = time.monotonic() + spec.time_limit if spec.time_limit is not None else None
    state = _load_checkpoint(resume, spec) if resume else {"orders": {}}
    nodes = 0
    exhaustive = True
    searched: list[int] = []

    def save():
        if checkpoint:
            _save_checkpoint(checkpoint, spec, state)

    for v in spec.orders():
        order_state = state["orders"].setdefault(str(v), {})
        # subtrees cut short by an earlier budget are searched again
        done = {int(i): d for i, d in order_state.items() if not d["exceeded"]}
        limit = None if spec.node_limit is None else max(spec.node_limit - nodes, 0)

        def on_subtree(i: int, info: dict, _st=order_state):
            _st[str(i)] = info
            save()

        res = search_order(
            p, v, find_first=True, node_limit=limit, deadline=deadline, workers=workers,
            done=done, on_subtree=on_subtree,
        )
        nodes += res.nodes
        searched.append(v)
        save()
        if res.witness is not None:
            cert = verify_babi(res.witness, p)
            if not cert.balanced:
                raise AssertionError("search produced an invalid witness")
            return SearchOutcome(v, res.witness, nodes, exhaustive, searched)
        if not res.exhaustive:
            exhaustive = False
            break
    return SearchOutcome(None, None, nodes, exhaustive, searched)


def certify_cage(G: Graph, p: BabiParams, node_limit: int | None = None, time_limit: float | None = None) -> bool:
    """True iff G is a babi-graph for p and no smaller admissible order has one.

    Orders are searched from 2 upward, independent of any closed-form bound.
    Raises :class:`BudgetExhausted` if the search cannot finish.
    """
    if not verify_babi(G, p).balanced:
        raise ValueError(f"G is not a {p}-babi-graph")
    spec = SearchSpec(p, G.n - 1, "prove-min", node_limit, time_limit, v_min=2)
    out = exhaustive_min(spec)
    if out.min_order is not None:
        return False
    if not out.exhaustive:
        raise BudgetExhausted("search budget exhausted before certification")
    return True


def enumerate_babi(p: BabiParams, v: int, node_limit: int | None = None, workers: int = 1) -> list[Graph]:
    """One representative per isomorphism class of (r,s;g)-babi-graphs on v vertices."""
    res = search_order(p, v, find_first=False, node_limit=node_limit, workers=workers)
    if not res.exhaustive:
        raise BudgetExhausted(f"enumeration of {p} on {v} vertices hit the node limit")
    return [_form_graph(f) for f in res.forms]


def count_nonisomorphic(p: BabiParams, v: int, node_limit: int | None = None, workers: int = 1) -> int:
    return len(enumerate_babi(p, v, node_limit, workers))


def _form_graph(form: tuple) -> Graph:
    n, _, code = form
    return Graph(n, [[w for w in range(n) if (code[u] >> w) & 1] for u in range(n)])


# -- checkpoints ---------------------------------------------------------------------

def _save_checkpoint(path, spec: SearchSpec, state: dict) -> None:
    data = {"version": CHECKPOINT_VERSION, "spec": spec.to_dict(), "orders": state["orders"]}
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True))
    os.replace(tmp, path)


def _load_checkpoint(path, spec: SearchSpec) -> dict:
    data = json.loads(Path(path).read_text())
    if data.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {data.get('version')!r}")
    if data["spec"]["params"] != [spec.params.r, spec.params.s, spec.params.g]:
        raise ValueError("checkpoint belongs to different parameters")
    return {"orders": data["orders"]}
