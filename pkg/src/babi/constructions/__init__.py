"""Named recipes for every babi-graph construction.

Each :class:`ConstructionRecipe` knows its parameter names, a domain check,
the order it must produce and how to build it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..bounds import babi_g3_exact, babi_g4_exact
from ..graph import Graph
from ..named import heawood, hoffman_singleton, petersen, robertson
from ._common import Built, ConstructionError
from .compose import compose_babi
from .girth34 import babi_g3, babi_g4
from .girth5 import (
    amalgamate,
    babi_235,
    babi_345,
    babi_3555_from_rw,
    babi_455_24,
    babi_455_28,
    babi_565,
    babi_675,
)
from .girth6 import babi_g6_mod4, babi_g6_oval, babi_g6_pair, babi_g6_triangle

__all__ = [
    "Built",
    "ConstructionError",
    "ConstructionRecipe",
    "RECIPES",
    "amalgamate",
    "babi_235",
    "babi_345",
    "babi_3555_from_rw",
    "babi_455_24",
    "babi_455_28",
    "babi_565",
    "babi_675",
    "babi_g3",
    "babi_g4",
    "babi_g6_mod4",
    "babi_g6_oval",
    "babi_g6_pair",
    "babi_g6_triangle",
    "compose_babi",
    "gamma_graph",
]


def gamma_graph(spec: str) -> Graph:
    """Small regular graphs by name: petersen, robertson, heawood, hoffman_singleton,
    ``cycle:N`` or ``matching:N`` (N/2 disjoint edges)."""
    named = {
        "petersen": petersen,
        "robertson": robertson,
        "heawood": heawood,
        "hoffman_singleton": hoffman_singleton,
    }
    if spec in named:
        return named[spec]()
    kind, _, n = spec.partition(":")
    if kind in ("cycle", "matching") and n.isdigit():
        n_ = int(n)
        if kind == "cycle":
            if n_ < 3:
                raise ValueError("cycle needs at least 3 vertices")
            return Graph.cycle(n_)
        if n_ % 2:
            raise ValueError("a perfect matching needs an even vertex count")
        return Graph.from_edges(n_, [(i, i + 1) for i in range(0, n_, 2)])
    raise ValueError(f"unknown graph {spec!r}")


@dataclass(frozen=True)
class ConstructionRecipe:
    name: str
    params: tuple[str, ...]
    domain: str
    order: str
    check: Callable[..., bool]
    expected_order: Callable[..., int]
    build: Callable[..., Built]

    def run(self, **kwargs) -> Built:
        if not self.check(**kwargs):
            raise ValueError(f"{self.name}: parameters {kwargs} outside domain: {self.domain}")
        built = self.build(**kwargs)
        want = self.expected_order(**kwargs)
        if built.order != want:
            raise ConstructionError(f"{self.name}: order {built.order}, expected {want}")
        return built

    def to_dict(self) -> dict:
        return {"name": self.name, "params": list(self.params), "domain": self.domain, "order": self.order}


def _rs(r: int, s: int) -> bool:
    return 2 <= r < s


def _amalgam_order(q: int, type: int, gamma: str) -> int:
    return 2 * q * q if type == 1 else 2 * q * q - 2


def _amalgam_check(q: int, type: int, gamma: str) -> bool:
    return type in (1, 2) and q >= 2


def _compose_order(gr: str, gs: str, g: int) -> int:
    from math import lcm

    return 2 * lcm(gamma_graph(gr).n, gamma_graph(gs).n)


def _const(n: int) -> Callable[..., int]:
    return lambda **_: n


def _always(**_) -> bool:
    return True


_ALL = [
    ConstructionRecipe("g3", ("r", "s"), "2 <= r < s", "exact girth-3 value",
                       _rs, lambda r, s: babi_g3_exact(r, s).value, babi_g3),
    ConstructionRecipe("g4", ("r", "s"), "2 <= r < s", "exact girth-4 value",
                       _rs, lambda r, s: babi_g4_exact(r, s).value, babi_g4),
    ConstructionRecipe("babi_235", (), "-", "8", _always, _const(8), babi_235),
    ConstructionRecipe("babi_345", (), "-", "16", _always, _const(16), babi_345),
    ConstructionRecipe("babi_565", ("assets",), "needs the (6,5)-cage asset", "36",
                       _always, _const(36), lambda assets=None: babi_565(assets)),
    ConstructionRecipe("babi_675", (), "-", "48", _always, _const(48), babi_675),
    ConstructionRecipe("babi_455_24", (), "-", "24", _always, _const(24), babi_455_24),
    ConstructionRecipe("babi_455_28", (), "-", "28", _always, _const(28), babi_455_28),
    ConstructionRecipe("babi_3555", (), "-", "28", _always, _const(28), babi_3555_from_rw),
    ConstructionRecipe(
        "amalgam", ("q", "type", "gamma"),
        "q prime power <= 32, type 1 or 2, gamma k-regular of girth >= 5 on q (type 1) or q-1 (type 2) vertices",
        "2q^2 (type 1), 2q^2-2 (type 2)",
        _amalgam_check, _amalgam_order,
        lambda q, type, gamma: amalgamate(q, type, gamma_graph(gamma)),
    ),
    ConstructionRecipe(
        "compose", ("gr", "gs", "g"), "gr r-regular, gs s-regular, r < s, both of girth g",
        "2 lcm(|gr|, |gs|)", lambda gr, gs, g: g >= 3, _compose_order,
        lambda gr, gs, g: compose_babi(gamma_graph(gr), gamma_graph(gs), g),
    ),
    ConstructionRecipe("g6_pair", ("q",), "q prime power <= 32", "2(q^2+q)",
                       lambda q: q >= 2, lambda q: 2 * (q * q + q), babi_g6_pair),
    ConstructionRecipe("g6_triangle", ("q",), "q prime power, 3 < q <= 32", "2(q^2+q-2)",
                       lambda q: q > 3, lambda q: 2 * (q * q + q - 2), babi_g6_triangle),
    ConstructionRecipe("g6_mod4", ("q",), "q prime power = 1 mod 4", "2q^2+q+1",
                       lambda q: q % 4 == 1, lambda q: 2 * q * q + q + 1, babi_g6_mod4),
    ConstructionRecipe("g6_oval", ("q",), "odd prime power q > 3", "2(q^2-q)",
                       lambda q: q % 2 == 1 and q > 3, lambda q: 2 * (q * q - q), babi_g6_oval),
]

RECIPES: dict[str, ConstructionRecipe] = {rec.name: rec for rec in _ALL}
