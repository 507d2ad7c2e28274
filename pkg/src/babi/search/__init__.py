"""Exhaustive isomorph-free search for small babi-graphs."""

from __future__ import annotations

from .canon import canonical_form, canonical_graph, is_isomorphic
from .search import (
    BudgetExhausted,
    SearchOutcome,
    SearchSpec,
    certify_cage,
    count_nonisomorphic,
    enumerate_babi,
    exhaustive_min,
)

__all__ = [
    "BudgetExhausted",
    "SearchOutcome",
    "SearchSpec",
    "canonical_form",
    "canonical_graph",
    "certify_cage",
    "count_nonisomorphic",
    "enumerate_babi",
    "exhaustive_min",
    "is_isomorphic",
]
