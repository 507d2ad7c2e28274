"""Balanced biregular (babi) graphs of given girth.

A babi-graph with parameters (r, s; g) has girth g, every vertex of degree
r or s, and as many vertices of degree r as of degree s.
"""

from __future__ import annotations

from .graph import (
    ACYCLIC,
    BabiParams,
    Certificate,
    EdgeCensus,
    Graph,
    connect_switch,
    edge_census,
    girth,
    glue_leaves,
    max_fat_edge_sum,
    replicate,
    strip_leaves,
    verify_babi,
)
from .graph6 import graph6_decode, graph6_encode

__version__ = "0.1.0"

__all__ = [
    "ACYCLIC",
    "BabiParams",
    "Certificate",
    "EdgeCensus",
    "Graph",
    "connect_switch",
    "edge_census",
    "girth",
    "glue_leaves",
    "graph6_decode",
    "graph6_encode",
    "max_fat_edge_sum",
    "replicate",
    "strip_leaves",
    "verify_babi",
]
