"""Berge graph recognition, decompositions and exhaustive lemma checks.

Graphs are passed as graph6 strings or as ``(n, edges)`` pairs; results are
plain dicts mirroring the JSON printed by the ``berge`` command-line tool.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence, Tuple, Union

from . import _berge
from ._berge import BudgetExceeded, NotBerge, claim_ids, max_vertices

GraphLike = Union[str, Tuple[int, Iterable[Tuple[int, int]]]]

__all__ = [
    "BudgetExceeded",
    "NotBerge",
    "claim_ids",
    "classify",
    "decompose",
    "detect",
    "edges",
    "f_ladder",
    "generate",
    "graph6",
    "is_berge",
    "is_perfect",
    "max_vertices",
    "skew_partitions",
    "verify",
]


def graph6(g: GraphLike) -> str:
    """graph6 text for a graph6 string or an ``(n, edges)`` pair."""
    if isinstance(g, str):
        return g
    n, es = g
    return _berge.graph6_from_edges(n, [tuple(e) for e in es])


def edges(g: GraphLike) -> Tuple[int, list]:
    """``(n, sorted edge list)`` for any accepted graph form."""
    n, es = _berge.edges_from_graph6(graph6(g))
    return n, [tuple(e) for e in es]


def is_berge(g: GraphLike) -> dict:
    return json.loads(_berge.is_berge(graph6(g)))


def is_perfect(g: GraphLike, limit: int = 14) -> dict:
    return json.loads(_berge.is_perfect(graph6(g), limit))


def classify(g: GraphLike) -> dict:
    return json.loads(_berge.classify(graph6(g)))


def decompose(g: GraphLike) -> dict:
    return json.loads(_berge.decompose(graph6(g)))


def skew_partitions(g: GraphLike) -> dict:
    return json.loads(_berge.skew_partitions(graph6(g)))


def detect(g: GraphLike, structure: str, all: bool = False) -> dict:
    """structure: prism, wheel, double-diamond, lk33, lk33e or appearance-k4."""
    return json.loads(_berge.detect(graph6(g), structure, all))


def f_ladder(g: GraphLike, check_f8: Optional[bool] = None) -> dict:
    return json.loads(_berge.f_ladder(graph6(g), check_f8))


def verify(
    claim: str,
    *,
    exhaustive: Optional[int] = None,
    generator: Optional[str] = None,
    samples: int = 0,
    seed: int = 0,
    graphs: Sequence[GraphLike] = (),
    jobs: int = 1,
    binding_budget: int = 1 << 12,
) -> dict:
    """Check a claim over one source: all graphs on ``exhaustive`` vertices,
    ``samples`` draws from ``generator``, or the given ``graphs``."""
    return json.loads(
        _berge.verify(
            claim,
            exhaustive,
            generator,
            samples,
            seed,
            [graph6(g) for g in graphs],
            jobs,
            binding_budget,
        )
    )


def generate(spec: str, seed: int, samples: int = 1) -> list:
    """graph6 strings for samples 0..samples-1 of a generator spec."""
    return _berge.generate(spec, seed, samples)
