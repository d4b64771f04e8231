"""Degree-guided heuristics and where minimum sets sit near max-degree vertices.

A natural first guess for a small p-dominating set is to grab the vertices
that cover the most. The greedy routine here does exactly that, and the
verdict helpers measure how the true minimum sets relate to a maximum-degree
vertex: whether some minimum set contains it, a neighbor of it, or a vertex
at distance two. Verdicts report raw truth; they never assume the expected
pattern holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domination import all_minimum_sets, as_proportion, coverage_target
from .graphs import Graph


def greedy_high_degree(g: Graph, p: Fraction | int) -> int:
    """Repeatedly take the vertex covering the most new vertices (ties to the
    lower index) until the coverage target is met. Valid but not always
    minimum."""
    target = coverage_target(g.order, p)
    closed = [g.closed_neighborhood(v) for v in range(g.order)]
    chosen = 0
    covered = 0
    while covered.bit_count() < target:
        best = max(range(g.order), key=lambda v: ((closed[v] & ~covered).bit_count(), -v))
        chosen |= 1 << best
        covered |= closed[best]
    return chosen


def _positive_proportion(p: Fraction | int) -> Fraction:
    p = as_proportion(p)
    if p == 0:
        raise ValueError("verdicts need a positive proportion; at p = 0 the only minimum set is empty")
    return p


def _check_max_degree(g: Graph, v: int) -> None:
    if g.degree(v) != g.max_degree():
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, not the maximum {g.max_degree()}")


@dataclass(frozen=True)
class LocatingVerdict:
    """How the minimum sets for one proportion sit around a max-degree vertex."""

    vertex: int
    family_size: int
    contains_vertex: bool        # some minimum set contains the vertex itself
    hits_neighbors: bool         # some minimum set meets its open neighborhood
    hits_distance_two: bool      # some minimum set meets its distance-2 shell


def proximity_verdict(g: Graph, p: Fraction | int, v: int) -> LocatingVerdict:
    """Examine every minimum set for p and report which shells around the
    max-degree vertex v are hit."""
    p = _positive_proportion(p)
    _check_max_degree(g, v)
    family = all_minimum_sets(g, p)
    self_mask = 1 << v
    nbr_mask = g.neighbors(v)
    far_mask = g.distance_two_neighbors(v)
    return LocatingVerdict(
        vertex=v,
        family_size=len(family.sets),
        contains_vertex=any(s & self_mask for s in family.sets),
        hits_neighbors=any(s & nbr_mask for s in family.sets),
        hits_distance_two=any(s & far_mask for s in family.sets),
    )


def support_within_two(g: Graph, p: Fraction | int, v: int) -> bool | None:
    """When the max-degree vertex v is in no minimum set for p, check that
    every minimum set keeps at least two members within distance two of v.
    Returns None (not applicable) when v does belong to some minimum set."""
    p = _positive_proportion(p)
    _check_max_degree(g, v)
    family = all_minimum_sets(g, p)
    if any(s >> v & 1 for s in family.sets):
        return None
    ball = g.closed_two_ball(v)
    return all((s & ball).bit_count() >= 2 for s in family.sets)
