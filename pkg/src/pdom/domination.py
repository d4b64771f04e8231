"""Exact solvers for partial domination.

A set S p-dominates a graph of order n when its closed neighborhood N[S]
holds at least ceil(p*n) vertices; the minimum cardinality of such a set is
the partial domination number for p. Sizes are tried upward from zero, so the
first success is optimal. Each size runs a depth-first search over vertices
in descending closed-neighborhood order with an admissible prune: a branch
dies once covered + picks_left * (best closed neighborhood among remaining
candidates) cannot reach the target. Witnesses and full enumerations come
from a second search in ascending vertex order, which visits candidate sets
in lexicographic order, so the reported witness is the lexicographically
least optimum and enumerations arrive sorted and duplicate free.

Proportions are exact rationals; coverage targets use integer ceiling
arithmetic throughout, never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph


def as_proportion(value: Fraction | int) -> Fraction:
    """Validate a proportion; must lie in [0, 1]."""
    p = Fraction(value)
    if p < 0 or p > 1:
        raise ValueError(f"proportion {p} outside [0, 1]")
    return p


def coverage_target(n: int, p: Fraction | int) -> int:
    """Least count c with c/n >= p, i.e. ceil(p*n); 0 when p = 0."""
    if n < 0:
        raise ValueError(f"negative order {n}")
    p = as_proportion(p)
    return -(-p.numerator * n // p.denominator)


def is_p_dominating(g: Graph, s: int, p: Fraction | int) -> bool:
    """Does the vertex set s cover at least ceil(p*n) vertices?"""
    if s & ~g.full_mask:
        raise ValueError("set mask mentions vertices outside the graph")
    target = coverage_target(g.order, p)
    return g.closed_neighborhood_of_set(s).bit_count() >= target


@dataclass(frozen=True)
class SolveResult:
    """Minimum size together with the lexicographically least witness mask."""

    size: int
    witness: int


@dataclass(frozen=True)
class SetFamily:
    """All minimum sets for one proportion, sorted lexicographically."""

    size: int
    sets: tuple[int, ...]


def _greedy_size(g: Graph, target: int) -> int:
    """Size of the greedy max-coverage solution; an upper bound for the optimum."""
    closed = [g.closed_neighborhood(v) for v in range(g.order)]
    covered = 0
    size = 0
    while covered.bit_count() < target:
        best = max(range(g.order), key=lambda v: ((closed[v] & ~covered).bit_count(), -v))
        covered |= closed[best]
        size += 1
    return size


def _cover_exists(g: Graph, k: int, target: int) -> bool:
    """Is there a set of at most k vertices covering at least target?"""
    n = g.order
    closed = [g.closed_neighborhood(v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-closed[v].bit_count(), v))
    covers = [closed[v] for v in order]
    sizes = [c.bit_count() for c in covers]

    def search(i: int, left: int, covered: int) -> bool:
        count = covered.bit_count()
        if count >= target:
            return True
        if left == 0 or i == n:
            return False
        if count + left * sizes[i] < target:  # sizes is nonincreasing
            return False
        if search(i + 1, left - 1, covered | covers[i]):
            return True
        return search(i + 1, left, covered)

    return search(0, k, 0)


def _suffix_best(closed: list[int]) -> list[int]:
    n = len(closed)
    out = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        out[i] = max(out[i + 1], closed[i].bit_count())
    return out


def _lex_first_cover(g: Graph, k: int, target: int) -> int | None:
    """Lexicographically least k-subset covering at least target, as a mask."""
    n = g.order
    closed = [g.closed_neighborhood(v) for v in range(n)]
    best = _suffix_best(closed)

    def search(start: int, left: int, covered: int, chosen: int) -> int | None:
        if left == 0:
            return chosen if covered.bit_count() >= target else None
        count = covered.bit_count()
        for v in range(start, n - left + 1):
            if count + left * best[v] < target:
                return None  # best[] is nonincreasing, so later starts fail too
            hit = search(v + 1, left - 1, covered | closed[v], chosen | 1 << v)
            if hit is not None:
                return hit
        return None

    return search(0, k, 0, 0)


def _all_covers(g: Graph, k: int, target: int) -> list[int]:
    """Every k-subset covering at least target, in lexicographic order."""
    n = g.order
    closed = [g.closed_neighborhood(v) for v in range(n)]
    best = _suffix_best(closed)
    out: list[int] = []

    def search(start: int, left: int, covered: int, chosen: int) -> None:
        if left == 0:
            if covered.bit_count() >= target:
                out.append(chosen)
            return
        count = covered.bit_count()
        for v in range(start, n - left + 1):
            if count + left * best[v] < target:
                return
            search(v + 1, left - 1, covered | closed[v], chosen | 1 << v)

    search(0, k, 0, 0)
    return out


def partial_domination_number(g: Graph, p: Fraction | int) -> SolveResult:
    """Minimum size of a p-dominating set, with the lex-least witness.

    p = 0 asks for nothing and yields size 0 with the empty witness.
    """
    target = coverage_target(g.order, p)
    if target == 0:
        return SolveResult(0, 0)
    bound = _greedy_size(g, target)
    for k in range(1, bound + 1):
        if _cover_exists(g, k, target):
            witness = _lex_first_cover(g, k, target)
            assert witness is not None
            return SolveResult(k, witness)
    raise AssertionError("greedy upper bound was not met")  # pragma: no cover


def domination_number(g: Graph) -> SolveResult:
    """Ordinary domination: every vertex must be covered (p = 1)."""
    return partial_domination_number(g, Fraction(1))


def all_minimum_sets(g: Graph, p: Fraction | int) -> SetFamily:
    """Every minimum p-dominating set; {empty set} when the target is 0."""
    target = coverage_target(g.order, p)
    size = partial_domination_number(g, p).size
    if size == 0:
        return SetFamily(0, (0,))
    return SetFamily(size, tuple(_all_covers(g, size, target)))


def influencing_set(g: Graph, p: Fraction | int) -> int:
    """Union of all minimum p-dominating sets, as a mask."""
    out = 0
    for s in all_minimum_sets(g, p).sets:
        out |= s
    return out


def influencing_intersection(g: Graph) -> int:
    """Intersection of the influencing sets over p = k/n for k = 1..n."""
    n = g.order
    if n < 1:
        raise ValueError("influencing intersection needs at least one vertex")
    out = g.full_mask
    for k in range(1, n + 1):
        out &= influencing_set(g, Fraction(k, n))
    return out
