"""Bitset-backed simple undirected graphs, generators, and Cartesian products.

Vertices are integers 0..n-1 and every vertex set is a plain int bitmask, so
neighborhood unions, coverage counts, and membership tests are single machine
operations. Order is capped at MAX_VERTICES to keep masks within one word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


class VertexCapError(ValueError):
    """Raised when a construction would exceed MAX_VERTICES vertices."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertices set."""
    out = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        out |= 1 << v
    return out


def members(mask: int) -> tuple[int, ...]:
    """Vertices of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def format_vertex_set(mask: int) -> str:
    """Render a bitmask as ``{0,3,5}`` (no spaces, increasing order)."""
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


@dataclass(frozen=True)
class Graph:
    """Immutable graph; ``adj[v]`` is the open-neighborhood bitmask of v."""

    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "adj", tuple(self.adj))
        n = len(self.adj)
        if n > MAX_VERTICES:
            raise VertexCapError(f"order {n} exceeds the cap of {MAX_VERTICES}")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighborhood of vertex {v} mentions vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in members(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.adj)) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self.adj):
            raise ValueError(f"vertex {v} out of range for order {len(self.adj)}")

    def neighbors(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        if not self.adj:
            raise ValueError("max_degree of an empty graph")
        return max(row.bit_count() for row in self.adj)

    def min_degree(self) -> int:
        if not self.adj:
            raise ValueError("min_degree of an empty graph")
        return min(row.bit_count() for row in self.adj)

    def max_degree_vertices(self) -> int:
        """Bitmask of the vertices attaining the maximum degree."""
        top = self.max_degree()
        return mask_of(v for v in range(self.order) if self.adj[v].bit_count() == top)

    def closed_neighborhood(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | 1 << v

    def closed_neighborhood_of_set(self, s: int) -> int:
        """N[S]: S together with every neighbor of a member of S."""
        if s & ~self.full_mask:
            raise ValueError("set mask mentions vertices outside the graph")
        out = s
        t = s
        while t:
            low = t & -t
            out |= self.adj[low.bit_length() - 1]
            t ^= low
        return out

    def distance_two_neighbors(self, v: int) -> int:
        """Vertices at distance exactly two from v."""
        closed = self.closed_neighborhood(v)
        return self.closed_neighborhood_of_set(closed) & ~closed

    def closed_two_ball(self, v: int) -> int:
        """Vertices at distance at most two from v (v included)."""
        return self.closed_neighborhood_of_set(self.closed_neighborhood(v))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.order):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in members(row):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph of order n with the given edge list (loops and range errors rejected)."""
    if n < 0:
        raise ValueError(f"negative order {n}")
    if n > MAX_VERTICES:
        raise VertexCapError(f"order {n} exceeds the cap of {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(tuple(adj))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: side one is 0..m-1, side two is m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError(f"complete bipartite sides must be positive, got {m}, {n}")
    return from_edges(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def star(k: int) -> Graph:
    """Star with center 0 and leaves 1..k."""
    if k < 1:
        raise ValueError(f"star needs at least 1 leaf, got {k}")
    return from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def subdivided_star(k: int) -> Graph:
    """Star on k legs with every edge subdivided: center 0, inner vertices
    1..k, and the outer leaf of inner i is k+i."""
    if k < 1:
        raise ValueError(f"subdivided star needs at least 1 leg, got {k}")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, k + i) for i in range(1, k + 1)]
    return from_edges(2 * k + 1, edges)


def twin_hub_graph() -> Graph:
    """Nine vertices: apex 0 joined to mids 1-4; hub 5 joins mids 1,2 and hub 6
    joins mids 3,4; leaf 7 hangs on hub 5 and leaf 8 on hub 6. The unique pair
    covering eight vertices is the two hubs."""
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4),  # apex to mids
        (1, 5), (2, 5),                  # hub 5 under mids 1,2
        (3, 6), (4, 6),                  # hub 6 under mids 3,4
        (5, 7), (6, 8),                  # pendant leaves of the hubs
    ]
    return from_edges(9, edges)


def pendant_wheel_graph() -> Graph:
    """Hub 0 joined to ring 1-4 (a 4-cycle), each ring vertex carrying a
    pendant leaf: the leaf of ring vertex i is i+4."""
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4),  # hub spokes
        (1, 2), (2, 3), (3, 4), (1, 4),  # ring
        (1, 5), (2, 6), (3, 7), (4, 8),  # pendant leaves
    ]
    return from_edges(9, edges)


def twin_broom_tree() -> Graph:
    """Tree on 11 vertices: root 0 with leaf children 1 and 4 and broom
    children 2 and 3; broom 2 carries leaves 5-7, broom 3 carries leaves
    8-10."""
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (2, 5), (2, 6), (2, 7),
        (3, 8), (3, 9), (3, 10),
    ]
    return from_edges(11, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (i, j) of G x H maps to index i*|H| + j."""
    if g.order == 0 or h.order == 0:
        raise ValueError("product factors must be nonempty")
    n, m = g.order, h.order
    if n * m > MAX_VERTICES:
        raise VertexCapError(f"product order {n * m} exceeds the cap of {MAX_VERTICES}")
    adj = []
    for i in range(n):
        shifted_g = [1 << (k * m) for k in members(g.adj[i])]
        for j in range(m):
            row = h.adj[j] << (i * m)  # same g-coordinate, adjacent h-coordinates
            for base in shifted_g:     # adjacent g-coordinates, same h-coordinate
                row |= base << j
            adj.append(row)
    return Graph(tuple(adj))
