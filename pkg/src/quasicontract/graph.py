"""Simple undirected graphs on the vertex set ``0..n-1``.

A :class:`Graph` stores one adjacency bitmask per vertex: bit ``j`` of
``adj[i]`` is set iff ``i`` and ``j`` are adjacent.  Vertex sets are passed
around as ``frozenset`` at the public surface and as int bitmasks internally.

Every operation that deletes or merges vertices compacts the survivors
while preserving their relative order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import comb

Edge = tuple[int, int]
VertexSet = frozenset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee a symmetric loop-free relation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls._trusted(n, (0,) * n)

    @property
    def full(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return to_set(self.adj[v])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


def max_degree(g: Graph) -> int:
    return max(g.degrees()) if g.n else 0


def is_regular(g: Graph, d: int | None = None) -> bool:
    degs = set(g.degrees())
    if len(degs) > 1:
        return False
    return d is None or not degs or degs == {d}


def set_neighborhood(g: Graph, mask: int) -> int:
    """N(S) as a bitmask: vertices outside ``mask`` adjacent to some member."""
    out = 0
    for v in iter_bits(mask):
        out |= g.adj[v]
    return out & ~mask


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ``0..g.n-1`` followed by ``h`` shifted up by ``g.n``."""
    return Graph._trusted(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    gmask = g.full
    hmask = h.full << g.n
    adj = tuple(row | hmask for row in g.adj) + tuple((row << g.n) | gmask for row in h.adj)
    return Graph._trusted(g.n + h.n, adj)


def copies(m: int, g: Graph) -> Graph:
    if m < 1:
        raise ValueError("number of copies must be positive")
    out = g
    for _ in range(m - 1):
        out = disjoint_union(out, g)
    return out


def relabel(g: Graph, order: list[int]) -> Graph:
    """The graph whose vertex ``i`` is ``order[i]`` of ``g`` (``order`` is a permutation)."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(g.n, tuple(adj))


def induced_mask(g: Graph, mask: int) -> Graph:
    keep = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(len(keep), tuple(adj))


def induced(g: Graph, s: Iterable[int]) -> Graph:
    """G[S], relabelled ``0..|S|-1`` in increasing order of the original labels."""
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    return induced_mask(g, to_mask(s))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    return induced_mask(g, g.full & ~to_mask(s))


def line_graph(g: Graph) -> Graph:
    """L(G); vertex ``i`` of the result is ``g.edges()[i]``."""
    edges = g.edges()
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = tuple((incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return Graph._trusted(len(edges), adj)


def line_graph_edge_count(g: Graph) -> int:
    return sum(comb(d, 2) for d in g.degrees())


def common_neighbors(g: Graph, u: int, v: int) -> int:
    return g.adj[u] & g.adj[v]


def triangle_free(g: Graph) -> bool:
    return not any(g.adj[u] & g.adj[v] for u, v in g.edges())


def every_edge_in_triangle(g: Graph) -> bool:
    return all(g.adj[u] & g.adj[v] for u, v in g.edges())
