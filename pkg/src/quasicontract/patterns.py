"""Subgraph search, canonical forms and neighbourhood types."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import constructors
from .graph import Graph, induced_mask, iter_bits, relabel
from .graph6 import encode_bytes

MAX_PATTERN = 8


@dataclass(frozen=True)
class PatternMatch:
    """``mapping[i]`` is the host vertex that pattern vertex ``i`` lands on."""

    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph, induced: bool = False) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m) or any(not 0 <= v < host.n for v in m):
            return False
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                if pattern.has_edge(i, j):
                    if not host.has_edge(m[i], m[j]):
                        return False
                elif induced and host.has_edge(m[i], m[j]):
                    return False
        return True


def _pattern_order(pattern: Graph) -> list[int]:
    # Max degree first, then whichever vertex has most already-placed neighbours.
    degs = pattern.degrees()
    remaining = set(range(pattern.n))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda u: ((pattern.adj[u] & placed).bit_count(), degs[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def contains_subgraph(host: Graph, pattern: Graph, induced: bool = False) -> PatternMatch | None:
    """A monomorphism (or induced embedding) of ``pattern`` into ``host``, if any."""
    if pattern.n > MAX_PATTERN:
        raise ValueError(f"pattern has {pattern.n} vertices; at most {MAX_PATTERN} supported")
    if pattern.n > host.n or pattern.num_edges() > host.num_edges():
        return None
    if pattern.n == 0:
        return PatternMatch(())

    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    pdeg = [pattern.degree(v) for v in order]
    back_adj = [[pos[u] for u in iter_bits(pattern.adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    back_non = [[j for j in range(i) if not pattern.has_edge(order[j], v)] for i, v in enumerate(order)]

    hdeg = host.degrees()
    rank = sorted(range(host.n), key=lambda v: (-hdeg[v], v))
    hadj = host.adj
    full = host.full
    image = [0] * pattern.n
    k = pattern.n

    def candidates(i: int, used: int) -> list[int]:
        mask = full & ~used
        for j in back_adj[i]:
            mask &= hadj[image[j]]
        if induced:
            for j in back_non[i]:
                mask &= ~hadj[image[j]]
        need = pdeg[i]
        return [v for v in rank if mask >> v & 1 and hdeg[v] >= need]

    def search(i: int, used: int) -> bool:
        if i == k:
            return True
        for v in candidates(i, used):
            image[i] = v
            if search(i + 1, used | (1 << v)):
                return True
        return False

    if not search(0, 0):
        return None
    mapping = [0] * pattern.n
    for i, v in enumerate(order):
        mapping[v] = image[i]
    return PatternMatch(tuple(mapping))


K4_MINUS = constructors.k4_minus()
P5_COMPLEMENT = constructors.p5_complement()


def contains_k4_minus(g: Graph) -> PatternMatch | None:
    """K4 minus an edge is two triangles on a common edge: an edge with two common neighbours."""
    adj = g.adj
    for u, v in g.edges():
        common = adj[u] & adj[v]
        if common.bit_count() >= 2:
            a = (common & -common).bit_length() - 1
            rest = common & ~(1 << a)
            b = (rest & -rest).bit_length() - 1
            # k4_minus() lacks the edge {0, 1}; its common edge is {2, 3}.
            return PatternMatch((a, b, u, v))
    return None


def forbidden_pair_witness(g: Graph) -> tuple[str, PatternMatch] | None:
    """The first forbidden pattern found (K4 minus an edge, then co-P5) with its match."""
    match = contains_k4_minus(g)
    if match is not None:
        return "K4-", match
    match = contains_subgraph(g, P5_COMPLEMENT)
    if match is not None:
        return "co-P5", match
    return None


def forbidden_pair_free(g: Graph) -> bool:
    return forbidden_pair_witness(g) is None


class NeighborhoodType(enum.Enum):
    EMPTY = "4K1"
    ONE_EDGE = "2K1+K2"
    MATCHING = "2K2"
    OTHER = "other"


def classify_neighborhood(g: Graph, v: int) -> NeighborhoodType:
    """Isomorphism type of G[N(v)] for a degree-4 vertex; ``OTHER`` otherwise."""
    nb = g.adj[v]
    if nb.bit_count() != 4:
        return NeighborhoodType.OTHER
    h = induced_mask(g, nb)
    m = h.num_edges()
    if m == 0:
        return NeighborhoodType.EMPTY
    if m == 1:
        return NeighborhoodType.ONE_EDGE
    if m == 2 and max(h.degrees()) == 1:
        return NeighborhoodType.MATCHING
    return NeighborhoodType.OTHER


# --- canonical form -------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; splits are ordered by neighbour-count signature."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sigs[v], []).append(v)
            for key in sorted(groups):
                new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _uniform(adj: tuple[int, ...], cells: list[list[int]]) -> bool:
    # True when permuting vertices inside cells cannot change the labelled graph:
    # every cell is a clique or independent, every pair of cells complete or empty.
    masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        masks.append(m)
    for i, cell in enumerate(cells):
        for j, m in enumerate(masks):
            size = m.bit_count()
            allowed = (0, size - 1) if i == j else (0, size)
            for v in cell:
                if (adj[v] & m).bit_count() not in allowed:
                    return False
    return True


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        out.append(row)
    return tuple(out)


def canonical_labeling(g: Graph) -> list[int]:
    """An ordering of the vertices such that isomorphic graphs relabel identically.

    Individualise-and-refine search; the leaf with the largest relabelled
    adjacency tuple wins.  Automorphisms found between equal leaves prune
    sibling branches that lie in an already explored orbit.
    """
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    degs = [row.bit_count() for row in adj]
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degs[v], []).append(v)
    root = _refine(adj, [by_deg[d] for d in sorted(by_deg)])

    best_cert: tuple[int, ...] | None = None
    best_order: list[int] = []
    automorphisms: list[list[int]] = []

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best_cert, best_order
        order = [v for cell in cells for v in cell]
        cert = _certificate(adj, order)
        if best_cert is None or cert > best_cert:
            best_cert, best_order = cert, order
        elif cert == best_cert:
            perm = [0] * n
            for a, b in zip(best_order, order):
                perm[a] = b
            automorphisms.append(perm)

    def orbit_rep(v: int, parent: dict[int, int]) -> int:
        while parent.get(v, v) != v:
            v = parent[v]
        return v

    def explore(cells: list[list[int]], fixed: list[int]) -> None:
        if all(len(c) == 1 for c in cells) or _uniform(adj, cells):
            leaf(cells)
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        tried: list[int] = []
        for v in cells[target]:
            # Merge orbits of automorphisms that fix the current prefix pointwise.
            parent: dict[int, int] = {}
            for perm in automorphisms:
                if all(perm[f] == f for f in fixed):
                    for u in cells[target]:
                        a = orbit_rep(u, parent)
                        b = orbit_rep(perm[u], parent)
                        if a != b:
                            parent[max(a, b)] = min(a, b)
            rep = orbit_rep(v, parent)
            if any(orbit_rep(t, parent) == rep for t in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            explore(_refine(adj, child), fixed + [v])

    explore(root, [])
    return best_order


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph."""
    return encode_bytes(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
