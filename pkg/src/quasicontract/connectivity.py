"""Vertex connectivity, vertex cuts and quasi k-connectivity.

A *k-cut* is a set ``T`` of ``k`` vertices with ``G - T`` disconnected.  It is
*nontrivial* when the components of ``G - T`` can be split into two groups
that each hold at least two vertices.  A graph is *quasi k-connected* when it
is (k-1)-connected and has no nontrivial (k-1)-cut.

Connectivity follows the usual convention: ``G`` is j-connected iff
``n > j`` and no set of fewer than ``j`` vertices disconnects it, so
``kappa(K_n) = n - 1``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, iter_bits, to_mask, to_set

# Below this size the quasi test enumerates small sides directly.
SMALL_SIDE_LIMIT = 12


class CutClass(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class Separation:
    """A cut together with two sides that it separates."""

    cut: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def nontrivial(self) -> bool:
        return len(self.side_a) >= 2 and len(self.side_b) >= 2

    def is_valid_for(self, g: Graph) -> bool:
        cut, a, b = to_mask(self.cut), to_mask(self.side_a), to_mask(self.side_b)
        if not a or not b or cut & a or cut & b or a & b or (cut | a | b) != g.full:
            return False
        return not any(g.adj[v] & b for v in iter_bits(a))

    def as_dict(self) -> dict:
        return {"cut": sorted(self.cut), "side_a": sorted(self.side_a), "side_b": sorted(self.side_b)}


@dataclass(frozen=True)
class Cut:
    """A vertex cut with the components it leaves behind."""

    vertices: frozenset[int]
    components: tuple[frozenset[int], ...]
    cut_class: CutClass

    @property
    def nontrivial(self) -> bool:
        return self.cut_class is CutClass.NONTRIVIAL

    def separation(self) -> Separation:
        side_a = _witness_side([to_mask(c) for c in self.components])
        rest = frozenset().union(*self.components) - side_a
        return Separation(self.vertices, side_a, rest)


def components(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of ``G[mask]`` as bitmasks, ordered by least vertex."""
    if mask is None:
        mask = g.full
    adj = g.adj
    out = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & mask & ~comp
            comp |= frontier
        out.append(comp)
        mask &= ~comp
    return out


def is_connected(g: Graph, mask: int | None = None) -> bool:
    if mask is None:
        mask = g.full
    return len(components(g, mask)) <= 1


def groupable(sizes: list[int]) -> bool:
    """Can components of these sizes be split into two groups of >= 2 vertices each?

    Exact subset-sum over the component sizes: a subset summing to ``s`` with
    ``2 <= s <= total - 2`` is automatically a proper nonempty subset.
    """
    total = sum(sizes)
    if len(sizes) < 2 or total < 4:
        return False
    reach = 1
    for s in sizes:
        reach |= reach << s
    window = ((1 << (total - 3)) - 1) << 2
    return bool(reach & window)


def _witness_side(comps: list[int]) -> frozenset[int]:
    # Largest component (least vertex on ties) when that leaves >= 2 behind,
    # otherwise two singletons; for trivial cuts just the first component.
    sizes = [c.bit_count() for c in comps]
    total = sum(sizes)
    big = max(range(len(comps)), key=lambda i: (sizes[i], -i))
    if sizes[big] >= 2 and total - sizes[big] >= 2:
        return to_set(comps[big])
    if sizes[big] == 1 and len(comps) >= 4:
        return to_set(comps[0] | comps[1])
    return to_set(comps[0])


def classify_cut(g: Graph, cut: frozenset[int] | set[int]) -> Cut | None:
    """Classify ``cut``; ``None`` when ``G - cut`` is connected."""
    cmask = to_mask(cut)
    comps = components(g, g.full & ~cmask)
    if len(comps) < 2:
        return None
    cls = CutClass.NONTRIVIAL if groupable([c.bit_count() for c in comps]) else CutClass.TRIVIAL
    return Cut(frozenset(cut), tuple(to_set(c) for c in comps), cls)


def enumerate_cuts(g: Graph, k: int) -> list[Cut]:
    """Every k-cut of ``g`` in lexicographic order, each classified."""
    out = []
    full = g.full
    for combo in combinations(range(g.n), k):
        cmask = to_mask(combo)
        comps = components(g, full & ~cmask)
        if len(comps) >= 2:
            cls = CutClass.NONTRIVIAL if groupable([c.bit_count() for c in comps]) else CutClass.TRIVIAL
            out.append(Cut(frozenset(combo), tuple(to_set(c) for c in comps), cls))
    return out


def nontrivial_cuts(g: Graph, k: int) -> list[Cut]:
    return [c for c in enumerate_cuts(g, k) if c.nontrivial]


# --- max flow -------------------------------------------------------------


class _Flow:
    """Unit vertex-capacity network on the split graph of ``G[allowed]``.

    Node ``2v`` is the in-copy of ``v`` and ``2v + 1`` its out-copy.
    """

    def __init__(self, g: Graph, allowed: int, sources: int, sinks: int):
        self.n = 2 * g.n + 2
        self.src = 2 * g.n
        self.snk = 2 * g.n + 1
        self.head: list[list[int]] = [[] for _ in range(self.n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        # Only vertex arcs are finite, so every minimum cut is a vertex cut.
        big = g.n + 1
        for v in iter_bits(allowed):
            self._add(2 * v, 2 * v + 1, 1)
            for u in iter_bits(g.adj[v] & allowed):
                self._add(2 * v + 1, 2 * u, big)
        for v in iter_bits(sources & allowed):
            self._add(self.src, 2 * v, big)
        for v in iter_bits(sinks & allowed):
            self._add(2 * v + 1, self.snk, big)

    def _add(self, a: int, b: int, c: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def _augment(self) -> bool:
        prev_edge = [-1] * self.n
        seen = [False] * self.n
        seen[self.src] = True
        queue = deque([self.src])
        to, cap, head = self.to, self.cap, self.head
        while queue:
            a = queue.popleft()
            for e in head[a]:
                b = to[e]
                if cap[e] and not seen[b]:
                    seen[b] = True
                    prev_edge[b] = e
                    if b == self.snk:
                        while b != self.src:
                            e = prev_edge[b]
                            cap[e] -= 1
                            cap[e ^ 1] += 1
                            b = to[e ^ 1]
                        # every augmenting path crosses a unit vertex arc
                        return True
                    queue.append(b)
        return False

    def run(self, limit: int | None = None) -> int:
        flow = 0
        while (limit is None or flow < limit) and self._augment():
            flow += 1
        return flow

    def source_side(self) -> list[bool]:
        seen = [False] * self.n
        seen[self.src] = True
        queue = deque([self.src])
        while queue:
            a = queue.popleft()
            for e in self.head[a]:
                b = self.to[e]
                if self.cap[e] and not seen[b]:
                    seen[b] = True
                    queue.append(b)
        return seen


def disjoint_paths(g: Graph, sources: int, sinks: int, allowed: int | None = None,
                   limit: int | None = None) -> int:
    """Maximum number of vertex-disjoint paths from ``sources`` to ``sinks`` (bitmasks)."""
    if allowed is None:
        allowed = g.full
    return _Flow(g, allowed, sources, sinks).run(limit)


def local_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Number of internally disjoint s-t paths for nonadjacent ``s != t``."""
    if g.has_edge(s, t) or s == t:
        raise ValueError("local connectivity needs distinct nonadjacent vertices")
    allowed = g.full & ~(1 << s) & ~(1 << t)
    return disjoint_paths(g, g.adj[s], g.adj[t], allowed, limit)


def _separator_between(g: Graph, s: int, t: int) -> frozenset[int]:
    allowed = g.full & ~(1 << s) & ~(1 << t)
    net = _Flow(g, allowed, g.adj[s], g.adj[t])
    net.run()
    side = net.source_side()
    return frozenset(v for v in iter_bits(allowed) if side[2 * v] and not side[2 * v + 1])


def _even_pairs(g: Graph, limit: int | None):
    """Run Even's scheme; yield (kappa_so_far, s, t) improvements."""
    best = g.n - 1
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            cap = best if limit is None else min(best, limit)
            val = local_connectivity(g, i, j, cap)
            if val < best:
                best = val
                yield best, i, j
        i += 1


def vertex_connectivity(g: Graph) -> int:
    """kappa(G) by unit-capacity max flow over nonadjacent pairs (Even's scheme)."""
    best = g.n - 1 if g.n else 0
    for best, _, _ in _even_pairs(g, None):
        if best == 0:
            break
    return max(best, 0)


def minimum_separator(g: Graph) -> Separation | None:
    """A minimum vertex cut with its sides, or ``None`` for complete graphs."""
    found = None
    for best, s, t in _even_pairs(g, None):
        found = (s, t)
        if best == 0:
            break
    if found is None:
        return None
    s, t = found
    cut = _separator_between(g, s, t)
    comps = components(g, g.full & ~to_mask(cut))
    a = next(c for c in comps if c >> s & 1)
    return Separation(cut, to_set(a), to_set(g.full & ~to_mask(cut) & ~a))


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    if k <= 0:
        return True
    if min(g.degrees()) < k:
        return False
    for best, _, _ in _even_pairs(g, k):
        if best < k:
            return False
    return True


def brute_force_connectivity(g: Graph) -> int:
    """kappa(G) by exhaustive subset search; testing oracle for ``n <= 12``."""
    if g.n > 12:
        raise ValueError("brute-force connectivity is limited to n <= 12")
    full = g.full
    for size in range(0, max(g.n - 1, 0)):
        for combo in combinations(range(g.n), size):
            rest = full & ~to_mask(combo)
            if rest.bit_count() >= 2 and len(components(g, rest)) >= 2:
                return size
    return max(g.n - 1, 0)


# --- quasi k-connectivity -------------------------------------------------


def _small_side_obstruction(g: Graph, k: int) -> Separation | None:
    # Every separation (A, T, B) has a side of size <= (n - |T|) / 2 whose
    # neighbourhood is inside T, so scanning small A finds all obstructions
    # once disconnected graphs (|T| = 0) are handled separately.
    n, adj, full = g.n, g.adj, g.full
    comps = components(g)
    if len(comps) >= 2:
        return Separation(frozenset(), to_set(comps[0]), to_set(full & ~comps[0]))
    limit = max((n - 1) // 2, 1)
    stack = [(0, 0, 0, 0)]
    while stack:
        start, amask, union, size = stack.pop()
        for v in range(n - 1, start - 1, -1):
            a2 = amask | (1 << v)
            u2 = union | adj[v]
            t = u2 & ~a2
            b = full & ~a2 & ~t
            s2 = size + 1
            if b:
                tc = t.bit_count()
                if tc < k - 1 or (tc == k - 1 and s2 >= 2 and b.bit_count() >= 2):
                    return Separation(to_set(t), to_set(a2), to_set(b))
            if s2 < limit:
                stack.append((v + 1, a2, u2, s2))
    return None


def quasi_obstruction(g: Graph, k: int) -> Separation | None:
    """A separation showing ``g`` is not quasi k-connected, if one exists.

    The cut is either smaller than ``k - 1`` or is a nontrivial (k-1)-cut.
    ``None`` is also returned for graphs with fewer than ``k`` vertices,
    which have no cut at all; see :func:`is_quasi_k_connected`.
    """
    if k < 2:
        raise ValueError("quasi k-connectivity needs k >= 2")
    if g.n <= SMALL_SIDE_LIMIT:
        return _small_side_obstruction(g, k)
    sep = minimum_separator(g)
    if sep is not None and len(sep.cut) < k - 1:
        return sep
    if k - 1 <= g.n - 2:
        for combo in combinations(range(g.n), k - 1):
            comps = components(g, g.full & ~to_mask(combo))
            if len(comps) >= 2 and groupable([c.bit_count() for c in comps]):
                side = _witness_side(comps)
                rest = to_set(g.full & ~to_mask(combo)) - side
                return Separation(frozenset(combo), side, rest)
    return None


def is_quasi_k_connected(g: Graph, k: int) -> bool:
    if k < 2:
        raise ValueError("quasi k-connectivity needs k >= 2")
    return g.n >= k and quasi_obstruction(g, k) is None


# --- cubic graphs ---------------------------------------------------------


def induced_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All chordless cycles, each listed once starting at its least vertex."""
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def extend(path: list[int], pmask: int, inner: int, s: int) -> None:
        last = path[-1]
        for w in iter_bits(adj[last] & ~pmask & ~((1 << (s + 1)) - 1)):
            if adj[w] & inner:
                continue
            if adj[w] >> s & 1:
                if w > path[1]:
                    out.append(tuple(path) + (w,))
                continue
            extend(path + [w], pmask | (1 << w), inner | (1 << last), s)

    for s in range(g.n):
        for p1 in iter_bits(adj[s] >> (s + 1)):
            p1 += s + 1
            extend([s, p1], (1 << s) | (1 << p1), 0, s)
    out.sort(key=lambda c: (len(c), c))
    return out


@dataclass(frozen=True)
class CyclicObstruction:
    """Two disjoint cycles joined by fewer than four disjoint paths, and a small separator."""

    cycle_a: tuple[int, ...]
    cycle_b: tuple[int, ...]
    separator: frozenset[int]

    def as_dict(self) -> dict:
        return {"cycle_a": list(self.cycle_a), "cycle_b": list(self.cycle_b), "separator": sorted(self.separator)}


def _check_cubic(g: Graph) -> None:
    if any(d != 3 for d in g.degrees()):
        raise ValueError("graph is not cubic")


def cyclic_obstruction(g: Graph, paths: int = 4) -> CyclicObstruction | None:
    """Find disjoint cycles C, D with fewer than ``paths`` disjoint C-D paths.

    Only chordless cycles are examined: a chorded cycle contains a shorter
    cycle on a subset of its vertices, and shrinking an end set can only
    lower the number of disjoint paths.
    """
    _check_cubic(g)
    cycles = induced_cycles(g)
    masks = [to_mask(c) for c in cycles]
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            b = masks[j]
            if a & b:
                continue
            net = _Flow(g, g.full, a, b)
            if net.run(paths) < paths:
                side = net.source_side()
                sep = frozenset(v for v in range(g.n) if side[2 * v] and not side[2 * v + 1])
                return CyclicObstruction(cycles[i], cycles[j], sep)
    return None


def is_cyclically_4_connected_cubic(g: Graph) -> bool:
    """Every two vertex-disjoint cycles are joined by four disjoint paths."""
    return cyclic_obstruction(g) is None


def cyclic_edge_connectivity(g: Graph, limit: int = 4) -> int | None:
    """Size of a smallest cyclic edge cut if it is below ``limit``, else ``None``.

    A cyclic edge cut leaves at least two components that contain cycles.
    """
    edges = g.edges()
    for size in range(1, limit):
        for combo in combinations(range(len(edges)), size):
            adj = list(g.adj)
            for idx in combo:
                u, v = edges[idx]
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            h = Graph._trusted(g.n, tuple(adj))
            cyclic = 0
            for comp in components(h):
                nv = comp.bit_count()
                ne = sum((adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
                if ne >= nv:
                    cyclic += 1
            if cyclic >= 2:
                return size
    return None
