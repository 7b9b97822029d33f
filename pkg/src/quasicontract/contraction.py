"""Edge and subgraph contraction and (quasi) contractibility.

Contracting ``xy`` (``x < y``) puts the merged vertex in slot ``x``; vertices
above ``y`` move down by one and everything else keeps its label.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations

from .connectivity import (
    Separation,
    components,
    is_k_connected,
    is_quasi_k_connected,
    minimum_separator,
    quasi_obstruction,
    vertex_connectivity,
)
from .graph import Edge, Graph, iter_bits, norm_edge, to_mask, to_set

# Re-check the minimum-degree shortcut against a full connectivity test.
DEBUG_PRETEST = os.environ.get("QUASICONTRACT_DEBUG", "") not in ("", "0")


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    merged_vertex: int
    origin: Edge


class Verdict(enum.Enum):
    QUASI_K = "quasi_k"
    E0_MEMBER = "e0_member"
    BELOW = "below"


@dataclass(frozen=True)
class QuasiFragment:
    fragment: frozenset[int]
    cut: frozenset[int]
    with_respect_to: Edge

    def as_dict(self) -> dict:
        return {"fragment": sorted(self.fragment), "cut": sorted(self.cut), "edge": list(self.with_respect_to)}


def _squeeze(row: int, y: int) -> int:
    # Drop bit y and shift the higher bits down by one.
    low = row & ((1 << y) - 1)
    return low | ((row >> (y + 1)) << y)


def contract_edge(g: Graph, e: Edge) -> ContractionResult:
    x, y = norm_edge(*e)
    if x == y or not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
        raise ValueError(f"{e} is not an edge")
    return ContractionResult(_contract(g, x, y), x, (x, y))


def _contract(g: Graph, x: int, y: int) -> Graph:
    adj = g.adj
    xbit = 1 << x
    merged = (adj[x] | adj[y]) & ~xbit & ~(1 << y)
    rows = []
    for v in range(g.n):
        if v == y:
            continue
        if v == x:
            row = merged
        else:
            row = adj[v]
            if row >> y & 1:
                row = (row & ~(1 << y)) | xbit
        rows.append(_squeeze(row, y))
    return Graph._trusted(g.n - 1, tuple(rows))


def contracted(g: Graph, e: Edge) -> Graph:
    return contract_edge(g, e).graph


def contract_subgraph(g: Graph, s) -> Graph:
    """Contract each component of G[s] to one vertex (its least member's slot)."""
    smask = to_mask(s)
    if not smask:
        raise ValueError("cannot contract an empty vertex set")
    rep = list(range(g.n))
    for comp in components(g, smask):
        low = (comp & -comp).bit_length() - 1
        for v in iter_bits(comp):
            rep[v] = low
    keep = [v for v in range(g.n) if rep[v] == v]
    slot = {v: i for i, v in enumerate(keep)}
    edges = set()
    for u, v in g.edges():
        a, b = slot[rep[u]], slot[rep[v]]
        if a != b:
            edges.add(norm_edge(a, b))
    return Graph.from_edges(len(keep), sorted(edges))


def contracted_min_degree(g: Graph, e: Edge) -> int:
    """Minimum degree of G/e without building it."""
    x, y = norm_edge(*e)
    adj = g.adj
    pair = (1 << x) | (1 << y)
    best = ((adj[x] | adj[y]) & ~pair).bit_count()
    for v in range(g.n):
        if v == x or v == y:
            continue
        row = adj[v]
        d = row.bit_count()
        if row & pair == pair:
            d -= 1
        best = min(best, d)
    return best


def min_degree_pretest(g: Graph, e: Edge) -> bool:
    """delta(G/e) >= 4; for quasi 5-connected ``g`` this forces G/e to be 4-connected."""
    return contracted_min_degree(g, e) >= 4


def contraction_obstruction(g: Graph, e: Edge, k: int) -> Separation | None:
    """A separation of G/e showing it is not quasi k-connected, or ``None``."""
    return quasi_obstruction(contracted(g, e), k)


def classify_contraction(g: Graph, e: Edge, k: int, pretest: bool = False) -> Verdict:
    """Classify G/e for quasi k-connected ``g``.

    With ``pretest`` (only meaningful for ``k == 5`` and quasi 5-connected
    ``g``) a minimum degree of at least four in G/e is taken as proof of
    4-connectivity.
    """
    x, y = norm_edge(*e)
    if not (0 <= y < g.n) or x == y or not g.has_edge(x, y):
        raise ValueError(f"{e} is not an edge")
    h = _contract(g, x, y)
    if h.n < k:
        # too small to be (k-1)-connected
        return Verdict.BELOW
    obstruction = quasi_obstruction(h, k)
    if obstruction is None:
        return Verdict.QUASI_K
    if len(obstruction.cut) < k - 1:
        return Verdict.BELOW
    if pretest and k == 5 and min_degree_pretest(g, e):
        if DEBUG_PRETEST:
            assert vertex_connectivity(h) >= 4, f"minimum-degree shortcut failed on {e}"
        return Verdict.E0_MEMBER
    return Verdict.E0_MEMBER if is_k_connected(h, k - 1) else Verdict.BELOW


def is_k_contractible(g: Graph, e: Edge, k: int) -> bool:
    """kappa(G/e) >= k."""
    if not is_k_connected(g, k):
        raise ValueError(f"graph is not {k}-connected")
    return is_k_connected(contracted(g, e), k)


def k_contractible_edges(g: Graph, k: int) -> list[Edge]:
    if not is_k_connected(g, k):
        raise ValueError(f"graph is not {k}-connected")
    return [e for e in g.edges() if is_k_connected(contracted(g, e), k)]


def quasi_contractible_edges(g: Graph, k: int) -> list[Edge]:
    if not is_quasi_k_connected(g, k):
        raise ValueError(f"graph is not quasi {k}-connected")
    return [e for e in g.edges() if classify_contraction(g, e, k, pretest=True) is Verdict.QUASI_K]


def is_contraction_critical(g: Graph, k: int, quasi: bool = False) -> bool:
    """No edge is (quasi) k-contractible.

    Complete graphs are accepted: K_5 contracts to K_4, so it counts as
    contraction critical 4-connected.
    """
    if quasi:
        if not is_quasi_k_connected(g, k):
            raise ValueError(f"graph is not quasi {k}-connected")
        return all(classify_contraction(g, e, k, pretest=True) is not Verdict.QUASI_K for e in g.edges())
    if not is_k_connected(g, k):
        raise ValueError(f"graph is not {k}-connected")
    return not any(is_k_connected(contracted(g, e), k) for e in g.edges())


def small_cut_after_contraction(g: Graph, e: Edge, k: int) -> Separation | None:
    """A cut of G/e with fewer than ``k`` vertices, or ``None`` if G/e is k-connected."""
    h = contracted(g, e)
    if h.n <= k:
        return None
    sep = minimum_separator(h)
    if sep is not None and len(sep.cut) < k:
        return sep
    return None


# --- quasi fragments ------------------------------------------------------


def quasi_fragments(g: Graph, e: Edge, k: int) -> list[QuasiFragment]:
    """All F with N(F) a k-cut through both ends of ``e``, |F| >= 2 and |V - F - N(F)| >= 2.

    Candidate cuts are ``T0 + {x, y}`` for (k-2)-subsets ``T0``; fragments are
    unions of components of G - T whose neighbourhood is all of T.
    Ordered by cut, then by fragment.
    """
    x, y = norm_edge(*e)
    if not g.has_edge(x, y):
        raise ValueError(f"{e} is not an edge")
    adj = g.adj
    full = g.full
    pair = (1 << x) | (1 << y)
    others = [v for v in range(g.n) if v != x and v != y]
    found: list[QuasiFragment] = []
    for t0 in combinations(others, k - 2):
        tmask = to_mask(t0) | pair
        rest = full & ~tmask
        comps = components(g, rest)
        if len(comps) < 2:
            continue
        for pick in range(1, (1 << len(comps)) - 1):
            f = 0
            for i, c in enumerate(comps):
                if pick >> i & 1:
                    f |= c
            if f.bit_count() < 2 or (rest & ~f).bit_count() < 2:
                continue
            nf = 0
            for v in iter_bits(f):
                nf |= adj[v]
            if nf & ~f == tmask:
                found.append(QuasiFragment(to_set(f), to_set(tmask), (x, y)))
    found.sort(key=lambda q: (sorted(q.cut), sorted(q.fragment)))
    return found


def quasi_atom(g: Graph, edges: list[Edge], k: int) -> QuasiFragment | None:
    """A smallest quasi fragment with respect to any edge in ``edges``.

    Ties go to the lexicographically smallest fragment, then smallest cut and edge.
    """
    best = None
    best_key = None
    for e in edges:
        for q in quasi_fragments(g, e, k):
            key = (len(q.fragment), sorted(q.fragment), sorted(q.cut), q.with_respect_to)
            if best_key is None or key < best_key:
                best, best_key = q, key
    return best
