"""Handle addition, cubic cyclically 4-connected graphs, small-graph enumeration."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import constructors
from .graph import Edge, Graph, norm_edge
from .patterns import canonical_form, canonical_graph

MAX_BUILTIN_N = 8


@dataclass(frozen=True)
class HandleSite:
    e1: Edge
    e2: Edge

    def __post_init__(self) -> None:
        object.__setattr__(self, "e1", norm_edge(*self.e1))
        object.__setattr__(self, "e2", norm_edge(*self.e2))
        if set(self.e1) & set(self.e2):
            raise ValueError(f"edges {self.e1} and {self.e2} share an endpoint")


def add_handle(g: Graph, site: HandleSite) -> Graph:
    """Subdivide ``e1`` by vertex ``n`` and ``e2`` by vertex ``n + 1``, then join the two."""
    for e in (site.e1, site.e2):
        if not g.has_edge(*e):
            raise ValueError(f"{e} is not an edge")
    a, b = site.e1
    c, d = site.e2
    s, t = g.n, g.n + 1
    edges = [e for e in g.edges() if e != site.e1 and e != site.e2]
    edges += [(a, s), (b, s), (c, t), (d, t), (s, t)]
    return Graph.from_edges(g.n + 2, edges)


def handle_sites(g: Graph) -> Iterator[HandleSite]:
    """Unordered pairs of nonadjacent edges, in lexicographic order."""
    for e1, e2 in combinations(g.edges(), 2):
        if not set(e1) & set(e2):
            yield HandleSite(e1, e2)


def handle_children(g: Graph) -> Iterator[Graph]:
    for site in handle_sites(g):
        yield add_handle(g, site)


def generate_ccc4(max_n: int) -> list[Graph]:
    """Closure of {K_3,3, Q_3} under handle addition, up to ``max_n`` vertices.

    Returned graphs are canonically labelled, sorted by ``(n, canonical_form)``.
    """
    if max_n < 6 or max_n % 2:
        raise ValueError("max_n must be even and at least 6")
    seen: dict[bytes, Graph] = {}
    frontier: dict[int, set[bytes]] = {}
    for seed in (constructors.k33(), constructors.cube()):
        if seed.n <= max_n:
            key = canonical_form(seed)
            seen[key] = canonical_graph(seed)
            frontier.setdefault(seed.n, set()).add(key)
    for n in range(6, max_n - 1, 2):
        for key in sorted(frontier.get(n, ())):
            for child in handle_children(seen[key]):
                ckey = canonical_form(child)
                if ckey not in seen:
                    seen[ckey] = canonical_graph(child)
                    frontier.setdefault(n + 2, set()).add(ckey)
    return [seen[k] for k in sorted(seen, key=lambda k: (seen[k].n, k))]


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    # One canonical representative per class, built by adding a vertex with
    # every possible neighbourhood to each class on n - 1 vertices.
    if n == 0:
        return (Graph.empty(0),)
    out: dict[bytes, Graph] = {}
    for g in _all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [row | ((nb >> v & 1) << (n - 1)) for v, row in enumerate(g.adj)]
            h = Graph._trusted(n, tuple(rows) + (nb,))
            key = canonical_form(h)
            if key not in out:
                out[key] = canonical_graph(h)
    return tuple(out[k] for k in sorted(out))


def enumerate_small_graphs(n: int, predicate: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """One representative of every isomorphism class on ``n`` vertices passing ``predicate``."""
    if not 0 <= n <= MAX_BUILTIN_N:
        raise ValueError(f"built-in enumeration supports 0 <= n <= {MAX_BUILTIN_N}; ingest a graph6 corpus instead")
    for g in _all_graphs(n):
        if predicate is None or predicate(g):
            yield g
