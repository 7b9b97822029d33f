"""Named graph families.

Circulants and squared cycles use the vertex order around the cycle, so
``cycle_square(n)`` has ``i ~ j`` iff ``(i - j) mod n`` is in ``{1, 2, n-1, n-2}``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from itertools import combinations

from .graph import Graph, complement, join, copies


def empty(n: int) -> Graph:
    return Graph.empty(n)


def complete(n: int) -> Graph:
    _need(n >= 0, "complete graph needs n >= 0")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge ``{0, 1}`` removed."""
    _need(n >= 2, "complete_minus_edge needs n >= 2")
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return circulant(n, [1])


def circulant(n: int, connection_set: Iterable[int]) -> Graph:
    jumps = {s % n for s in connection_set}
    _need(n >= 1 and 0 not in jumps, "circulant needs n >= 1 and nonzero jumps")
    edges = set()
    for i in range(n):
        for s in jumps:
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def cycle_square(n: int) -> Graph:
    """The cycle C_n with all pairs at cycle-distance two joined."""
    _need(n >= 5, "cycle_square needs n >= 5")
    return circulant(n, [1, 2])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def k33() -> Graph:
    return complete_bipartite(3, 3)


def cube() -> Graph:
    """The 3-cube Q_3; vertices are 3-bit words, adjacent when they differ in one bit."""
    return Graph.from_edges(8, [(v, v ^ (1 << i)) for v in range(8) for i in range(3) if v < v ^ (1 << i)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism() -> Graph:
    """The triangular prism C_3 x K_2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k4_minus() -> Graph:
    return complete_minus_edge(4)


def p5_complement() -> Graph:
    """Complement of the path 0-1-2-3-4: edges 02, 03, 04, 13, 14, 24."""
    return complement(path(5))


def c4_plus() -> Graph:
    """The 4-cycle 0-1-2-3 with a pendant vertex 4 attached to vertex 0.

    Its line graph is the complement of P_5; the test suite re-derives this
    shape by exhaustive search rather than trusting it.
    """
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])


def c11_4() -> Graph:
    """The 4-regular circulant on 11 vertices with jumps 1 and 4."""
    return circulant(11, [1, 4])


def octahedron() -> Graph:
    return join(empty(2), join(empty(2), empty(2)))


def k_plus_independent(a: int, b: int) -> Graph:
    """K_a + bK_1 (join of a clique with an independent set)."""
    return join(complete(a), copies(b, complete(1)))


FAMILIES: dict[str, Callable[..., Graph]] = {
    "empty": empty,
    "complete": complete,
    "complete_minus_edge": complete_minus_edge,
    "path": path,
    "cycle": cycle,
    "cycle_square": cycle_square,
    "circulant": circulant,
    "complete_bipartite": complete_bipartite,
    "k33": k33,
    "cube": cube,
    "petersen": petersen,
    "prism": prism,
    "c4_plus": c4_plus,
    "p5_complement": p5_complement,
    "k4_minus": k4_minus,
    "c11_4": c11_4,
    "octahedron": octahedron,
}


def construct(name: str, *params) -> Graph:
    try:
        factory = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}") from None
    try:
        return factory(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)
