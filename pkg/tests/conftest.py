from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from quasicontract.graph import Graph

DATA = Path(__file__).parent / "data"
CUBIC_CORPUS = DATA / "cubic_connected_n4-14.g6"
MINDEG4_SMALL = DATA / "mindeg4_n5-9.g6"
MINDEG4_FULL = DATA / "mindeg4_n5-10.g6.xz"


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def permuted(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
