from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import assume, given, settings

from quasicontract import constructors as C
from quasicontract.connectivity import (
    is_k_connected,
    is_quasi_k_connected,
    nontrivial_cuts,
    vertex_connectivity,
)
from quasicontract.contraction import (
    Verdict,
    classify_contraction,
    contract_edge,
    contract_subgraph,
    contracted,
    contracted_min_degree,
    is_contraction_critical,
    is_k_contractible,
    min_degree_pretest,
    quasi_atom,
    quasi_contractible_edges,
    quasi_fragments,
)
from quasicontract.graph import Graph, line_graph, min_degree
from quasicontract.graph6 import decode
from quasicontract.patterns import is_isomorphic

from conftest import graphs, random_graph

# Smallest quasi 5-connected graphs with an E0 edge turn up at n = 9 in the
# minimum-degree-4 corpus; this one was found by scanning it.
E0_WITNESS = "H?zTf`}"


def _nx_contract(g: Graph, x: int, y: int) -> Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    h = nx.contracted_nodes(h, x, y, self_loops=False)
    order = sorted(h.nodes)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(len(order), [(pos[a], pos[b]) for a, b in h.edges()])


def _fragment_oracle(g: Graph, e, k: int) -> set[tuple[frozenset, frozenset]]:
    x, y = e
    out = set()
    for size in range(2, g.n):
        for f in combinations(range(g.n), size):
            fs = set(f)
            nf = {u for v in fs for u in g.neighbors(v)} - fs
            if len(nf) == k and {x, y} <= nf and g.n - size - k >= 2:
                out.add((frozenset(fs), frozenset(nf)))
    return out


def test_contract_edge_examples():
    assert contracted(C.complete(3), (0, 1)) == C.complete(2)
    assert all(contracted(C.cycle(5), e) == C.cycle(4) for e in [(0, 1), (3, 4)])
    assert is_isomorphic(contracted(C.cycle(5), (0, 4)), C.cycle(4))
    # k4_minus lacks {0, 1}; its common edge {2, 3} lies on both triangles.
    # Merging 2 and 3 leaves 0 and 1 nonadjacent, so the result is a path.
    assert contracted(C.k4_minus(), (2, 3)) == _nx_contract(C.k4_minus(), 2, 3) == Graph.from_edges(3, [(0, 2), (1, 2)])
    assert contracted(C.k4_minus(), (0, 2)) == C.complete(3)
    with pytest.raises(ValueError):
        contract_edge(C.cycle(5), (0, 2))


def test_contraction_relabeling():
    g = C.path(5)
    res = contract_edge(g, (3, 1)) if g.has_edge(1, 3) else contract_edge(g, (2, 1))
    assert res.merged_vertex == 1 and res.origin == (1, 2)
    # 0-1-2-3-4 contracted at 1-2: merged slot 1, old 3 -> 2, old 4 -> 3
    assert res.graph.edges() == [(0, 1), (1, 2), (2, 3)]


def test_contract_subgraph_examples():
    assert contract_subgraph(C.cycle(6), {0, 1, 2}) == C.cycle(4)
    g = C.petersen()
    assert contract_subgraph(g, {3}) == g
    assert contract_subgraph(C.complete(4), {0, 1, 2}) == C.complete(2)
    # two components of G[s]: each collapses on its own
    h = contract_subgraph(C.cycle(6), {0, 1, 3, 4})
    assert h == C.cycle(4)
    with pytest.raises(ValueError):
        contract_subgraph(C.cycle(4), set())


def test_classify_examples():
    g = C.c11_4()
    assert classify_contraction(g, (0, 4), 5) is Verdict.QUASI_K
    assert all(classify_contraction(C.complete(6), e, 5) is Verdict.QUASI_K for e in C.complete(6).edges())
    assert quasi_fragments(g, (0, 4), 5) == []


def test_k_contractible_examples():
    assert all(is_k_contractible(C.k33(), e, 3) for e in C.k33().edges())
    assert not any(is_k_contractible(C.complete(5), e, 4) for e in C.complete(5).edges())
    c6 = C.cycle_square(6)
    assert is_k_connected(c6, 4)
    assert [is_k_contractible(c6, e, 4) for e in c6.edges()] == [vertex_connectivity(contracted(c6, e)) >= 4 for e in c6.edges()]
    with pytest.raises(ValueError):
        is_k_contractible(C.cycle(5), (0, 1), 3)


def test_quasi_contractible_edge_examples():
    g = C.c11_4()
    edges = set(quasi_contractible_edges(g, 5))
    assert {tuple(sorted((i, (i + 4) % 11))) for i in range(11)} <= edges
    assert quasi_contractible_edges(C.complete(6), 5) == C.complete(6).edges()
    with pytest.raises(ValueError):
        quasi_contractible_edges(C.cycle_square(8), 5)


def test_pretest_examples():
    assert all(min_degree_pretest(C.complete(6), e) for e in C.complete(6).edges())
    g = C.c11_4()
    assert contracted_min_degree(g, (0, 1)) == 4 and min_degree_pretest(g, (0, 1))


def test_criticality_examples():
    assert is_contraction_critical(C.complete(5), 4)
    assert is_contraction_critical(C.cycle_square(7), 4)
    assert not is_contraction_critical(C.c11_4(), 5, quasi=True)
    with pytest.raises(ValueError):
        is_contraction_critical(C.cycle(6), 4)


def test_line_graph_of_petersen_is_critical_for_quasi_contraction():
    g = line_graph(C.petersen())
    assert is_quasi_k_connected(g, 5)
    assert quasi_contractible_edges(g, 5) == []
    assert is_contraction_critical(g, 5, quasi=True)


# --- E0 witness graph and fragments ---------------------------------------


def test_e0_witness_graph():
    g = decode(E0_WITNESS)
    assert is_quasi_k_connected(g, 5)
    e0 = [e for e in g.edges() if classify_contraction(g, e, 5) is Verdict.E0_MEMBER]
    assert e0 == [(0, 4), (0, 5), (0, 6), (0, 7), (1, 7), (2, 7), (3, 7)]
    frags = quasi_fragments(g, (0, 4), 5)
    assert [q.as_dict() for q in frags] == [
        {"fragment": [1, 5], "cut": [0, 3, 4, 7, 8], "edge": [0, 4]},
        {"fragment": [2, 6], "cut": [0, 3, 4, 7, 8], "edge": [0, 4]},
    ]


def test_fragments_match_exhaustive_oracle():
    g = decode(E0_WITNESS)
    for e in g.edges():
        got = {(q.fragment, q.cut) for q in quasi_fragments(g, e, 5)}
        assert got == _fragment_oracle(g, e, 5)
        verdict = classify_contraction(g, e, 5)
        if verdict is Verdict.QUASI_K:
            assert not got
        if verdict is Verdict.E0_MEMBER:
            assert got


def test_fragments_agree_with_contraction_definition():
    # The nontrivial 4-cuts of G/xy all contain the merged vertex, and lifting
    # them back gives exactly the cut-side fragments.
    g = decode(E0_WITNESS)
    for e in g.edges():
        if classify_contraction(g, e, 5) is not Verdict.E0_MEMBER:
            continue
        x, y = e
        h = contracted(g, e)

        def lift(vs):
            out = set()
            for u in vs:
                if u == x:
                    out |= {x, y}
                else:
                    out.add(u if u < y else u + 1)
            return frozenset(out)

        lifted = set()
        for cut in nontrivial_cuts(h, 4):
            assert x in cut.vertices
            t = lift(cut.vertices)
            for comp_pick in range(1, (1 << len(cut.components)) - 1):
                side = frozenset().union(*(c for i, c in enumerate(cut.components) if comp_pick >> i & 1))
                if len(side) >= 2 and h.n - 4 - len(side) >= 2:
                    f = lift(side)
                    nf = {u for v in f for u in g.neighbors(v)} - f
                    if nf == t:
                        lifted.add((f, t))
        assert lifted == {(q.fragment, q.cut) for q in quasi_fragments(g, e, 5)}


def test_quasi_atom():
    g = decode(E0_WITNESS)
    e0 = [e for e in g.edges() if classify_contraction(g, e, 5) is Verdict.E0_MEMBER]
    atom = quasi_atom(g, e0, 5)
    sizes = [len(f) for e in e0 for f, _ in _fragment_oracle(g, e, 5)]
    assert len(atom.fragment) == min(sizes)
    smallest = min(sorted(f) for e in e0 for f, _ in _fragment_oracle(g, e, 5) if len(f) == min(sizes))
    assert sorted(atom.fragment) == smallest
    assert quasi_atom(C.c11_4(), [(0, 4), (1, 5)], 5) is None


# --- properties -----------------------------------------------------------


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=200, deadline=None)
def test_contraction_invariants(g):
    assume(g.num_edges() > 0)
    kappa = vertex_connectivity(g)
    for x, y in g.edges():
        res = contract_edge(g, (x, y))
        h = res.graph
        assert h.n == g.n - 1
        assert h == _nx_contract(g, x, y)
        relab = lambda v: v if v < y else v - 1  # noqa: E731
        expected = {relab(v) for v in (g.neighbors(x) | g.neighbors(y)) - {x, y}}
        assert h.neighbors(res.merged_vertex) == expected
        assert vertex_connectivity(h) >= kappa - 1
        assert min_degree(h) == contracted_min_degree(g, (x, y)) if h.n else True


def test_classification_consistent_on_random_quasi_graphs():
    rng = random.Random(11)
    seen = set()
    tried = 0
    while tried < 60:
        g = random_graph(rng, rng.randint(6, 10), rng.uniform(0.5, 0.9))
        if not is_quasi_k_connected(g, 5):
            continue
        tried += 1
        for e in g.edges():
            verdict = classify_contraction(g, e, 5)
            assert verdict is classify_contraction(g, e, 5, pretest=True)
            h = contracted(g, e)
            seen.add(verdict)
            if verdict is Verdict.QUASI_K:
                assert is_quasi_k_connected(h, 5)
            elif verdict is Verdict.E0_MEMBER:
                assert vertex_connectivity(h) >= 4 and not is_quasi_k_connected(h, 5)
                assert quasi_fragments(g, e, 5)
            else:
                assert h.n < 5 or vertex_connectivity(h) < 4
            if min_degree_pretest(g, e):
                assert vertex_connectivity(h) >= 4
    assert Verdict.QUASI_K in seen
