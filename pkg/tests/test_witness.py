from __future__ import annotations

import copy
import json

from quasicontract import constructors as C
from quasicontract.campaigns import verify_forbidden_pair, verify_handle_c4plus
from quasicontract.connectivity import quasi_obstruction
from quasicontract.contraction import contracted
from quasicontract.graph import line_graph
from quasicontract.graph6 import encode
from quasicontract.witness import (
    brute_k_connected,
    brute_quasi_k_connected,
    check_contraction_cut,
    check_cyclic_obstruction,
    check_mapping,
    check_record,
    check_separation,
)


def test_brute_checks():
    assert brute_quasi_k_connected(C.c11_4(), 5)
    assert not brute_quasi_k_connected(C.cycle_square(8), 5)
    assert brute_k_connected(C.complete(5), 4)
    assert not brute_k_connected(C.complete(5), 5)


def test_separation_checks():
    g = C.cycle_square(8)
    assert check_separation(g, [0, 1, 4, 5], [2, 3], [6, 7]) == []
    assert check_separation(g, [0, 1, 4], [2, 3], [5, 6, 7])
    assert check_mapping(C.complete(4), C.k4_minus(), [0, 1, 2, 3]) == []
    assert check_mapping(C.cycle(4), C.k4_minus(), [0, 1, 2, 3])


def test_contraction_cut_check():
    g = C.cycle_square(10)
    sep = quasi_obstruction(contracted(g, (0, 1)), 5)
    assert check_contraction_cut(g, (0, 1), sep.cut, sep.side_a, sep.side_b, 5) == []
    assert check_contraction_cut(g, (0, 5), sep.cut, sep.side_a, sep.side_b, 5) == ["(0, 5) is not an edge"]
    moved = sorted(sep.side_a)[0]
    assert check_contraction_cut(g, (0, 1), sep.cut | {moved}, sep.side_a - {moved}, sep.side_b, 5)


def test_cyclic_obstruction_check():
    prism = C.prism()
    assert check_cyclic_obstruction(prism, [0, 1, 2], [3, 4, 5], [0, 1, 2]) == []
    assert check_cyclic_obstruction(prism, [0, 1, 2], [3, 4, 5], [0, 1])
    assert check_cyclic_obstruction(prism, [0, 1, 2], [3, 4, 5], [0, 1, 2, 3])


def test_tampered_counterexample_is_rejected():
    report = json.loads(verify_forbidden_pair([line_graph(C.petersen())]).to_json())
    rec = report["records"][0]
    assert check_record("forbidden-pair", rec) == []
    bad = copy.deepcopy(rec)
    bad["witness"]["edge_cuts"] = bad["witness"]["edge_cuts"][1:]
    assert "edge certificates do not cover every edge" in check_record("forbidden-pair", bad)
    bad = copy.deepcopy(rec)
    bad["witness"]["edge_cuts"][0]["side_a"], bad["witness"]["edge_cuts"][0]["cut"] = (
        bad["witness"]["edge_cuts"][0]["cut"], bad["witness"]["edge_cuts"][0]["side_a"])
    assert check_record("forbidden-pair", bad)


def test_tampered_pass_is_rejected():
    report = json.loads(verify_forbidden_pair([C.complete_bipartite(5, 5)]).to_json())
    rec = report["records"][0]
    assert check_record("forbidden-pair", rec) == []
    fake = dict(rec, graph6=encode(C.cycle_square(11)))
    fake["witness"] = {"contractible_edge": [0, 1]}
    assert check_record("forbidden-pair", fake)


def test_handle_witness():
    report = json.loads(verify_handle_c4plus(10).to_json())
    failed = [r for r in report["records"] if r["status"] == "failed"]
    assert len(failed) == 1 and check_record("handle-c4plus", failed[0]) == []
    bad = copy.deepcopy(failed[0])
    bad["witness"]["handle"]["child"] = encode(C.cycle_square(10))
    assert check_record("handle-c4plus", bad)
