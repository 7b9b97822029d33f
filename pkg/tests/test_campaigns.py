from __future__ import annotations

import json

import pytest

from quasicontract import campaigns
from quasicontract import constructors as C
from quasicontract.campaigns import (
    check_c11_4_claims,
    run_campaign,
    verify_critical_characterization,
    verify_critical_families,
    verify_cubic_generation,
    verify_forbidden_pair,
    verify_handle_c4plus,
    verify_min_degree,
    verify_triangle_free,
)
from quasicontract.graph import line_graph
from quasicontract.graph6 import encode
from quasicontract.witness import check_record


def _only(report):
    assert len(report.records) == 1
    return report.records[0]


def _witnesses_check_out(report):
    data = json.loads(report.to_json())
    for rec in data["records"]:
        if rec.get("witness") and rec["status"] != "skipped":
            assert check_record(data["campaign"], rec, data["params"]) == [], rec


def test_forbidden_pair_examples():
    rec = _only(verify_forbidden_pair([C.complete_bipartite(5, 5)]))
    assert rec.status == "passed" and "contractible_edge" in rec.witness
    rec = _only(verify_forbidden_pair([C.complete(6)]))
    assert (rec.status, rec.reason) == ("skipped", "contains K4-")
    rec = _only(verify_forbidden_pair([C.cycle_square(8)]))
    assert (rec.status, rec.reason) == ("skipped", "not quasi 5-connected")


def test_forbidden_pair_counterexample_line_graph_of_petersen():
    report = verify_forbidden_pair([line_graph(C.petersen())])
    rec = _only(report)
    assert rec.status == "failed"
    assert len(rec.witness["edge_cuts"]) == 30
    assert not report.ok
    _witnesses_check_out(report)


def test_critical_characterization_examples():
    report = verify_critical_characterization([C.complete(5), C.cycle_square(6), C.complete(6), C.cycle(6)])
    verdicts = [r.verdicts for r in report.records]
    assert verdicts[0] == {"critical": True, "regular_and_triangular": True}
    assert verdicts[1] == {"critical": True, "regular_and_triangular": True}
    assert verdicts[2] == {"critical": False, "regular_and_triangular": False}
    assert report.records[3].reason == "not 4-connected"
    assert report.ok


def test_critical_families_small():
    report = verify_critical_families(9, corpus=[C.cycle_square(9), C.complete(7), line_graph(C.k33())])
    family = [r for r in report.records if (r.verdicts or {}).get("role") == "family"]
    assert len(family) == 8  # C5^2..C9^2 and the line graphs of the three cubic graphs up to 8 vertices
    assert all(r.status == "passed" for r in family)
    tail = report.records[len(family):]
    assert [r.status for r in tail] == ["passed", "skipped", "passed"]
    assert tail[1].reason == "not contraction critical"


def test_petersen_is_excluded_from_family_check():
    rec = _only(run_campaign("critical-families", [C.petersen()]))
    assert (rec.status, rec.reason) == ("skipped", "not 4-connected")


def test_cubic_generation_with_small_corpus():
    corpus = [C.complete(4), C.k33(), C.prism(), C.petersen(), C.cycle(5)]
    report = verify_cubic_generation(10, corpus)
    head = [r for r in report.records if (r.verdicts or {}).get("role") == "generated"]
    assert len(head) == 8 and all(r.status == "passed" for r in head)
    tail = report.records[len(head):]
    assert [(r.status, r.reason) for r in tail] == [
        ("skipped", "below seed size"),
        ("passed", None),
        ("skipped", "not cyclically 4-connected"),
        ("passed", None),
        ("skipped", "not cubic"),
    ]


def test_min_degree_examples():
    report = verify_min_degree([C.c11_4(), C.complete(6), C.cycle_square(9)])
    assert [r.status for r in report.records] == ["passed", "passed", "skipped"]
    assert report.records[0].verdicts == {"edges_checked": 22, "edges_skipped": 0}
    assert report.records[1].verdicts == {"edges_checked": 15, "edges_skipped": 0}


def test_min_degree_records_skipped_edges():
    from quasicontract.graph6 import decode

    g = decode("H?zTf`}")
    rec = _only(verify_min_degree([g]))
    assert rec.status == "passed"
    assert rec.verdicts["edges_skipped"] > 0
    assert rec.verdicts["edges_checked"] + rec.verdicts["edges_skipped"] == g.num_edges()


def test_triangle_free_examples():
    report = verify_triangle_free([C.k33()], 3)
    assert _only(report).status == "passed"
    assert _only(verify_triangle_free([C.complete_bipartite(5, 5)], 5)).status == "passed"
    rec = _only(verify_triangle_free([C.complete(4)], 3))
    assert (rec.status, rec.reason) == ("skipped", "has triangles")
    _witnesses_check_out(report)
    with pytest.raises(ValueError):
        verify_triangle_free([C.k33()], 1)


def test_c11_4_claims():
    rec = _only(check_c11_4_claims())
    assert rec.status == "passed"
    assert rec.verdicts["quasi_5_connected"] and rec.verdicts["four_regular_on_11"]
    edges = rec.verdicts["edges"]
    assert edges["1-5"] == "quasi_k"
    assert len(edges) == 22
    assert {edges[f"{i}-{i + 1}"] for i in range(10)} <= {"quasi_k", "e0_member", "below"}


def test_handle_campaign_records_counterexample():
    report = verify_handle_c4plus(10)
    assert report.counts()["failed"] == 1
    _witnesses_check_out(report)


def test_report_shape_and_determinism():
    corpus = [C.complete(6), C.cycle_square(8), C.complete_bipartite(5, 5), line_graph(C.petersen())]
    a = verify_forbidden_pair(corpus, jobs=1).to_json()
    b = verify_forbidden_pair(corpus, jobs=3).to_json()
    assert a == b
    data = json.loads(a)
    assert data["counts"] == {"tested": 4, "passed": 1, "failed": 1, "skipped": 2, "qualifying": 2}
    assert [r["index"] for r in data["records"]] == [0, 1, 2, 3]
    assert [r["graph6"] for r in data["records"]] == [encode(g) for g in corpus]
    assert "wall_clock" not in data


def test_aliases():
    assert campaigns.resolve("theorem5") == "forbidden-pair"
    assert campaigns.resolve("lemma4") == "min-degree"
    with pytest.raises(ValueError):
        campaigns.resolve("no-such-campaign")
