"""Corpus-level verification campaigns.

Each campaign maps a graph (given as graph6) to a record: ``passed``,
``failed`` (always with a witness that :mod:`quasicontract.witness` can
re-check) or ``skipped`` with a reason.  Records keep corpus order no
matter how many worker processes are used.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import IO

from . import constructors
from .connectivity import (
    cyclic_edge_connectivity,
    cyclic_obstruction,
    is_k_connected,
    is_quasi_k_connected,
    minimum_separator,
    quasi_obstruction,
)
from .contraction import (
    Verdict,
    classify_contraction,
    contracted,
    contracted_min_degree,
    is_contraction_critical,
)
from .generators import enumerate_small_graphs, generate_ccc4, handle_sites, add_handle
from .graph import Graph, every_edge_in_triangle, is_regular, line_graph, triangle_free
from .graph6 import decode, encode
from .patterns import canonical_form, contains_subgraph, forbidden_pair_witness

PASSED, FAILED, SKIPPED = "passed", "failed", "skipped"


@dataclass
class Record:
    index: int
    graph6: str
    status: str
    reason: str | None = None
    verdicts: dict | None = None
    witness: dict | None = None

    def as_dict(self) -> dict:
        out = {"index": self.index, "graph6": self.graph6, "status": self.status}
        for key in ("reason", "verdicts", "witness"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass
class CampaignReport:
    campaign: str
    params: dict
    records: list[Record] = field(default_factory=list)
    wall_clock: float = 0.0  # kept out of the JSON so reports stay byte-identical

    def counts(self) -> dict:
        c = Counter(r.status for r in self.records)
        return {
            "tested": len(self.records),
            "passed": c[PASSED],
            "failed": c[FAILED],
            "skipped": c[SKIPPED],
            "qualifying": c[PASSED] + c[FAILED],
        }

    def skip_reasons(self) -> dict:
        return dict(sorted(Counter(r.reason for r in self.records if r.status == SKIPPED).items()))

    @property
    def ok(self) -> bool:
        return not any(r.status == FAILED for r in self.records)

    def failed(self) -> list[Record]:
        return [r for r in self.records if r.status == FAILED]

    def write_json(self, fh: IO[str]) -> None:
        # One record per line keeps large reports diffable.
        head = {"campaign": self.campaign, "params": self.params, "counts": self.counts(),
                "skip_reasons": self.skip_reasons()}
        fh.write("{\n")
        for key, value in head.items():
            fh.write(f"{json.dumps(key)}: {json.dumps(value, sort_keys=True)},\n")
        fh.write('"records": [\n')
        last = len(self.records) - 1
        for i, r in enumerate(self.records):
            fh.write(json.dumps(r.as_dict(), sort_keys=True))
            fh.write(",\n" if i < last else "\n")
        fh.write("]\n}\n")

    def to_json(self) -> str:
        import io

        buf = io.StringIO()
        self.write_json(buf)
        return buf.getvalue()


def load_report(text: str) -> dict:
    return json.loads(text)


# --- per-graph checks -----------------------------------------------------
# Each returns (status, reason, verdicts, witness).

Outcome = tuple[str, "str | None", "dict | None", "dict | None"]


def _edge_cuts(g: Graph, k: int, quasi: bool) -> list[dict]:
    out = []
    for e in g.edges():
        h = contracted(g, e)
        sep = quasi_obstruction(h, k) if quasi else minimum_separator(h)
        out.append({"edge": list(e), **sep.as_dict()})
    return out


def check_forbidden_pair(g: Graph) -> Outcome:
    if not is_quasi_k_connected(g, 5):
        return SKIPPED, "not quasi 5-connected", None, None
    hit = forbidden_pair_witness(g)
    if hit is not None:
        name, match = hit
        return SKIPPED, f"contains {name}", None, {"pattern": name, "mapping": list(match.mapping)}
    for e in g.edges():
        if classify_contraction(g, e, 5, pretest=True) is Verdict.QUASI_K:
            return PASSED, None, None, {"contractible_edge": list(e)}
    return FAILED, "no quasi 5-contractible edge", None, {"edge_cuts": _edge_cuts(g, 5, quasi=True)}


def check_critical_characterization(g: Graph) -> Outcome:
    if not is_k_connected(g, 4):
        return SKIPPED, "not 4-connected", None, None
    contractible = next((e for e in g.edges() if is_k_connected(contracted(g, e), 4)), None)
    critical = contractible is None
    shape = is_regular(g, 4) and every_edge_in_triangle(g)
    verdicts = {"critical": critical, "regular_and_triangular": shape}
    if critical == shape:
        return PASSED, None, verdicts, None
    if critical:
        return FAILED, "critical without the degree/triangle shape", verdicts, {"edge_cuts": _edge_cuts(g, 4, quasi=False)}
    return FAILED, "degree/triangle shape but not critical", verdicts, {"contractible_edge": list(contractible)}


@lru_cache(maxsize=None)
def _family_forms(max_n: int) -> frozenset[bytes]:
    """Canonical forms of C_n^2 and line graphs of generated cubic graphs, up to ``max_n`` vertices."""
    forms = {canonical_form(constructors.cycle_square(n)) for n in range(5, max_n + 1)}
    cubic_max = (2 * max_n) // 3
    cubic_max -= cubic_max % 2
    if cubic_max >= 6:
        forms |= {canonical_form(line_graph(h)) for h in generate_ccc4(cubic_max)}
    return frozenset(forms)


def check_family_member(g: Graph) -> Outcome:
    if not is_k_connected(g, 4):
        sep = minimum_separator(g)
        return FAILED, "family member is not 4-connected", None, {"separation": sep.as_dict() if sep else None}
    contractible = next((e for e in g.edges() if is_k_connected(contracted(g, e), 4)), None)
    if contractible is not None:
        return FAILED, "family member has a 4-contractible edge", None, {"contractible_edge": list(contractible)}
    return PASSED, None, {"critical": True}, None


def check_critical_in_families(g: Graph) -> Outcome:
    if not is_k_connected(g, 4):
        return SKIPPED, "not 4-connected", None, None
    if not is_contraction_critical(g, 4):
        return SKIPPED, "not contraction critical", None, None
    if canonical_form(g) in _family_forms(g.n):
        return PASSED, None, {"critical": True, "in_families": True}, None
    return FAILED, "critical graph outside both families", {"critical": True, "in_families": False}, {
        "edge_cuts": _edge_cuts(g, 4, quasi=False)
    }


def check_generated_cubic(g: Graph) -> Outcome:
    obstruction = cyclic_obstruction(g)
    edge_ok = cyclic_edge_connectivity(g) is None
    verdicts = {"cyclically_4_connected": obstruction is None, "cyclic_edge_connectivity_ge_4": edge_ok}
    if obstruction is not None:
        return FAILED, "generated graph is not cyclically 4-connected", verdicts, {"cyclic_obstruction": obstruction.as_dict()}
    if not edge_ok:
        return FAILED, "cyclic edge connectivity below 4", verdicts, None
    return PASSED, None, verdicts, None


@lru_cache(maxsize=None)
def _generated_forms(max_n: int) -> frozenset[bytes]:
    return frozenset(canonical_form(h) for h in generate_ccc4(max_n))


def check_cubic_in_generation(g: Graph) -> Outcome:
    if any(d != 3 for d in g.degrees()):
        return SKIPPED, "not cubic", None, None
    obstruction = cyclic_obstruction(g)
    if obstruction is not None:
        return SKIPPED, "not cyclically 4-connected", None, {"cyclic_obstruction": obstruction.as_dict()}
    if g.n < 6:
        return SKIPPED, "below seed size", None, None
    top = g.n + (g.n % 2)
    if canonical_form(g) in _generated_forms(top):
        return PASSED, None, {"generated": True}, None
    return FAILED, "cyclically 4-connected cubic graph missing from generation", {"generated": False}, {
        "canonical_form": canonical_form(g).decode("ascii")
    }


def check_min_degree(g: Graph) -> Outcome:
    if not is_quasi_k_connected(g, 5):
        return SKIPPED, "not quasi 5-connected", None, None
    checked = skipped = 0
    for e in g.edges():
        if contracted_min_degree(g, e) < 4:
            skipped += 1
            continue
        checked += 1
        h = contracted(g, e)
        if not is_k_connected(h, 4):
            sep = minimum_separator(h)
            verdicts = {"edges_checked": checked, "edges_skipped": skipped}
            return FAILED, "minimum degree 4 but not 4-connected", verdicts, {
                "small_cut": {"edge": list(e), **sep.as_dict()}
            }
    return PASSED, None, {"edges_checked": checked, "edges_skipped": skipped}, None


def check_triangle_free(g: Graph, k: int) -> Outcome:
    if not triangle_free(g):
        return SKIPPED, "has triangles", None, None
    if not is_k_connected(g, k):
        return SKIPPED, f"not {k}-connected", None, None
    for e in g.edges():
        if is_k_connected(contracted(g, e), k):
            return PASSED, None, None, {"contractible_edge": list(e)}
    return FAILED, f"no {k}-contractible edge", None, {"edge_cuts": _edge_cuts(g, k, quasi=False)}


def check_c11_4(g: Graph) -> Outcome:
    n = g.n
    regular = n == 11 and is_regular(g, 4)
    quasi = is_quasi_k_connected(g, 5)
    verdicts: dict = {"four_regular_on_11": regular, "quasi_5_connected": quasi, "edges": {}}
    if not quasi:
        return FAILED, "not quasi 5-connected", verdicts, {"obstruction": quasi_obstruction(g, 5).as_dict()}
    bad = []
    for u, v in g.edges():
        verdict = classify_contraction(g, (u, v), 5)
        verdicts["edges"][f"{u}-{v}"] = verdict.value
        if (v - u) % n in (4, n - 4) and verdict is not Verdict.QUASI_K:
            bad.append([u, v])
    if not regular or bad:
        witness = {"edge_cuts": [{"edge": e, **quasi_obstruction(contracted(g, tuple(e)), 5).as_dict()} for e in bad]}
        return FAILED, "jump-4 edge is not quasi 5-contractible" if bad else "not 4-regular on 11 vertices", verdicts, witness
    return PASSED, None, verdicts, None


def check_handle_c4plus(g: Graph) -> Outcome:
    pattern = constructors.c4_plus()
    own = contains_subgraph(g, pattern)
    if own is None:
        return SKIPPED, "parent lacks C4+", None, None
    children = 0
    for site in handle_sites(g):
        child = add_handle(g, site)
        children += 1
        if contains_subgraph(child, pattern) is None:
            return FAILED, "handle addition lost C4+", {"children_checked": children}, {
                "pattern": "C4+",
                "mapping": list(own.mapping),
                "handle": {"e1": list(site.e1), "e2": list(site.e2), "child": encode(child)},
            }
    return PASSED, None, {"children_checked": children}, None


# --- registry and runner --------------------------------------------------


@dataclass(frozen=True)
class Campaign:
    name: str
    check: Callable[..., Outcome]
    needs_k: bool = False


CAMPAIGNS: dict[str, Campaign] = {
    c.name: c
    for c in (
        Campaign("forbidden-pair", check_forbidden_pair),
        Campaign("critical-characterization", check_critical_characterization),
        Campaign("critical-families", check_critical_in_families),
        Campaign("cubic-generation", check_cubic_in_generation),
        Campaign("min-degree", check_min_degree),
        Campaign("triangle-free", check_triangle_free, needs_k=True),
        Campaign("c11-4", check_c11_4),
        Campaign("handle-c4plus", check_handle_c4plus),
    )
}

ALIASES = {
    "theorem5": "forbidden-pair",
    "lemma1": "critical-characterization",
    "lemma2": "critical-families",
    "lemma3": "cubic-generation",
    "lemma4": "min-degree",
    "theorem1": "triangle-free",
    "c11_4": "c11-4",
}


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {name!r}")
    return name


def _run_one(name: str, k: int | None, item: tuple[int, str]) -> Record:
    index, line = item
    g = decode(line)
    campaign = CAMPAIGNS[name]
    outcome = campaign.check(g, k) if campaign.needs_k else campaign.check(g)
    status, reason, verdicts, witness = outcome
    return Record(index, line, status, reason, verdicts, witness)


def _run_family(item: tuple[int, str]) -> Record:
    index, line = item
    return Record(index, line, *check_family_member(decode(line)))


def _run_generated(item: tuple[int, str]) -> Record:
    index, line = item
    return Record(index, line, *check_generated_cubic(decode(line)))


def _map(func, items: Iterable, jobs: int) -> Iterator[Record]:
    if jobs <= 1:
        yield from map(func, items)
        return
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        yield from pool.imap(func, items, chunksize=64)


def _lines(graphs: Iterable[Graph | str]) -> Iterator[str]:
    for g in graphs:
        yield g if isinstance(g, str) else encode(g)


def run_campaign(name: str, corpus: Iterable[Graph | str], k: int | None = None, jobs: int = 1) -> CampaignReport:
    """Check every corpus graph; records come back in corpus order."""
    name = resolve(name)
    if CAMPAIGNS[name].needs_k and k is None:
        raise ValueError(f"campaign {name} needs k")
    params = {"k": k} if CAMPAIGNS[name].needs_k else {}
    report = CampaignReport(name, params)
    start = time.perf_counter()
    report.records = list(_map(partial(_run_one, name, k), enumerate(_lines(corpus)), jobs))
    report.wall_clock = time.perf_counter() - start
    return report


def verify_forbidden_pair(corpus, jobs: int = 1) -> CampaignReport:
    return run_campaign("forbidden-pair", corpus, jobs=jobs)


def verify_critical_characterization(corpus, jobs: int = 1) -> CampaignReport:
    return run_campaign("critical-characterization", corpus, jobs=jobs)


def verify_min_degree(corpus, jobs: int = 1) -> CampaignReport:
    return run_campaign("min-degree", corpus, jobs=jobs)


def verify_triangle_free(corpus, k: int, jobs: int = 1) -> CampaignReport:
    if k < 2:
        raise ValueError("k must be at least 2")
    return run_campaign("triangle-free", corpus, k=k, jobs=jobs)


def check_c11_4_claims() -> CampaignReport:
    return run_campaign("c11-4", [constructors.c11_4()])


def verify_critical_families(max_n: int, corpus=None, jobs: int = 1) -> CampaignReport:
    """Both families are critical up to ``max_n``; every critical corpus graph is a family member.

    Without a corpus, all graphs on 5..min(max_n, 8) vertices are enumerated.
    Records: the C_n^2, then the line graphs, then the corpus.
    """
    if max_n > 14:
        raise ValueError("max_n must be at most 14")
    start = time.perf_counter()
    members = [constructors.cycle_square(n) for n in range(5, max_n + 1)]
    if max_n >= 6:
        members += [line_graph(h) for h in generate_ccc4(max_n - max_n % 2)]
    if corpus is None:
        corpus = (g for n in range(5, min(max_n, 8) + 1) for g in enumerate_small_graphs(n))
    report = CampaignReport("critical-families", {"max_n": max_n})
    head = list(_map(_run_family, enumerate(_lines(members)), jobs))
    for r in head:
        r.verdicts = {**(r.verdicts or {}), "role": "family"}
    tail = list(_map(partial(_run_one, "critical-families", None),
                     ((i + len(head), s) for i, s in enumerate(_lines(corpus))), jobs))
    report.records = head + tail
    report.wall_clock = time.perf_counter() - start
    return report


def verify_cubic_generation(max_n: int, corpus=None, jobs: int = 1) -> CampaignReport:
    """Every generated graph is cyclically 4-connected; every such corpus graph was generated."""
    start = time.perf_counter()
    generated = generate_ccc4(max_n)
    report = CampaignReport("cubic-generation", {"max_n": max_n})
    head = list(_map(_run_generated, enumerate(_lines(generated)), jobs))
    for r in head:
        r.verdicts["role"] = "generated"
    tail = []
    if corpus is not None:
        tail = list(_map(partial(_run_one, "cubic-generation", None),
                         ((i + len(head), s) for i, s in enumerate(_lines(corpus))), jobs))
    report.records = head + tail
    report.wall_clock = time.perf_counter() - start
    return report


def verify_handle_c4plus(max_n: int, jobs: int = 1) -> CampaignReport:
    """Every handle addition of a generated graph with C4+ (up to ``max_n`` vertices) keeps C4+."""
    start = time.perf_counter()
    parents = [g for g in generate_ccc4(max_n) if g.n + 2 <= max_n]
    report = run_campaign("handle-c4plus", parents, jobs=jobs)
    report.params = {"max_n": max_n}
    report.wall_clock = time.perf_counter() - start
    return report
