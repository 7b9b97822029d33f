"""Independent re-validation of campaign witnesses.

Nothing here calls the flow, canonical-form or backtracking code; every
check is a direct subset or permutation enumeration, so a witness accepted
here does not depend on the code that produced it.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph, norm_edge
from .graph6 import decode

BRUTE_LIMIT = 18


def _contract(g: Graph, x: int, y: int) -> Graph:
    # Plain edge-list contraction, written independently of the contraction module.
    x, y = norm_edge(x, y)

    def label(v: int) -> int:
        if v == y:
            v = x
        return v - 1 if v > y else v

    edges = {norm_edge(label(u), label(v)) for u, v in g.edges() if label(u) != label(v)}
    return Graph.from_edges(g.n - 1, edges)


def _pieces(g: Graph, removed: set[int]) -> list[set[int]]:
    left = set(range(g.n)) - removed
    out = []
    while left:
        start = min(left)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u in left and u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(seen)
        left -= seen
    return out


def _two_big_sides(sizes: list[int]) -> bool:
    total = sum(sizes)
    for r in range(1, len(sizes)):
        for pick in combinations(sizes, r):
            if sum(pick) >= 2 and total - sum(pick) >= 2:
                return True
    return False


def brute_quasi_k_connected(g: Graph, k: int) -> bool:
    if g.n > BRUTE_LIMIT:
        raise ValueError(f"brute-force check limited to n <= {BRUTE_LIMIT}")
    if g.n < k:
        return False
    for size in range(k):
        for t in combinations(range(g.n), size):
            parts = _pieces(g, set(t))
            if len(parts) < 2:
                continue
            if size < k - 1 or _two_big_sides([len(p) for p in parts]):
                return False
    return True


def brute_k_connected(g: Graph, k: int) -> bool:
    if g.n > BRUTE_LIMIT:
        raise ValueError(f"brute-force check limited to n <= {BRUTE_LIMIT}")
    if g.n <= k:
        return False
    for size in range(k):
        for t in combinations(range(g.n), size):
            if len(_pieces(g, set(t))) > 1:
                return False
    return True


def brute_contains(host: Graph, pattern: Graph) -> bool:
    """Non-induced containment by trying every injective map."""
    pedges = pattern.edges()
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[a], image[b]) for a, b in pedges):
            return True
    return False


def check_separation(g: Graph, cut, side_a, side_b) -> list[str]:
    cut, a, b = set(cut), set(side_a), set(side_b)
    errs = []
    if not a or not b:
        errs.append("empty side")
    if cut & a or cut & b or a & b or cut | a | b != set(range(g.n)):
        errs.append("cut and sides do not partition the vertex set")
    if any(g.has_edge(u, v) for u in a for v in b):
        errs.append("an edge joins the two sides")
    return errs


def check_mapping(host: Graph, pattern: Graph, mapping) -> list[str]:
    m = list(mapping)
    if len(m) != pattern.n or len(set(m)) != len(m) or any(not 0 <= v < host.n for v in m):
        return ["mapping is not injective into the host"]
    missing = [(a, b) for a, b in pattern.edges() if not host.has_edge(m[a], m[b])]
    return [f"pattern edge {e} not mapped to a host edge" for e in missing]


def check_contraction_cut(g: Graph, edge, cut, side_a, side_b, k: int) -> list[str]:
    """The separation lives in G/e and shows G/e is not quasi k-connected."""
    x, y = edge
    if not g.has_edge(x, y):
        return [f"{edge} is not an edge"]
    h = _contract(g, x, y)
    errs = check_separation(h, cut, side_a, side_b)
    if errs:
        return errs
    if len(cut) < k - 1:
        return []
    if len(cut) == k - 1 and len(side_a) >= 2 and len(side_b) >= 2:
        return []
    return [f"separation of G/{tuple(edge)} is neither small nor nontrivial"]


def check_small_cut(g: Graph, edge, cut, side_a, side_b, k: int) -> list[str]:
    """The separation lives in G/e and has fewer than ``k`` cut vertices."""
    x, y = edge
    if not g.has_edge(x, y):
        return [f"{edge} is not an edge"]
    errs = check_separation(_contract(g, x, y), cut, side_a, side_b)
    if not errs and len(cut) >= k:
        errs.append(f"cut of G/{tuple(edge)} has {len(cut)} >= {k} vertices")
    return errs


def _cycle_ok(g: Graph, cyc) -> bool:
    c = list(cyc)
    return len(c) >= 3 and len(set(c)) == len(c) and all(g.has_edge(c[i], c[i - 1]) for i in range(len(c)))


def check_cyclic_obstruction(g: Graph, cycle_a, cycle_b, separator) -> list[str]:
    """``separator`` has fewer than four vertices and meets every path between the two cycles."""
    errs = []
    if not _cycle_ok(g, cycle_a) or not _cycle_ok(g, cycle_b):
        errs.append("a listed cycle is not a cycle")
    sep = set(separator)
    if set(cycle_a) & set(cycle_b):
        errs.append("cycles are not vertex-disjoint")
    if len(sep) >= 4:
        errs.append("separator has four or more vertices")
    if errs:
        return errs
    # Menger: every path between the cycles must meet the separator.
    rest_a, rest_b = set(cycle_a) - sep, set(cycle_b) - sep
    for piece in _pieces(g, sep):
        if piece & rest_a and piece & rest_b:
            return ["separator does not split the cycles"]
    return []


def _decode(record: dict) -> Graph:
    return decode(record["graph6"])


def check_record(campaign: str, record: dict, params: dict | None = None) -> list[str]:
    """Errors found while re-validating one report record; empty means it checks out."""
    from .constructors import c4_plus, k4_minus, p5_complement

    params = params or {}
    w = record.get("witness") or {}
    status = record["status"]
    g = _decode(record)
    errs: list[str] = []

    if "pattern" in w:
        pattern = {"K4-": k4_minus(), "co-P5": p5_complement(), "C4+": c4_plus()}[w["pattern"]]
        host = decode(w["host"]) if "host" in w else g
        errs += check_mapping(host, pattern, w["mapping"])

    if campaign == "forbidden-pair" and status == "passed":
        e = w["contractible_edge"]
        if not g.has_edge(*e) or not brute_quasi_k_connected(_contract(g, *e), 5):
            errs.append(f"edge {e} is not quasi 5-contractible")
    elif campaign == "forbidden-pair" and status == "failed":
        if not brute_quasi_k_connected(g, 5):
            errs.append("graph is not quasi 5-connected")
        if brute_contains(g, k4_minus()) or brute_contains(g, p5_complement()):
            errs.append("graph contains a forbidden pattern")
        listed = {tuple(c["edge"]) for c in w["edge_cuts"]}
        if listed != set(g.edges()):
            errs.append("edge certificates do not cover every edge")
        for c in w["edge_cuts"]:
            errs += check_contraction_cut(g, c["edge"], c["cut"], c["side_a"], c["side_b"], 5)
    elif campaign in ("triangle-free", "critical-characterization", "critical-families") and "contractible_edge" in w:
        k = params.get("k", 4)
        e = w["contractible_edge"]
        if not g.has_edge(*e) or not brute_k_connected(_contract(g, *e), k):
            errs.append(f"edge {e} is not {k}-contractible")
    if "edge_cuts" in w and campaign != "forbidden-pair":
        k = params.get("k", 4)
        listed = {tuple(c["edge"]) for c in w["edge_cuts"]}
        if listed != set(g.edges()):
            errs.append("edge certificates do not cover every edge")
        for c in w["edge_cuts"]:
            errs += check_small_cut(g, c["edge"], c["cut"], c["side_a"], c["side_b"], k)
    if "small_cut" in w:
        c = w["small_cut"]
        errs += check_small_cut(g, c["edge"], c["cut"], c["side_a"], c["side_b"], 4)
        if _min_degree_after(g, c["edge"]) < 4:
            errs.append("edge does not pass the minimum-degree test")
    if "separation" in w:
        c = w["separation"]
        if c is None:
            if g.n > 4:
                errs.append("missing separation")
        else:
            errs += check_separation(g, c["cut"], c["side_a"], c["side_b"])
            if len(c["cut"]) >= 4:
                errs.append("separation has four or more cut vertices")
    if "cyclic_obstruction" in w:
        c = w["cyclic_obstruction"]
        errs += check_cyclic_obstruction(g, c["cycle_a"], c["cycle_b"], c["separator"])
    if "handle" in w:
        from .generators import HandleSite, add_handle

        h = w["handle"]
        child = add_handle(g, HandleSite(tuple(h["e1"]), tuple(h["e2"])))
        if child.adj != decode(h["child"]).adj:
            errs.append("child is not the stated handle addition")
        elif brute_contains(child, c4_plus()):
            errs.append("child does contain C4+")
    return errs


def _min_degree_after(g: Graph, edge) -> int:
    h = _contract(g, *edge)
    return min(h.degrees()) if h.n else 0
