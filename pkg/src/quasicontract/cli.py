"""Command line interface: analyze, contractible, generate, verify, check-witness.

Exit codes: 0 when everything checked out, 1 when a campaign produced a failed
record (or a witness did not re-validate), 2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator
from pathlib import Path

from . import campaigns, constructors
from .connectivity import is_k_connected, is_quasi_k_connected, nontrivial_cuts, vertex_connectivity
from .contraction import k_contractible_edges, quasi_contractible_edges
from .generators import MAX_BUILTIN_N, enumerate_small_graphs, generate_ccc4
from .graph import Graph, line_graph
from .graph6 import Graph6Error, decode, encode, iter_graph6_lines, write_graph6
from .witness import check_record

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_inputs(paths: list[str]) -> Iterator[Graph]:
    for p in paths:
        lines = (line.strip() for line in sys.stdin) if p == "-" else iter_graph6_lines(p)
        for line in lines:
            if line:
                yield decode(line)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def analyze_graph(g: Graph, k: int) -> dict:
    kappa = vertex_connectivity(g)
    quasi = is_quasi_k_connected(g, k)
    return {
        "graph6": encode(g),
        "n": g.n,
        "m": g.num_edges(),
        "kappa": kappa,
        "quasi_k_connected": quasi,
        "nontrivial_cuts": [sorted(c.vertices) for c in nontrivial_cuts(g, k - 1)] if g.n > k else [],
        "contractible_edges": [list(e) for e in k_contractible_edges(g, k)] if kappa >= k and g.n > k else None,
        "quasi_contractible_edges": [list(e) for e in quasi_contractible_edges(g, k)] if quasi else None,
    }


def cmd_analyze(args) -> int:
    out = [analyze_graph(g, args.k) for g in _read_inputs(_inputs(args))]
    _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_contractible(args) -> int:
    out = []
    for g in _read_inputs(_inputs(args)):
        entry: dict = {"graph6": encode(g)}
        if args.quasi:
            ok = is_quasi_k_connected(g, args.k)
            entry["edges"] = [list(e) for e in quasi_contractible_edges(g, args.k)] if ok else None
        else:
            ok = is_k_connected(g, args.k)
            entry["edges"] = [list(e) for e in k_contractible_edges(g, args.k)] if ok else None
        if not ok:
            entry["reason"] = f"not {'quasi ' if args.quasi else ''}{args.k}-connected"
        out.append(entry)
    _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


GENERATORS = ("ccc4", "line-ccc4", "cycle-squares", "small")


def cmd_generate(args) -> int:
    max_n = args.max_n
    if args.kind in ("ccc4", "line-ccc4"):
        if max_n < 6 or max_n % 2:
            raise UsageError("--max-n must be even and at least 6")
        graphs = generate_ccc4(max_n)
        if args.kind == "line-ccc4":
            graphs = [line_graph(g) for g in graphs]
    elif args.kind == "cycle-squares":
        graphs = [constructors.cycle_square(n) for n in range(5, max_n + 1)]
    else:
        if max_n > MAX_BUILTIN_N:
            raise UsageError(f"--max-n is at most {MAX_BUILTIN_N} for built-in enumeration")
        graphs = [g for n in range(1, max_n + 1) for g in enumerate_small_graphs(n)]
    if args.out:
        count = write_graph6(args.out, graphs)
        print(f"wrote {count} graphs to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write("".join(encode(g) + "\n" for g in graphs))
    return EXIT_OK


def _corpus(args) -> Iterator[str] | None:
    if args.corpus is None:
        return None
    return iter_graph6_lines(args.corpus)


def _builtin_corpus(max_n: int) -> Iterator[Graph]:
    if max_n > MAX_BUILTIN_N:
        raise UsageError(f"without --corpus, --max-n is at most {MAX_BUILTIN_N}")
    for n in range(1, max_n + 1):
        yield from enumerate_small_graphs(n)


def cmd_verify(args) -> int:
    try:
        name = campaigns.resolve(args.campaign)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jobs = args.jobs
    corpus = _corpus(args)
    if name == "critical-families":
        report = campaigns.verify_critical_families(args.max_n or 12, corpus, jobs=jobs)
    elif name == "cubic-generation":
        report = campaigns.verify_cubic_generation(args.max_n or 14, corpus, jobs=jobs)
    elif name == "handle-c4plus":
        report = campaigns.verify_handle_c4plus(args.max_n or 12, jobs=jobs)
    elif name == "c11-4":
        report = campaigns.check_c11_4_claims()
    else:
        if corpus is None:
            corpus = _builtin_corpus(args.max_n or 7)
        k = None
        if campaigns.CAMPAIGNS[name].needs_k:
            if args.k is None:
                raise UsageError(f"campaign {name} needs --k")
            if args.k < 2:
                raise UsageError("--k must be at least 2")
            k = args.k
        report = campaigns.run_campaign(name, corpus, k=k, jobs=jobs)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            report.write_json(fh)
    else:
        report.write_json(sys.stdout)
    counts = report.counts()
    print(
        f"{report.campaign}: tested={counts['tested']} passed={counts['passed']} failed={counts['failed']} "
        f"skipped={counts['skipped']} qualifying={counts['qualifying']} wall_clock={report.wall_clock:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_check_witness(args) -> int:
    try:
        data = json.loads(Path(args.report).read_text(encoding="utf-8"))
        name = data["campaign"]
        records = data["records"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"not a campaign report: {exc}") from None
    params = data.get("params", {})
    checked = bad = 0
    for rec in records:
        if not rec.get("witness"):
            continue
        if rec["status"] == campaigns.SKIPPED and not args.all:
            continue
        checked += 1
        errs = check_record(name, rec, params)
        if errs:
            bad += 1
            print(f"record {rec['index']} ({rec['graph6']}): " + "; ".join(errs))
    print(f"{name}: {checked} witnesses checked, {bad} invalid", file=sys.stderr)
    return EXIT_FAILED if bad else EXIT_OK


def _inputs(args) -> list[str]:
    paths = list(args.graphs)
    if args.corpus:
        paths.append(args.corpus)
    if not paths:
        raise UsageError("no input graphs given")
    return paths


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasicontract", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="connectivity and contractibility summary per graph")
    p.add_argument("graphs", nargs="*", help="graph6 files ('-' for stdin)")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--corpus")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("contractible", help="list (quasi) k-contractible edges")
    p.add_argument("graphs", nargs="*")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--quasi", action="store_true")
    p.add_argument("--corpus")
    p.add_argument("--out")
    p.set_defaults(func=cmd_contractible)

    p = sub.add_parser("generate", help="write a generated corpus as graph6")
    p.add_argument("kind", choices=GENERATORS)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", help=", ".join(list(campaigns.CAMPAIGNS) + list(campaigns.ALIASES)))
    p.add_argument("--corpus")
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-witness", help="re-validate the witnesses in a report")
    p.add_argument("report")
    p.add_argument("--all", action="store_true", help="also check witnesses on skipped records")
    p.set_defaults(func=cmd_check_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
