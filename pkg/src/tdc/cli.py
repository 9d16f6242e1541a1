"""Command-line front end.

Exit codes: 0 clean, 1 findings (a Disagree row, an inconsistent theorem
check, a failed solve), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from tdc import audit as audit_mod
from tdc.classifier import Verdict, classify, verify_class1_lemma, verify_class_theorem
from tdc.errors import BudgetExceeded, InvalidParameter, NoTdcExists, ParseError, TdcError
from tdc.families import parse_family
from tdc.formats import from_edge_list, read_graph6_file, to_edge_list, to_graph6
from tdc.graph import Graph, enumerate_graphs
from tdc.solver import SearchConfig, VertexOrder, chi_d_t, default_workers

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input / output helpers -------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graphs(args) -> list[tuple[str, Graph]]:
    sources = [s for s in (args.family, args.edges, args.graph6) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --edges, --graph6")
    if args.family is not None:
        return [(args.family, parse_family(args.family))]
    if args.edges is not None:
        g = from_edge_list(_read_text(args.edges))
        return [(to_graph6(g), g)]
    graphs = read_graph6_file(_read_text(args.graph6))
    if not graphs:
        raise UsageError(f"no graphs in {args.graph6}")
    return [(to_graph6(g), g) for g in graphs]


def _search_config(args) -> SearchConfig:
    workers = args.workers if args.workers is not None else default_workers()
    return SearchConfig(
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        order=VertexOrder(args.order),
        workers=workers,
    )


def _emit(records: list[dict], fmt: str, columns: Sequence[str], out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "tsv":
        out.write("\t".join(columns) + "\n")
        for rec in records:
            out.write("\t".join(_cell(rec.get(c)) for c in columns) + "\n")
    else:
        for rec in records:
            width = max(len(c) for c in columns)
            for c in columns:
                out.write(f"{c:<{width}}  {_cell(rec.get(c))}\n")
            out.write("\n")


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


# -- subcommands ------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.exhaustive is not None:
        graphs = [(to_graph6(g), g) for g in
                  enumerate_graphs(args.exhaustive, args.min_degree, args.dedup_isomorphs)]
    else:
        graphs = _load_graphs(args)
    if args.format == "human":
        for _, g in graphs:
            sys.stdout.write(to_edge_list(g))
            if len(graphs) > 1:
                sys.stdout.write("\n")
        return EXIT_OK
    records = [{"graph": name, "graph6": to_graph6(g), "n": g.n, "m": g.m,
                "edges": [list(e) for e in g.sorted_edges()]} for name, g in graphs]
    _emit(records, args.format, ["graph", "graph6", "n", "m"])
    return EXIT_OK


def cmd_compute(args) -> int:
    cfg = _search_config(args)
    records = []
    status = EXIT_OK
    for name, g in _load_graphs(args):
        rec = {"graph": name, "graph6": to_graph6(g), "n": g.n, "m": g.m}
        try:
            res = chi_d_t(g, cfg)
        except NoTdcExists as exc:
            rec.update(chi_d_t=None, error=f"NoTdcExists: {exc}")
            status = EXIT_FINDINGS
        except BudgetExceeded as exc:
            rec.update(chi_d_t=None, upper_bound=exc.upper_bound,
                       witness=None if exc.witness is None else str(exc.witness),
                       error=f"BudgetExceeded: {exc}")
            status = EXIT_FINDINGS
        else:
            rec.update(chi_d_t=res.value, witness=str(res.witness),
                       classes=[sorted(c) for c in res.witness.classes])
            if args.stats:
                rec.update(nodes_explored=res.nodes_explored, elapsed=round(res.elapsed, 6))
        records.append(rec)
    cols = ["graph", "n", "m", "chi_d_t", "witness", "classes"]
    if args.stats:
        cols += ["nodes_explored", "elapsed"]
    if any("error" in r for r in records):
        cols += ["upper_bound", "error"]
    _emit(records, args.format, cols)
    return status


def cmd_classify(args) -> int:
    cfg = _search_config(args)
    records = []
    status = EXIT_OK
    for name, g in _load_graphs(args):
        rec = {"graph": name, "graph6": to_graph6(g), "n": g.n}
        try:
            rec.update(classify(g, cfg, args.budget).to_json())
        except NoTdcExists as exc:
            rec.update(verdict=None, error=f"NoTdcExists: {exc}")
            status = EXIT_FINDINGS
        records.append(rec)
    _emit(records, args.format, ["graph", "n", "chi_d_t", "verdict", "witness", "empty_pn_class",
                                 "colorings_examined"] + (["error"] if status else []))
    return status


def _verify_one(name: str, g: Graph, cfg: SearchConfig, budget: int | None) -> dict:
    check = verify_class_theorem(g, name, cfg, budget)
    rec = check.to_json()
    rec["bounds_ok"] = check.delta in (1, 2)
    rec["lemma"] = None
    if check.verdict.verdict is Verdict.ONE:
        rec["lemma"] = verify_class1_lemma(g, cfg, budget)
    if check.verdict.verdict is Verdict.INCONCLUSIVE:
        rec["status"] = "inconclusive"
    elif check.consistent and rec["bounds_ok"] and rec["lemma"] is not False:
        rec["status"] = "ok"
    else:
        rec["status"] = "finding"
    return rec


def cmd_verify(args) -> int:
    cfg = _search_config(args)
    if args.exhaustive is not None:
        graphs = [(to_graph6(g), g) for g in enumerate_graphs(args.exhaustive, 1, args.dedup_isomorphs)]
    else:
        graphs = _load_graphs(args)
    records = []
    for name, g in graphs:
        try:
            records.append(_verify_one(name, g, cfg, args.budget))
        except NoTdcExists as exc:
            records.append({"graph": name, "status": "finding", "error": f"NoTdcExists: {exc}"})
    _emit(records, args.format, ["graph", "chi_d_t", "chi_d_t_mycielskian", "delta", "class",
                                 "consistent", "bounds_ok", "lemma", "status"])
    counts = {s: sum(r["status"] == s for r in records) for s in ("ok", "finding", "inconclusive")}
    print(f"# {len(records)} graphs: {counts['ok']} ok, {counts['finding']} findings, "
          f"{counts['inconclusive']} inconclusive", file=sys.stderr)
    return EXIT_FINDINGS if counts["finding"] else EXIT_OK


def cmd_audit(args) -> int:
    reports = audit_mod.audit(args.claim or None, args.n_from, args.n_to, _search_config(args),
                              max_order=args.max_order, class_budget=args.budget)
    _emit([r.to_json() for r in reports], args.format,
          ["claim_id", "n", "predicted", "computed", "status", "notes"])
    summary = {}
    for r in reports:
        summary[r.status] = summary.get(r.status, 0) + 1
    print("# " + ", ".join(f"{k}: {v}" for k, v in sorted(summary.items())), file=sys.stderr)
    return EXIT_FINDINGS if any(r.status == audit_mod.DISAGREE for r in reports) else EXIT_OK


_TABLE_FAMILIES = ("wheel", "cycle", "path", "comp-cycle", "comp-path")


def cmd_table(args) -> int:
    family = args.claim[0] if args.claim else None
    if family not in _TABLE_FAMILIES:
        raise UsageError(f"table needs --claim one of {', '.join(_TABLE_FAMILIES)}")
    _, first, last = audit_mod.CLAIMS[family]
    lo = first if args.n_from is None else args.n_from
    hi = last if args.n_to is None else args.n_to
    kw = dict(cfg=_search_config(args), max_order=args.max_order, class_budget=args.budget)
    by_claim = {}
    for claim in (family, f"myc-{family}", f"class-{family}"):
        by_claim[claim] = {r.n: r for r in audit_mod.audit([claim], lo, hi, **kw)}
    records = []
    for n in range(lo, hi + 1):
        base, myc, klass = by_claim[family][n], by_claim[f"myc-{family}"][n], by_claim[f"class-{family}"][n]
        records.append({
            "n": n,
            "formula": base.predicted, "chi_d_t": base.computed, "status": base.status,
            "myc_formula": myc.predicted, "chi_d_t_myc": myc.computed, "myc_status": myc.status,
            "class_claim": klass.predicted, "class": klass.computed, "class_status": klass.status,
        })
    fmt = "tsv" if args.format == "human" else args.format
    _emit(records, fmt, ["n", "formula", "chi_d_t", "status", "myc_formula", "chi_d_t_myc", "myc_status",
                         "class_claim", "class", "class_status"])
    disagree = any(rec[k] == audit_mod.DISAGREE for rec in records for k in ("status", "myc_status", "class_status"))
    return EXIT_FINDINGS if disagree else EXIT_OK


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--family", metavar="SPEC", help="e.g. cycle:7, myc:path:3, comp:cycle:6")
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")
    src.add_argument("--graph6", metavar="FILE", help="graph6 file, one graph per line ('-' for stdin)")
    common.add_argument("--format", choices=["human", "json", "tsv"], default="human")
    search = common.add_argument_group("search")
    search.add_argument("--workers", type=int, default=None, help="default: $TDC_WORKERS or 1")
    search.add_argument("--node-budget", type=int, default=None)
    search.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    search.add_argument("--order", choices=[o.value for o in VertexOrder], default=VertexOrder.DEGENERACY.value)
    search.add_argument("--budget", type=int, default=5_000_000,
                        help="node budget for optimal-coloring enumeration in class decisions")
    common.add_argument("--exhaustive", type=int, metavar="N", help="all graphs on N vertices")
    common.add_argument("--dedup-isomorphs", action="store_true")
    common.add_argument("--claim", action="append", metavar="ID")
    common.add_argument("--from", dest="n_from", type=int, metavar="N")
    common.add_argument("--to", dest="n_to", type=int, metavar="N")
    common.add_argument("--max-order", type=int, default=audit_mod.DEFAULT_MAX_ORDER)
    common.add_argument("--stats", action="store_true", help="include node counts and timings")
    common.add_argument("--min-degree", type=int, default=0, help="gen --exhaustive only")

    parser = _Parser(prog="tdc", description="Total dominator chromatic number toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, doc in [
        ("gen", cmd_gen, "emit a graph or enumerate small graphs"),
        ("compute", cmd_compute, "exact total dominator chromatic number"),
        ("classify", cmd_classify, "Class One / Class Two verdict"),
        ("verify", cmd_verify, "check the Mycielskian bounds, class theorem and lemma"),
        ("audit", cmd_audit, "compare every published formula with exact values"),
        ("table", cmd_table, "reproduce a family's value table as TSV"),
    ]:
        p = sub.add_parser(name, parents=[common], help=doc, description=doc)
        p.set_defaults(func=fn)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.exhaustive is not None and args.command not in ("gen", "verify"):
            raise UsageError("--exhaustive applies to gen and verify only")
        return args.func(args)
    except UsageError as exc:
        print(f"tdc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidParameter) as exc:
        print(f"tdc: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TdcError as exc:
        print(f"tdc: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FINDINGS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
