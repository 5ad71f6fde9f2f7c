"""Command-line front end: ``idealgraph {analyze,explain,verify,sweep,export}``.

Exit codes: 0 success / all match, 1 a MISMATCH was found, 2 usage or domain
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from . import formulas as F
from .arithmetic import DomainError, enumerate_divisors, make_module_pair
from .graph_build import GraphTooLarge, build_graph
from .oracle import OracleBudget
from .verify import SweepSummary, persist_reports, sweep, verify_pair, write_reports

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
ENV_PREFIX = "IDEALGRAPH_BUDGET_"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def budget_from_env(environ=os.environ) -> OracleBudget:
    """Defaults, overridden by IDEALGRAPH_BUDGET_<FIELD> variables."""
    overrides = {}
    for f in dataclasses.fields(OracleBudget):
        raw = environ.get(ENV_PREFIX + f.name.upper())
        if raw is None:
            continue
        if f.name == "deterministic":
            overrides[f.name] = raw.strip().lower() in ("1", "true", "yes", "on")
        elif f.name == "timeout_per_invariant":
            overrides[f.name] = float(raw)
        else:
            overrides[f.name] = int(raw)
    return OracleBudget(**overrides)


def _add_budget_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("oracle budget")
    g.add_argument("--max-indep-vertices", type=int, dest="max_vertices_exact_independence")
    g.add_argument("--max-dom-vertices", type=int, dest="max_vertices_exact_domination")
    g.add_argument("--max-coloring-edges", type=int, dest="max_edges_edge_coloring")
    g.add_argument("--timeout", type=float, dest="timeout_per_invariant",
                   help="wall-clock seconds per invariant (ignored with --deterministic)")
    g.add_argument("--max-nodes", type=int, dest="max_nodes",
                   help="search-node limit per invariant")
    g.add_argument("--deterministic", action="store_true", default=None,
                   help="bound searches by node counts only")


def _budget(args) -> OracleBudget:
    base = budget_from_env()
    overrides = {
        f.name: getattr(args, f.name)
        for f in dataclasses.fields(OracleBudget)
        if getattr(args, f.name, None) is not None
    }
    return dataclasses.replace(base, **overrides)


def _pair_flags(p: argparse.ArgumentParser):
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idealgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="predicted invariants of G_n(Z_m)")
    _pair_flags(p)
    p = sub.add_parser("explain", help="predicted invariants with the case that produced each")
    _pair_flags(p)
    p = sub.add_parser("verify", help="compare predictions with brute force for one pair")
    _pair_flags(p)
    _add_budget_flags(p)
    p.add_argument("--json", action="store_true", help="print the report as one JSON line")

    p = sub.add_parser("sweep", help="verify every pair with m <= M")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--m-min", type=int, default=2)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--n-equals-m", action="store_true", help="only the pairs with n = m")
    p.add_argument("--case", action="append", choices=[t.value for t in F.CaseTag],
                   help="keep only pairs of this case (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    _add_budget_flags(p)

    p = sub.add_parser("export", help="write G_n(Z_m) as DOT or JSON")
    _pair_flags(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")
    return parser


def _fmt(value) -> str:
    if isinstance(value, float) and value == F.INFINITY:
        return "inf"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def _analyze(pair) -> list[str]:
    pred = F.predict(pair)
    edges = sum(F.predicted_degree(pair, d) for d in enumerate_divisors(pair)[1:-1]) // 2
    out = [f"G_{pair.n}(Z_{pair.m})  case={pred.case.value}"]
    if pred.is_null:
        out.append("null graph (no edges); gamma, chi' and Eulerian are outside the theorems")
    rows = [
        ("vertices", pred.vertex_count),
        ("edges", edges),
        ("isolated |A|", pred.isolated_count),
        ("girth", pred.girth),
        ("max degree", pred.max_degree),
        ("independence number", pred.independence_number),
        ("domination number", pred.domination_number),
        ("chromatic index", f"{pred.chromatic_index} ({pred.chromatic_class.value})"),
        ("forest", pred.is_forest),
        ("tree / star", pred.is_tree),
        ("complete", pred.is_complete),
        ("universal vertex", pred.has_universal_vertex),
        ("no isolated vertex", pred.no_isolated),
        ("Eulerian(G minus A)", pred.eulerian_nonisolated),
        ("diameter note", pred.diameter_note),
    ]
    out += [f"  {name:<22}{_fmt(value)}" for name, value in rows]
    return out


def _explain(pair) -> list[str]:
    out = [f"G_{pair.n}(Z_{pair.m})"]
    for name, value, clause in F.explain(pair):
        out.append(f"  {name:<22}{_fmt(value):<28}[{clause}]")
    return out


def _emit(text: str, out_path: str | None):
    if out_path:
        try:
            with open(out_path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write {out_path}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "sweep":
        if args.m_max < 2:
            raise DomainError("--m-max must be >= 2")
        budget = _budget(args)
        reports = sweep(args.m_max, budget, m_min=args.m_min, n_equals_m=args.n_equals_m,
                        cases=args.case, jobs=args.jobs)
        summary = SweepSummary()
        if args.out:
            persist_reports(reports, args.out, args.format, summary)
        else:
            write_reports(reports, sys.stdout, args.format, summary)
        print(summary.format_table(), file=sys.stderr)
        return EXIT_MISMATCH if summary.mismatches else EXIT_OK

    pair = make_module_pair(args.m, args.n)
    if args.command == "analyze":
        print("\n".join(_analyze(pair)))
    elif args.command == "explain":
        print("\n".join(_explain(pair)))
    elif args.command == "verify":
        report = verify_pair(pair, _budget(args))
        if args.json:
            print(json.dumps(report.to_dict()))
        else:
            print(f"G_{pair.n}(Z_{pair.m})  case={report.case}  "
                  f"vertices={report.vertices} edges={report.edges}")
            for e in report.entries:
                oracle = e.oracle if e.status == "EXACT" else e.status
                print(f"  {e.inv:<22}{_fmt(e.pred):<26} {_fmt(oracle):<26} {e.verdict}")
        return EXIT_MISMATCH if report.mismatches else EXIT_OK
    elif args.command == "export":
        g = build_graph(pair)
        _emit(g.to_dot() if args.format == "dot" else g.to_json() + "\n", args.out)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (DomainError, ValueError, GraphTooLarge) as exc:
        msg = str(exc)
        if isinstance(exc, DomainError) and "divide" in msg:
            msg = "n must divide m, both > 1"
        print(f"idealgraph: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"idealgraph: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
