"""Formula-versus-oracle comparison for single pairs and whole sweeps."""

from __future__ import annotations

import csv
import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Iterator

from . import formulas as F
from . import oracle as O
from .arithmetic import ModulePair, factorize, make_module_pair
from .formulas import CaseTag, DiameterNote
from .graph_build import DEFAULT_MAX_VERTICES, GraphTooLarge, build_graph, induced_nonisolated

CSV_HEADER = ["m", "n", "case", "invariant", "predicted", "oracle", "verdict"]

# order in which entries appear in every report
INVARIANTS = (
    "vertex_count",
    "edge_count",
    "isolated_count",
    "is_null",
    "degrees",
    "max_degree",
    "girth",
    "is_forest",
    "is_tree",
    "is_star",
    "has_universal_vertex",
    "is_complete",
    "no_isolated",
    "independence_number",
    "domination_number",
    "chromatic_class",
    "chromatic_index",
    "eulerian_nonisolated",
    "diameter",
)


class Verdict(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    ORACLE_SKIPPED = "ORACLE_SKIPPED"
    DEGENERATE = "DEGENERATE"


@dataclass
class Entry:
    inv: str
    pred: Any
    oracle: Any
    status: str
    verdict: str

    def to_dict(self) -> dict:
        return {"inv": self.inv, "pred": self.pred, "oracle": self.oracle,
                "status": self.status, "verdict": self.verdict}


@dataclass
class InvariantReport:
    m: int
    n: int
    case: str
    vertices: int
    edges: int
    entries: list[Entry]
    elapsed: float = field(default=0.0, compare=False)

    def entry(self, name: str) -> Entry:
        for e in self.entries:
            if e.inv == name:
                return e
        raise KeyError(name)

    @property
    def mismatches(self) -> list[str]:
        return [e.inv for e in self.entries if e.verdict == Verdict.MISMATCH.value]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "case": self.case,
            "vertices": self.vertices,
            "edges": self.edges,
            "entries": [e.to_dict() for e in self.entries],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        return cls(d["m"], d["n"], d["case"], d["vertices"], d["edges"],
                   [Entry(**e) for e in d["entries"]])


def _jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "INFINITY"
    if isinstance(value, Enum):
        return value.value
    return value


def _entry(inv: str, pred, oracle_value, status=O.Status.EXACT, *,
           degenerate: bool = False, match: bool | None = None) -> Entry:
    pred, oracle_value = _jsonable(pred), _jsonable(oracle_value)
    if status is not O.Status.EXACT:
        verdict = Verdict.ORACLE_SKIPPED
        oracle_value = None
    elif degenerate:
        verdict = Verdict.DEGENERATE
    else:
        ok = (pred == oracle_value) if match is None else match
        verdict = Verdict.MATCH if ok else Verdict.MISMATCH
    return Entry(inv, pred, oracle_value, status.value, verdict.value)


def _diameter_consistent(note: DiameterNote, diam: float, graph, pair: ModulePair) -> bool:
    if note is DiameterNote.DISCONNECTED_TWO_CLIQUES:
        a, b = pair.alpha
        return O.oracle_matches_two_cliques(graph, a, b)
    if note is DiameterNote.CLIQUE:
        return diam == 1
    if note is DiameterNote.BOUND_LE_2:
        return diam <= 2
    if note is DiameterNote.BOUND_LE_4:
        return diam <= 4
    return True


def verify_pair(pair: ModulePair, budget: O.OracleBudget = O.OracleBudget(),
                max_vertices: int = DEFAULT_MAX_VERTICES) -> InvariantReport:
    start = time.perf_counter()
    pred = F.predict(pair)
    try:
        g = build_graph(pair, max_vertices)
    except GraphTooLarge:
        refused = Entry("graph", pred.vertex_count, None, "REFUSED",
                        Verdict.ORACLE_SKIPPED.value)
        return InvariantReport(pair.m, pair.n, pred.case.value, pred.vertex_count, -1,
                               [refused], time.perf_counter() - start)

    null = pred.is_null
    tiny = g.order <= 1
    core = induced_nonisolated(g)
    pred_degrees = [F.predicted_degree(pair, v) for v in g.vertices]
    degrees = O.oracle_degrees(g)
    entries = [
        _entry("vertex_count", pred.vertex_count, g.order),
        _entry("edge_count", sum(pred_degrees) // 2, g.edge_count),
        _entry("isolated_count", pred.isolated_count, O.oracle_isolated_count(g)),
        _entry("is_null", pred.is_null, O.oracle_is_null(g)),
        _entry("degrees", pred_degrees, degrees),
        _entry("max_degree", pred.max_degree, max(degrees, default=0)),
        _entry("girth", pred.girth, O.oracle_girth(g)),
        _entry("is_forest", pred.is_forest, O.oracle_is_forest(g)),
        _entry("is_tree", pred.is_tree, O.oracle_is_tree(g)),
        _entry("is_star", pred.is_star, O.oracle_is_star(g)),
        # on <= 1 vertex these hold vacuously, outside the theorems' reach
        _entry("has_universal_vertex", pred.has_universal_vertex,
               O.oracle_has_universal_vertex(g), degenerate=tiny),
        _entry("is_complete", pred.is_complete, O.oracle_is_complete(g), degenerate=tiny),
        _entry("no_isolated", pred.no_isolated, O.oracle_no_isolated(g), degenerate=tiny),
    ]

    ind = O.oracle_independence(g, budget)
    entries.append(_entry("independence_number", pred.independence_number, ind.value,
                          ind.status))
    dom = O.oracle_domination(g, budget)
    entries.append(_entry("domination_number", pred.domination_number, dom.value,
                          dom.status, degenerate=null))
    chi = O.oracle_chromatic_index_class(g, budget)
    chi_value = None
    if chi.status is O.Status.EXACT:
        chi_value = F.chromatic_index_value(max(degrees, default=0), chi.value)
    entries.append(_entry("chromatic_class", pred.chromatic_class, chi.value, chi.status,
                          degenerate=null))
    entries.append(_entry("chromatic_index", pred.chromatic_index, chi_value, chi.status,
                          degenerate=null))
    entries.append(_entry("eulerian_nonisolated", pred.eulerian_nonisolated,
                          O.oracle_eulerian_nonisolated(g), degenerate=null or core.order <= 1))
    _, diam = O.oracle_components_and_diameter(core)
    entries.append(_entry("diameter", pred.diameter_note, diam, degenerate=null,
                          match=_diameter_consistent(pred.diameter_note, diam, g, pair)))
    return InvariantReport(pair.m, pair.n, pred.case.value, g.order, g.edge_count,
                           entries, time.perf_counter() - start)


# -- sweeps ----------------------------------------------------------------


def _divisors_above_one(m: int) -> list[int]:
    f = factorize(m)
    divs = [1]
    for p, e in f.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(d for d in divs if d > 1)


def sweep_pairs(m_max: int, m_min: int = 2, n_equals_m: bool = False,
                cases: Iterable[str] | None = None) -> Iterator[ModulePair]:
    """All pairs (m, n), m ascending then n ascending, over divisors n > 1 of m."""
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    wanted = {CaseTag(c) for c in cases} if cases else None
    for m in range(max(2, m_min), m_max + 1):
        for n in ([m] if n_equals_m else _divisors_above_one(m)):
            pair = make_module_pair(m, n)
            if wanted is None or F.classify(pair) in wanted:
                yield pair


def _verify_mn(args) -> InvariantReport:
    m, n, budget, max_vertices = args
    return verify_pair(make_module_pair(m, n), budget, max_vertices)


def sweep(m_max: int, budget: O.OracleBudget = O.OracleBudget(), *, m_min: int = 2,
          n_equals_m: bool = False, cases: Iterable[str] | None = None, jobs: int = 1,
          max_vertices: int = DEFAULT_MAX_VERTICES) -> Iterator[InvariantReport]:
    """Stream one report per pair in sweep order, whatever the worker count."""
    pairs = sweep_pairs(m_max, m_min, n_equals_m, cases)
    if jobs <= 1:
        for pair in pairs:
            yield verify_pair(pair, budget, max_vertices)
        return
    work = ((p.m, p.n, budget, max_vertices) for p in pairs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, which serializes emission
        yield from pool.map(_verify_mn, work, chunksize=16)


@dataclass
class SweepSummary:
    pair_count: int = 0
    tallies: dict[str, Counter] = field(default_factory=dict)
    mismatches: list[tuple[int, int, str]] = field(default_factory=list)

    def add(self, report: InvariantReport):
        self.pair_count += 1
        for e in report.entries:
            self.tallies.setdefault(e.inv, Counter())[e.verdict] += 1
            if e.verdict == Verdict.MISMATCH.value:
                self.mismatches.append((report.m, report.n, e.inv))

    def count(self, inv: str, verdict: Verdict) -> int:
        return self.tallies.get(inv, Counter())[verdict.value]

    def format_table(self) -> str:
        cols = [v.value for v in Verdict]
        lines = [f"{'invariant':<22}" + "".join(f"{c:>16}" for c in cols)]
        for inv in sorted(self.tallies, key=lambda k: (k not in INVARIANTS,
                                                         INVARIANTS.index(k) if k in INVARIANTS else 0)):
            t = self.tallies[inv]
            lines.append(f"{inv:<22}" + "".join(f"{t[c]:>16}" for c in cols))
        lines.append(f"pairs: {self.pair_count}, mismatches: {len(self.mismatches)}")
        return "\n".join(lines)


def summarize(reports: Iterable[InvariantReport]) -> SweepSummary:
    summary = SweepSummary()
    for r in reports:
        summary.add(r)
    return summary


# -- persistence -----------------------------------------------------------


def _cell(value) -> str:
    return json.dumps(value)


def _report_rows(report: InvariantReport):
    for e in report.entries:
        oracle = _cell(e.oracle) if e.status == O.Status.EXACT.value else e.status
        yield [report.m, report.n, report.case, e.inv, _cell(e.pred), oracle, e.verdict]


def persist_reports(reports: Iterable[InvariantReport], path, fmt: str = "jsonl",
                    summary: SweepSummary | None = None) -> SweepSummary:
    """Write reports to ``path`` (``-`` for stdout is handled by the caller).

    Returns the summary of what was written, accumulating into ``summary``
    when one is given.
    """
    summary = summary if summary is not None else SweepSummary()
    fmt = fmt.lower()
    if fmt not in ("jsonl", "csv"):
        raise ValueError(f"unknown report format {fmt!r}")
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            write_reports(reports, fh, fmt, summary)
    except OSError as exc:
        raise OSError(f"cannot write reports to {path}: {exc.strerror or exc}") from exc
    return summary


def write_reports(reports: Iterable[InvariantReport], fh, fmt: str,
                  summary: SweepSummary | None = None):
    if fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
    for r in reports:
        if summary is not None:
            summary.add(r)
        if fmt == "jsonl":
            fh.write(json.dumps(r.to_dict()) + "\n")
        else:
            writer.writerows(_report_rows(r))


def load_reports(path, fmt: str = "jsonl") -> list[InvariantReport]:
    path = Path(path)
    with path.open(newline="") as fh:
        if fmt.lower() == "jsonl":
            return [InvariantReport.from_dict(json.loads(line)) for line in fh if line.strip()]
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header {header}")
        reports: list[InvariantReport] = []
        for m, n, case, inv, pred, oracle, verdict in reader:
            m, n = int(m), int(n)
            if not reports or (reports[-1].m, reports[-1].n) != (m, n):
                reports.append(InvariantReport(m, n, case, 0, 0, []))
            if oracle in (O.Status.SKIPPED.value, O.Status.TIMEOUT.value, "REFUSED"):
                status, oracle_value = oracle, None
            else:
                status, oracle_value = O.Status.EXACT.value, json.loads(oracle)
            reports[-1].entries.append(Entry(inv, json.loads(pred), oracle_value, status, verdict))
        for r in reports:
            # vertex and edge counts travel as entries
            names = {e.inv: e for e in r.entries}
            if "graph" in names:
                r.vertices, r.edges = names["graph"].pred, -1
            else:
                r.vertices = names["vertex_count"].oracle
                r.edges = names["edge_count"].oracle
        return reports
