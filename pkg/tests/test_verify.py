import io
import json

import pytest

from idealgraph.arithmetic import make_module_pair
from idealgraph.oracle import OracleBudget
from idealgraph.verify import (
    CSV_HEADER,
    INVARIANTS,
    Verdict,
    load_reports,
    persist_reports,
    summarize,
    sweep,
    sweep_pairs,
    verify_pair,
    write_reports,
)

from conftest import all_pairs

DET = OracleBudget(deterministic=True)


def verdicts(report):
    return {e.inv: e.verdict for e in report.entries}


def test_verify_12_12_all_match():
    r = verify_pair(make_module_pair(12, 12), DET)
    assert [e.inv for e in r.entries] == list(INVARIANTS)
    assert set(verdicts(r).values()) == {Verdict.MATCH.value}
    assert r.entry("degrees").oracle == [2, 3, 2, 1]
    assert (r.vertices, r.edges) == (4, 4)


def test_verify_exceptional_pair():
    r = verify_pair(make_module_pair(12, 6), DET)
    assert r.case == "EXCEPTIONAL_K_A_UNION_NULL"
    assert not r.mismatches
    assert r.entry("independence_number").oracle == 3


def test_verify_null_graph_degenerate_rows():
    r = verify_pair(make_module_pair(12, 2), DET)
    v = verdicts(r)
    for inv in ("domination_number", "chromatic_class", "chromatic_index",
                "eulerian_nonisolated", "diameter"):
        assert v[inv] == Verdict.DEGENERATE.value
    assert v["independence_number"] == Verdict.MATCH.value
    assert v["is_null"] == Verdict.MATCH.value


def test_verify_single_vertex_degenerate():
    v = verdicts(verify_pair(make_module_pair(9, 3), DET))
    assert v["is_complete"] == v["has_universal_vertex"] == Verdict.DEGENERATE.value
    assert v["vertex_count"] == Verdict.MATCH.value


def test_verify_refuses_huge_graph():
    r = verify_pair(make_module_pair(720720, 720720), DET, max_vertices=50)
    assert [e.inv for e in r.entries] == ["graph"]
    assert r.entries[0].status == "REFUSED"
    assert r.entries[0].verdict == Verdict.ORACLE_SKIPPED.value


def test_oracle_skipped_on_tight_budget():
    budget = OracleBudget(max_vertices_exact_independence=2, max_vertices_exact_domination=2,
                          max_edges_edge_coloring=1)
    v = verdicts(verify_pair(make_module_pair(12, 12), budget))
    assert v["independence_number"] == v["domination_number"] == Verdict.ORACLE_SKIPPED.value
    assert v["chromatic_index"] == Verdict.ORACLE_SKIPPED.value


def test_sweep_counts():
    # counted by hand: 1+1+2+1+3+1+3+2+3+1+5
    assert sum(1 for _ in sweep_pairs(12)) == len(list(all_pairs(12))) == 23
    assert [(p.m, p.n) for p in sweep_pairs(2)] == [(2, 2)]
    assert sum(1 for _ in sweep_pairs(12, n_equals_m=True)) == 11
    assert [(p.m, p.n) for p in sweep_pairs(12, m_min=12)] == [(12, 2), (12, 3), (12, 4),
                                                             (12, 6), (12, 12)]
    radical = [(p.m, p.n) for p in sweep_pairs(40, cases=["RADICAL"])]
    assert (30, 30) in radical and (12, 12) not in radical
    with pytest.raises(ValueError):
        list(sweep_pairs(1))


def test_sweep_order_independent_of_jobs():
    serial = [r.to_dict() for r in sweep(40, DET)]
    parallel = [r.to_dict() for r in sweep(40, DET, jobs=2)]
    assert serial == parallel
    assert [(d["m"], d["n"]) for d in serial] == list(all_pairs(40))


def test_summary_no_mismatch_small_range():
    summary = summarize(sweep(150, DET))
    assert summary.pair_count == len(list(all_pairs(150)))
    assert not summary.mismatches
    assert summary.count("vertex_count", Verdict.MATCH) == summary.pair_count
    assert "mismatches: 0" in summary.format_table()


def test_jsonl_round_trip(tmp_path):
    reports = list(sweep(30, DET))
    out = tmp_path / "r.jsonl"
    summary = persist_reports(reports, out, "jsonl")
    assert summary.pair_count == len(reports)
    loaded = load_reports(out, "jsonl")
    assert [r.to_dict() for r in loaded] == [r.to_dict() for r in reports]
    first = json.loads(out.read_text().splitlines()[0])
    assert list(first) == ["m", "n", "case", "vertices", "edges", "entries"]


def test_csv_round_trip(tmp_path):
    reports = list(sweep(30, DET)) + [verify_pair(make_module_pair(720720, 2), DET,
                                                  max_vertices=10)]
    out = tmp_path / "r.csv"
    persist_reports(reports, out, "csv")
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    loaded = load_reports(out, "csv")
    assert [r.to_dict() for r in loaded] == [r.to_dict() for r in reports]


def test_infinite_girth_serialized():
    r = verify_pair(make_module_pair(12, 2), DET)
    doc = r.to_dict()
    girth = next(e for e in doc["entries"] if e["inv"] == "girth")
    assert girth["pred"] == girth["oracle"] == "INFINITY"


@pytest.mark.parametrize("fmt, expected", [("jsonl", ""), ("csv", ",".join(CSV_HEADER) + "\n")])
def test_empty_stream(tmp_path, fmt, expected):
    out = tmp_path / f"e.{fmt}"
    persist_reports([], out, fmt)
    assert out.read_text() == expected
    assert load_reports(out, fmt) == []


def test_write_reports_to_stream():
    buf = io.StringIO()
    write_reports(sweep(6, DET), buf, "jsonl")
    assert len(buf.getvalue().splitlines()) == len(list(all_pairs(6)))


def test_unwritable_path_names_path(tmp_path):
    bad = tmp_path / "missing" / "out.jsonl"
    with pytest.raises(OSError, match="missing"):
        persist_reports([], bad)
    with pytest.raises(ValueError):
        persist_reports([], tmp_path / "x", "xml")


def test_bad_csv_header(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("a,b\n")
    with pytest.raises(ValueError):
        load_reports(p, "csv")
