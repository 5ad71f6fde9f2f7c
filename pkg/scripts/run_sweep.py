#!/usr/bin/env python3
"""Full verification sweep: every closed form against the brute-force oracles.

Writes the per-pair reports and a tally table into ``--out-dir``:

    python3 scripts/run_sweep.py --m-max 2000 --jobs 4 --out-dir results/
"""
import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from idealgraph.oracle import OracleBudget
from idealgraph.verify import SweepSummary, persist_reports, sweep


@dataclass
class SweepConfig:
    m_max: int = 2000
    m_min: int = 2
    jobs: int = 1
    fmt: str = "jsonl"
    out_dir: Path = Path("results")
    budget: OracleBudget = dataclasses.field(
        default_factory=lambda: OracleBudget(deterministic=True))


def parse_args(argv=None) -> SweepConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m-max", type=int, default=2000)
    p.add_argument("--m-min", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", dest="fmt", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--out-dir", type=Path, default=Path("results"))
    p.add_argument("--max-nodes", type=int, default=OracleBudget.max_nodes)
    a = p.parse_args(argv)
    budget = OracleBudget(max_nodes=a.max_nodes, deterministic=True)
    return SweepConfig(a.m_max, a.m_min, a.jobs, a.fmt, a.out_dir, budget)


def run(cfg: SweepConfig) -> SweepSummary:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    reports = sweep(cfg.m_max, cfg.budget, m_min=cfg.m_min, jobs=cfg.jobs)
    summary = persist_reports(reports, cfg.out_dir / f"reports.{cfg.fmt}", cfg.fmt)
    elapsed = time.perf_counter() - start

    table = summary.format_table()
    (cfg.out_dir / "summary.txt").write_text(table + f"\nelapsed: {elapsed:.1f}s\n")
    meta = {"m_min": cfg.m_min, "m_max": cfg.m_max, "jobs": cfg.jobs,
            "budget": dataclasses.asdict(cfg.budget), "elapsed_s": round(elapsed, 2),
            "pairs": summary.pair_count, "mismatches": summary.mismatches}
    (cfg.out_dir / "run.json").write_text(json.dumps(meta, indent=2) + "\n")
    print(table)
    print(f"elapsed: {elapsed:.1f}s -> {cfg.out_dir}")
    return summary


if __name__ == "__main__":
    sys.exit(1 if run(parse_args()).mismatches else 0)
