"""Generalized intersection graphs G_n(Z_m) of ideals of Z_m."""

from .arithmetic import (
    DivisorVector,
    DomainError,
    Factorization,
    ModulePair,
    NotAModuleError,
    d_support,
    enumerate_divisors,
    factorize,
    lcm_vector,
    make_module_pair,
    n_divides,
)
from .graph_build import (
    GraphTooLarge,
    IdealGraph,
    adjacent,
    build_graph,
    induced_nonisolated,
    isolated_set,
)
from .formulas import CaseTag, ChromaticClass, DiameterNote, INFINITY, classify, explain, predict
from .oracle import OracleBudget, OracleResult, Status
from .verify import InvariantReport, SweepSummary, Verdict, sweep, verify_pair

__version__ = "0.1.0"

__all__ = [
    "DivisorVector", "DomainError", "Factorization", "ModulePair", "NotAModuleError",
    "d_support", "enumerate_divisors", "factorize", "lcm_vector", "make_module_pair",
    "n_divides", "GraphTooLarge", "IdealGraph", "adjacent", "build_graph",
    "induced_nonisolated", "isolated_set", "CaseTag", "ChromaticClass", "DiameterNote",
    "INFINITY", "classify", "explain", "predict", "OracleBudget", "OracleResult", "Status",
    "InvariantReport", "SweepSummary", "Verdict", "sweep", "verify_pair",
]
