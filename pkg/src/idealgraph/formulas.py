"""Closed-form invariants of G_n(Z_m) computed from the exponent vectors alone.

Nothing here builds a graph. Each ``_name`` helper returns ``(value, clause)``
where ``clause`` is a stable identifier for the theorem case that fired; the
public ``predicted_*`` functions drop the clause, ``explain`` keeps it.

Case statements such as "n = p1, m = p1^a p2" are read up to relabelling of
the primes: they fix the *shape* of the exponent vectors, not which prime is
smallest.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum

from .arithmetic import DivisorVector, ModulePair, d_support, n_divides

INFINITY = math.inf


class CaseTag(str, Enum):
    EMPTY = "EMPTY"
    NULL_GRAPH = "NULL_GRAPH"
    EXCEPTIONAL_K_A_UNION_NULL = "EXCEPTIONAL_K_A_UNION_NULL"
    TWO_CLIQUES = "TWO_CLIQUES"
    RADICAL = "RADICAL"
    PRIME_POWER_MODULE = "PRIME_POWER_MODULE"
    GENERAL = "GENERAL"


class ChromaticClass(str, Enum):
    CLASS1 = "CLASS1"
    CLASS2 = "CLASS2"


class DiameterNote(str, Enum):
    NOT_APPLICABLE = "NOT_APPLICABLE"
    CLIQUE = "CLIQUE"
    BOUND_LE_2 = "BOUND_LE_2"
    BOUND_LE_4 = "BOUND_LE_4"
    DISCONNECTED_TWO_CLIQUES = "DISCONNECTED_TWO_CLIQUES"


def _prod_alpha_plus_one(pair: ModulePair) -> int:
    return math.prod(a + 1 for a in pair.alpha)


def _prod_gap(pair: ModulePair) -> int:
    return math.prod(a - b + 1 for a, b in zip(pair.alpha, pair.beta))


def is_radical(pair: ModulePair) -> bool:
    """n = p1...ps: every prime of m divides n exactly once."""
    return all(b == 1 for b in pair.beta)


def _single_prime_module(pair: ModulePair) -> int | None:
    """Index j when n = p_j^beta_j is a prime power, else None."""
    if pair.s_prime == 1:
        return next(iter(pair.support))
    return None


def _null_clause(pair: ModulePair) -> str | None:
    a, b, s = pair.alpha, pair.beta, pair.s
    if s == 2 and pair.s_prime == 1:
        j = _single_prime_module(pair)
        if b[j] == 1 and a[1 - j] == 1:
            return "null-i"
    if s == 1 and b[0] == 1:
        return "null-ii"
    if s == 1 and b[0] == 2:
        return "null-iii"
    if s == 2 and a == (1, 1) and b == (1, 1):
        return "null-iv"
    return None


def predicted_vertex_count(pair: ModulePair) -> int:
    return _prod_alpha_plus_one(pair) - 2


def predicted_is_null(pair: ModulePair) -> bool:
    return _null_clause(pair) is not None


def classify(pair: ModulePair) -> CaseTag:
    if predicted_vertex_count(pair) == 0:
        return CaseTag.EMPTY
    if predicted_is_null(pair):
        return CaseTag.NULL_GRAPH
    if pair.s == 2 and pair.beta == (1, 1):
        if min(pair.alpha) == 1:
            return CaseTag.EXCEPTIONAL_K_A_UNION_NULL
        return CaseTag.TWO_CLIQUES
    if is_radical(pair):
        return CaseTag.RADICAL
    if pair.s_prime == 1:
        return CaseTag.PRIME_POWER_MODULE
    return CaseTag.GENERAL


def _is_nullish(tag: CaseTag) -> bool:
    return tag in (CaseTag.EMPTY, CaseTag.NULL_GRAPH)


# -- structure -------------------------------------------------


def _forest(pair: ModulePair) -> tuple[bool, str]:
    a, b, s = pair.alpha, pair.beta, pair.s
    if s == 2 and b == (1, 1) and max(a) <= 2:
        return True, "forest-i"
    if s == 2 and pair.s_prime == 1:
        j = _single_prime_module(pair)
        if b[j] == 1 and a[1 - j] <= 2:
            return True, "forest-ii"
    if s == 1 and 1 <= b[0] <= 3:
        return True, "forest-iii"
    return False, "girth-theorem"


def _girth(pair: ModulePair) -> tuple[float, str]:
    forest, clause = _forest(pair)
    return (INFINITY, clause) if forest else (3, "girth-theorem")


def _tree(pair: ModulePair) -> tuple[bool, str]:
    if pair.s == 1:
        a, b = pair.alpha[0], pair.beta[0]
        if a == b == 2:
            return True, "tree-i"
        if a == b == 3:
            return True, "tree-ii"
        if b == 1 and a == 2:
            return True, "tree-iii"
    return False, "tree-corollary"


def _isolated_count(pair: ModulePair) -> tuple[int, str]:
    tag = classify(pair)
    if tag is CaseTag.EMPTY:
        return 0, "degenerate-empty"
    if tag is CaseTag.NULL_GRAPH:
        return predicted_vertex_count(pair), "degenerate-null"
    if tag is CaseTag.EXCEPTIONAL_K_A_UNION_NULL:
        return max(pair.alpha), "isolated-count-exceptional"
    return _prod_gap(pair) - 1, "isolated-count-general"


def _independence(pair: ModulePair) -> tuple[int, str]:
    tag = classify(pair)
    if _is_nullish(tag):
        return predicted_vertex_count(pair), "degenerate-null"
    if tag is CaseTag.EXCEPTIONAL_K_A_UNION_NULL:
        return max(pair.alpha) + 1, "independence-exceptional"
    return _prod_gap(pair) - 1 + pair.s_prime, "independence-general"


def predicted_degree(pair: ModulePair, d: DivisorVector) -> int:
    if n_divides(pair, d):
        return 0
    dd = d_support(pair, d)
    non_nbrs = math.prod(
        (a - b + 1) if i in dd else (a + 1)
        for i, (a, b) in enumerate(zip(pair.alpha, pair.beta))
    )
    return _prod_alpha_plus_one(pair) - 2 - non_nbrs


def _max_degree(pair: ModulePair) -> tuple[int, str]:
    if _is_nullish(classify(pair)):
        return 0, "degenerate-null"
    total = _prod_alpha_plus_one(pair) - 2
    if is_radical(pair):
        a = sorted(pair.alpha, reverse=True)
        return total - (a[0] + 1) * math.prod(a[1:]), "max-degree-radical"
    return total - _prod_gap(pair), "max-degree-general"


def _universal(pair: ModulePair) -> tuple[bool, str]:
    return pair.n == pair.m and max(pair.alpha) >= 2, "universal-vertex-theorem"


def _complete(pair: ModulePair) -> tuple[bool, str]:
    return (
        pair.s == 1 and pair.n == pair.m and pair.alpha[0] >= 2,
        "complete-corollary",
    )


def _no_isolated(pair: ModulePair) -> tuple[bool, str]:
    a = pair.alpha
    excluded = (pair.s == 1 and a[0] <= 2) or (pair.s == 2 and a == (1, 1))
    return pair.n == pair.m and not excluded, "no-isolated-corollary"


def _domination(pair: ModulePair) -> tuple[int, str]:
    tag = classify(pair)
    if _is_nullish(tag):
        return predicted_vertex_count(pair), "degenerate-null"
    iso, _ = _isolated_count(pair)
    if not is_radical(pair) or tag is CaseTag.EXCEPTIONAL_K_A_UNION_NULL:
        return iso + 1, "domination-plus-one"
    return iso + 2, "domination-plus-two"


# -- chromatic index ------------------------------------------


def _chromatic(pair: ModulePair) -> tuple[tuple[int, ChromaticClass], str]:
    delta, _ = _max_degree(pair)
    if _is_nullish(classify(pair)):
        return (0, ChromaticClass.CLASS1), "degenerate-null"
    j = _single_prime_module(pair)
    if j is not None:
        others = math.prod(a + 1 for i, a in enumerate(pair.alpha) if i != j)
        odd = (pair.beta[j] * others) % 2 == 1
        cls = ChromaticClass.CLASS1 if odd else ChromaticClass.CLASS2
        return (delta, cls), "chromatic-prime-power-module"
    if pair.s == 2 and pair.beta == (1, 1):
        even = max(pair.alpha) % 2 == 0
        cls = ChromaticClass.CLASS1 if even else ChromaticClass.CLASS2
        return (delta, cls), "chromatic-two-primes"
    return (delta, ChromaticClass.CLASS1), "chromatic-class-one"


# -- Eulerian and diameter -------------------------------------


def _eulerian(pair: ModulePair) -> tuple[bool, str]:
    if _is_nullish(classify(pair)):
        return True, "degenerate-null"
    a, b = pair.alpha, pair.beta
    if all(x % 2 == 0 for x in a) and all(y % 2 == 0 for y in b):
        return True, "eulerian-i"
    if any(x % 2 == 1 and y % 2 == 0 for x, y in zip(a, b)):
        return True, "eulerian-ii"
    if is_radical(pair) and pair.s >= 3 and all(x % 2 == 1 for x in a):
        return True, "eulerian-iii"
    if pair.s == 2 and b == (1, 1):
        hi, lo = sorted(a, reverse=True)
        if lo == 1 and hi > 1 and hi % 2 == 1:
            return True, "eulerian-iv"
    return False, "eulerian-none"


def _diameter(pair: ModulePair) -> tuple[DiameterNote, str]:
    tag = classify(pair)
    if _is_nullish(tag):
        return DiameterNote.NOT_APPLICABLE, "degenerate-null"
    if tag is CaseTag.TWO_CLIQUES:
        return DiameterNote.DISCONNECTED_TWO_CLIQUES, "diameter-two-cliques"
    if tag is CaseTag.EXCEPTIONAL_K_A_UNION_NULL:
        return DiameterNote.CLIQUE, "diameter-exceptional-clique"
    if not is_radical(pair):
        return DiameterNote.BOUND_LE_2, "diameter-le-2"
    return DiameterNote.BOUND_LE_4, "diameter-le-4"


# -- public surface -------------------------------------------------------


def predicted_isolated_count(pair: ModulePair) -> int:
    return _isolated_count(pair)[0]


def predicted_girth(pair: ModulePair) -> float:
    return _girth(pair)[0]


def predicted_is_forest(pair: ModulePair) -> bool:
    return _forest(pair)[0]


def predicted_is_tree(pair: ModulePair) -> bool:
    return _tree(pair)[0]


def predicted_is_star(pair: ModulePair) -> bool:
    # trees here are K1 or K2, both stars
    return _tree(pair)[0]


def predicted_max_degree(pair: ModulePair) -> int:
    return _max_degree(pair)[0]


def predicted_independence_number(pair: ModulePair) -> int:
    return _independence(pair)[0]


def predicted_domination_number(pair: ModulePair) -> int:
    return _domination(pair)[0]


def predicted_universal_vertex(pair: ModulePair) -> bool:
    return _universal(pair)[0]


def predicted_is_complete(pair: ModulePair) -> bool:
    return _complete(pair)[0]


def predicted_no_isolated(pair: ModulePair) -> bool:
    return _no_isolated(pair)[0]


def predicted_chromatic_index(pair: ModulePair) -> tuple[int, ChromaticClass]:
    return _chromatic(pair)[0]


def chromatic_index_value(delta: int, cls: ChromaticClass) -> int:
    return delta + (cls is ChromaticClass.CLASS2)


def predicted_eulerian_nonisolated(pair: ModulePair) -> bool:
    return _eulerian(pair)[0]


def predicted_diameter_note(pair: ModulePair) -> DiameterNote:
    return _diameter(pair)[0]


@dataclass(frozen=True)
class PredictedInvariants:
    case: CaseTag
    vertex_count: int
    is_null: bool
    isolated_count: int
    girth: float
    max_degree: int
    independence_number: int
    domination_number: int
    is_forest: bool
    is_tree: bool
    is_star: bool
    is_complete: bool
    has_universal_vertex: bool
    no_isolated: bool
    chromatic_index: int
    chromatic_class: ChromaticClass
    eulerian_nonisolated: bool
    diameter_note: DiameterNote

    @property
    def degenerate(self) -> bool:
        """True when the closed forms exclude this graph (null or empty)."""
        return self.is_null

    def as_dict(self) -> dict:
        return asdict(self)


def predict(pair: ModulePair) -> PredictedInvariants:
    (delta, cls), _ = _chromatic(pair)
    return PredictedInvariants(
        case=classify(pair),
        vertex_count=predicted_vertex_count(pair),
        is_null=predicted_is_null(pair),
        isolated_count=predicted_isolated_count(pair),
        girth=predicted_girth(pair),
        max_degree=predicted_max_degree(pair),
        independence_number=predicted_independence_number(pair),
        domination_number=predicted_domination_number(pair),
        is_forest=predicted_is_forest(pair),
        is_tree=predicted_is_tree(pair),
        is_star=predicted_is_star(pair),
        is_complete=predicted_is_complete(pair),
        has_universal_vertex=predicted_universal_vertex(pair),
        no_isolated=predicted_no_isolated(pair),
        chromatic_index=chromatic_index_value(delta, cls),
        chromatic_class=cls,
        eulerian_nonisolated=predicted_eulerian_nonisolated(pair),
        diameter_note=predicted_diameter_note(pair),
    )


def explain(pair: ModulePair) -> list[tuple[str, object, str]]:
    """``(invariant, value, clause id)`` triples, one per predicted invariant."""
    tag = classify(pair)
    null = _null_clause(pair)
    (delta, cls), chi_clause = _chromatic(pair)
    rows: list[tuple[str, object, str]] = [
        ("case", tag.value, "case-split"),
        ("vertex_count", predicted_vertex_count(pair), "vertex-count-remark"),
        ("is_null", null is not None, null or "null-corollary"),
    ]
    if tag is CaseTag.EXCEPTIONAL_K_A_UNION_NULL:
        rows.append(("structure", f"K_{max(pair.alpha)} u co-K_{max(pair.alpha)}",
                     "isolated-lemma-exceptional"))
    if tag is CaseTag.TWO_CLIQUES:
        rows.append(("structure", f"K_{pair.alpha[0]} u K_{pair.alpha[1]} plus isolated",
                     "diameter-two-cliques"))
    for name, fn in (
        ("isolated_count", _isolated_count),
        ("girth", _girth),
        ("is_forest", _forest),
        ("is_tree", _tree),
        ("max_degree", _max_degree),
        ("independence_number", _independence),
        ("domination_number", _domination),
        ("has_universal_vertex", _universal),
        ("is_complete", _complete),
        ("no_isolated", _no_isolated),
    ):
        value, clause = fn(pair)
        rows.append((name, value, clause))
    rows.append(("chromatic_index", f"{chromatic_index_value(delta, cls)} ({cls.value})",
                 chi_clause))
    rows.append(("eulerian_nonisolated", *_eulerian(pair)))
    note, clause = _diameter(pair)
    rows.append(("diameter_note", note.value, clause))
    return rows
