"""Brute-force invariants computed directly on a built graph.

Nothing in this module consults the closed forms; every value comes from
traversals or exhaustive search over ``IdealGraph.rows`` bitmasks. Exponential
searches are bounded by an ``OracleBudget`` and report SKIPPED (instance above
cap) or TIMEOUT (work limit hit) instead of guessing.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any

from .formulas import INFINITY, ChromaticClass
from .graph_build import IdealGraph, induced_nonisolated, isolated_set


class Status(str, Enum):
    EXACT = "EXACT"
    SKIPPED = "SKIPPED"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class OracleBudget:
    max_vertices_exact_independence: int = 26
    max_vertices_exact_domination: int = 24
    max_edges_edge_coloring: int = 48
    timeout_per_invariant: float = 10.0
    # search nodes per invariant; the only limit when deterministic
    max_nodes: int = 2_000_000
    deterministic: bool = False

    def __post_init__(self):
        for name in (
            "max_vertices_exact_independence",
            "max_vertices_exact_domination",
            "max_edges_edge_coloring",
            "max_nodes",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.timeout_per_invariant <= 0:
            raise ValueError("timeout_per_invariant must be positive")


@dataclass(frozen=True)
class OracleResult:
    value: Any
    status: Status
    nodes: int = 0
    witness: Any = None

    def __post_init__(self):
        if (self.value is not None) != (self.status is Status.EXACT):
            raise ValueError("value must be present iff status is EXACT")


class _OutOfBudget(Exception):
    pass


class _Counter:
    """Node counter with an optional wall-clock guard checked every 1024 ticks."""

    def __init__(self, budget: OracleBudget):
        self.nodes = 0
        self.limit = budget.max_nodes
        self.deadline = (
            None if budget.deterministic
            else time.monotonic() + budget.timeout_per_invariant
        )

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise _OutOfBudget
        if self.deadline is not None and not self.nodes & 1023:
            if time.monotonic() > self.deadline:
                raise _OutOfBudget


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- polynomial invariants -------------------------------------------------


def oracle_degrees(graph: IdealGraph) -> list[int]:
    return [row.bit_count() for row in graph.rows]


def oracle_max_degree(graph: IdealGraph) -> int:
    return max(oracle_degrees(graph), default=0)


def oracle_isolated_count(graph: IdealGraph) -> int:
    return sum(1 for row in graph.rows if not row)


def _bfs(rows, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in _bits(rows[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def oracle_girth(graph: IdealGraph) -> float:
    """Shortest cycle length via a BFS from every vertex; INFINITY if acyclic."""
    rows = graph.rows
    best = INFINITY
    for root in range(len(rows)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in _bits(rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def components(graph: IdealGraph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in range(graph.order):
        if v not in seen:
            comp = sorted(_bfs(graph.rows, v))
            seen.update(comp)
            out.append(comp)
    return out


def oracle_components_and_diameter(graph: IdealGraph) -> tuple[int, float]:
    """(component count, diameter); the diameter is INFINITY when disconnected."""
    comps = components(graph)
    if len(comps) > 1:
        return len(comps), INFINITY
    diam = 0
    for v in range(graph.order):
        diam = max(diam, max(_bfs(graph.rows, v).values()))
    return len(comps), diam


def oracle_is_null(graph: IdealGraph) -> bool:
    return not any(graph.rows)


def oracle_is_forest(graph: IdealGraph) -> bool:
    return graph.edge_count == graph.order - len(components(graph))


def oracle_is_tree(graph: IdealGraph) -> bool:
    return graph.order >= 1 and len(components(graph)) == 1 and (
        graph.edge_count == graph.order - 1
    )


def oracle_is_star(graph: IdealGraph) -> bool:
    k = graph.order
    if k == 0 or graph.edge_count != k - 1:
        return False
    return k == 1 or oracle_max_degree(graph) == k - 1


def oracle_is_complete(graph: IdealGraph) -> bool:
    k = graph.order
    return graph.edge_count == k * (k - 1) // 2


def oracle_has_universal_vertex(graph: IdealGraph) -> bool:
    k = graph.order
    return any(d == k - 1 for d in oracle_degrees(graph))


def oracle_no_isolated(graph: IdealGraph) -> bool:
    return all(graph.rows)


def _is_clique(rows, comp: list[int]) -> bool:
    k = len(comp)
    return all(rows[v].bit_count() == k - 1 for v in comp)


def oracle_matches_two_cliques(graph: IdealGraph, a: int, b: int) -> bool:
    """G minus its isolated vertices is exactly K_a u K_b."""
    core = induced_nonisolated(graph)
    comps = components(core)
    if sorted(len(c) for c in comps) != sorted((a, b)):
        return False
    return all(_is_clique(core.rows, c) for c in comps)


def oracle_matches_clique_union_null(graph: IdealGraph, a: int, b: int) -> bool:
    """G is exactly K_a together with b isolated vertices."""
    iso = isolated_set(graph)
    if len(iso) != b or graph.order != a + b:
        return False
    core = induced_nonisolated(graph)
    return len(components(core)) <= 1 and oracle_is_complete(core)


def oracle_eulerian_nonisolated(graph: IdealGraph) -> bool:
    """Connected with all degrees even, on G minus its isolated vertices.

    An empty or single-vertex remainder counts as Eulerian (vacuous tour).
    """
    core = induced_nonisolated(graph)
    if core.order <= 1:
        return True
    if len(components(core)) != 1:
        return False
    return all(d % 2 == 0 for d in oracle_degrees(core))


# -- exact exponential searches --------------------------------------------


def _clique_cover_bound(rows, cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand``: bounds any
    independent subset of ``cand`` from above."""
    cliques = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        common = rows[v] & rest
        while common:
            u_bit = common & -common
            clique |= u_bit
            common &= rows[u_bit.bit_length() - 1]
        rest &= ~clique
        cliques += 1
    return cliques


def _max_independent(rows, counter: _Counter) -> tuple[int, int]:
    best_size, best_set = 0, 0

    def expand(cand: int, size: int, chosen: int):
        nonlocal best_size, best_set
        counter.tick()
        # vertices of degree <= 1 in cand always belong to some maximum set
        forced = True
        while forced and cand:
            forced = False
            for v in _bits(cand):
                if (rows[v] & cand).bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(rows[v] | 1 << v)
                    forced = True
                    break
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(rows, cand) <= best_size:
            return
        v = max(_bits(cand), key=lambda u: ((rows[u] & cand).bit_count(), -u))
        expand(cand & ~(rows[v] | 1 << v), size + 1, chosen | 1 << v)
        expand(cand & ~(1 << v), size, chosen)

    expand((1 << len(rows)) - 1, 0, 0)
    return best_size, best_set


def oracle_independence(graph: IdealGraph, budget: OracleBudget = OracleBudget()) -> OracleResult:
    """Exact independence number: isolated vertices plus an exact maximum
    independent set of the remainder by branch-and-bound."""
    if graph.order > budget.max_vertices_exact_independence:
        return OracleResult(None, Status.SKIPPED)
    core = induced_nonisolated(graph)
    iso = graph.order - core.order
    counter = _Counter(budget)
    try:
        size, chosen = _max_independent(core.rows, counter)
    except _OutOfBudget:
        return OracleResult(None, Status.TIMEOUT, counter.nodes)
    witness = sorted(isolated_set(graph)) + [core.origin[v] for v in _bits(chosen)]
    return OracleResult(iso + size, Status.EXACT, counter.nodes, sorted(witness))


def _min_dominating(rows, counter: _Counter) -> tuple[int, list[int]]:
    k_all = len(rows)
    closed = [rows[v] | 1 << v for v in range(k_all)]
    full = (1 << k_all) - 1

    def search(undom: int, k: int, picked: list[int]) -> list[int] | None:
        counter.tick()
        if not undom:
            return picked
        if k == 0:
            return None
        gains = [(closed[w] & undom).bit_count() for w in range(k_all)]
        if k * max(gains) < undom.bit_count():
            return None
        # branch on the undominated vertex with the fewest possible dominators
        u = min(_bits(undom), key=lambda x: (closed[x].bit_count(), x))
        options = sorted(_bits(closed[u]), key=lambda w: (-gains[w], w))
        for w in options:
            found = search(undom & ~closed[w], k - 1, picked + [w])
            if found is not None:
                return found
        return None

    for k in range(k_all + 1):
        found = search(full, k, [])
        if found is not None:
            return k, found
    raise AssertionError("the whole vertex set always dominates")


def oracle_domination(graph: IdealGraph, budget: OracleBudget = OracleBudget()) -> OracleResult:
    """Exact domination number: every isolated vertex is forced into the set;
    the remainder is solved by iterative deepening on the set size, branching
    on the closed neighbourhood of an undominated vertex."""
    if graph.order > budget.max_vertices_exact_domination:
        return OracleResult(None, Status.SKIPPED)
    core = induced_nonisolated(graph)
    counter = _Counter(budget)
    try:
        k, picked = _min_dominating(core.rows, counter)
    except _OutOfBudget:
        return OracleResult(None, Status.TIMEOUT, counter.nodes)
    witness = sorted(list(isolated_set(graph)) + [core.origin[v] for v in picked])
    return OracleResult(graph.order - core.order + k, Status.EXACT, counter.nodes, witness)


def _edge_color(n_vertices: int, edges: list[tuple[int, int]], k: int,
                counter: _Counter) -> dict[tuple[int, int], int] | None:
    """Backtracking search for a proper ``k``-edge-colouring.

    Branches on the edge with the fewest free colours, ties going to the edge
    whose endpoints carry the most uncoloured edges; colours are tried
    first-fit, and colours no edge uses yet are interchangeable so only the
    lowest is tried. Two cuts keep the search exhaustive but short:

    * every vertex needs as many distinct colours, free on some uncoloured
      edge at it, as it has uncoloured edges;
    * colour ``c`` can still go on at most ``floor(f_c / 2)`` edges, ``f_c``
      being the vertices touched by uncoloured edges that could take ``c``.
    """
    full = (1 << k) - 1
    used = [0] * n_vertices
    left = [0] * n_vertices
    for u, v in edges:
        left[u] += 1
        left[v] += 1
    colour: dict[int, int] = {}
    todo = set(range(len(edges)))

    def solve(ever_used: int) -> bool:
        counter.tick()
        if not todo:
            return True
        reach = [0] * n_vertices
        best_e, best_avail, best_key = -1, 0, None
        for e in todo:
            u, v = edges[e]
            avail = full & ~(used[u] | used[v])
            if not avail:
                return False
            reach[u] |= avail
            reach[v] |= avail
            key = (avail.bit_count(), -(left[u] + left[v]), e)
            if best_key is None or key < best_key:
                best_e, best_avail, best_key = e, avail, key
        for x in range(n_vertices):
            if left[x] and reach[x].bit_count() < left[x]:
                return False
        slots = 0
        for c in range(k):
            bit = 1 << c
            count = touched = 0
            for e in todo:
                u, v = edges[e]
                if not (used[u] | used[v]) & bit:
                    count += 1
                    touched |= 1 << u | 1 << v
            slots += min(count, touched.bit_count() // 2)
        if slots < len(todo):
            return False
        u, v = edges[best_e]
        fresh = best_avail & ~ever_used
        tries = best_avail & ever_used
        if fresh:
            tries |= fresh & -fresh
        todo.discard(best_e)
        left[u] -= 1
        left[v] -= 1
        for c in _bits(tries):
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            colour[best_e] = c
            if solve(ever_used | bit):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            del colour[best_e]
        left[u] += 1
        left[v] += 1
        todo.add(best_e)
        return False

    if not solve(0):
        return None
    return {edges[e]: c for e, c in colour.items()}


def oracle_chromatic_index_class(graph: IdealGraph,
                                 budget: OracleBudget = OracleBudget()) -> OracleResult:
    """Class of G (CLASS1 iff a Delta-edge-colouring exists) by exhaustive search.

    On failure a (Delta+1)-colouring is searched for as a sanity check; the
    witness is the colouring that was found, as ``{(i, j): colour}``.
    """
    core = induced_nonisolated(graph)
    edges = core.edges()
    if not edges:
        return OracleResult(ChromaticClass.CLASS1, Status.EXACT, 0, {})
    if len(edges) > budget.max_edges_edge_coloring:
        return OracleResult(None, Status.SKIPPED)
    delta = oracle_max_degree(core)
    counter = _Counter(budget)
    back = core.origin
    try:
        found = _edge_color(core.order, edges, delta, counter)
        cls = ChromaticClass.CLASS1
        if found is None:
            cls = ChromaticClass.CLASS2
            found = _edge_color(core.order, edges, delta + 1, counter)
            if found is None:
                raise AssertionError(
                    f"no {delta + 1}-edge-colouring of G_{graph.pair.n}(Z_{graph.pair.m})"
                )
    except _OutOfBudget:
        return OracleResult(None, Status.TIMEOUT, counter.nodes)
    witness = {(back[i], back[j]): c for (i, j), c in found.items()}
    return OracleResult(cls, Status.EXACT, counter.nodes, witness)


def oracle_chromatic_index(graph: IdealGraph, budget: OracleBudget = OracleBudget()) -> OracleResult:
    res = oracle_chromatic_index_class(graph, budget)
    if res.status is not Status.EXACT:
        return res
    chi = oracle_max_degree(graph) + (res.value is ChromaticClass.CLASS2)
    return OracleResult(chi, Status.EXACT, res.nodes, res.witness)


def proper_edge_colouring(edges_to_colour: dict[tuple[int, int], int]) -> bool:
    """Whether no two edges sharing an endpoint carry the same colour."""
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for (u, v), c in edges_to_colour.items():
        for x in (u, v):
            if (x, c) in seen:
                return False
            seen[(x, c)] = (u, v)
    return True


def n_colours(colouring: dict) -> int:
    return len(set(colouring.values())) if colouring else 0

