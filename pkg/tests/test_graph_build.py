import json
import math

import pytest
from hypothesis import given, settings

from idealgraph.arithmetic import enumerate_divisors, make_module_pair
from idealgraph.graph_build import (
    GraphTooLarge,
    adjacent,
    build_graph,
    induced_nonisolated,
    isolated_set,
)

from conftest import all_pairs, brute_graph, int_divisors, module_pairs


def edge_labels(g):
    return {frozenset((g.vertices[i].value, g.vertices[j].value)) for i, j in g.edges()}


def E(*pairs):
    return {frozenset(p) for p in pairs}


@pytest.mark.parametrize("n, expected", [
    (12, E((2, 3), (2, 4), (2, 6), (3, 6))),
    (2, set()),
    (3, E((2, 4))),
    (4, E((2, 3), (2, 6), (3, 6))),
])
def test_golden_graphs_m12(n, expected):
    g = build_graph(make_module_pair(12, n))
    assert sorted(g.labels) == [2, 3, 4, 6]
    assert edge_labels(g) == expected


def test_adjacent_examples():
    p12 = make_module_pair(12, 12)
    assert adjacent(p12, p12.divisor_of(2), p12.divisor_of(3))
    p3 = make_module_pair(12, 3)
    assert adjacent(p3, p3.divisor_of(2), p3.divisor_of(4))
    assert not adjacent(p3, p3.divisor_of(2), p3.divisor_of(3))
    for d in enumerate_divisors(p12)[1:-1]:
        assert not adjacent(p12, d, d)


def test_build_matches_adjacent_and_integer_criterion():
    for m, n in all_pairs(400):
        pair = make_module_pair(m, n)
        g = build_graph(pair)
        verts, edges = brute_graph(m, n)
        assert sorted(g.labels) == verts
        assert edge_labels(g) == edges
        for i, u in enumerate(g.vertices):
            for j, v in enumerate(g.vertices):
                assert g.has_edge(i, j) == adjacent(pair, u, v)


def test_structure_exhaustive():
    """Vertex count, symmetry, irreflexivity, n | d isolated, subgraph of G(Z_m),
    and monotonicity along the divisor chain of n."""
    for m in range(2, 2001):
        full = build_graph(make_module_pair(m, m))
        full_edges = set(full.edges())
        per_n = {}
        for n in int_divisors(m)[1:]:
            pair = make_module_pair(m, n)
            g = build_graph(pair)
            assert g.order == math.prod(a + 1 for a in pair.alpha) - 2
            for i, row in enumerate(g.rows):
                assert not row >> i & 1
                for j in g.neighbors(i):
                    assert g.rows[j] >> i & 1
                if g.vertices[i].value % n == 0:
                    assert not row
            edges = set(g.edges())
            assert edges <= full_edges
            per_n[n] = edges
        for n1 in per_n:
            for n2 in per_n:
                if n2 % n1 == 0:
                    assert per_n[n1] <= per_n[n2]


def test_isolated_set_examples():
    g3 = build_graph(make_module_pair(12, 3))
    assert {g3.vertices[i].value for i in isolated_set(g3)} == {3, 6}
    g12 = build_graph(make_module_pair(12, 12))
    assert isolated_set(g12) == frozenset()


def test_isolated_set_exceptional_12_6():
    verts, edges = brute_graph(12, 6)
    touched = {v for e in edges for v in e}
    expected = {v for v in verts if v not in touched}
    g = build_graph(make_module_pair(12, 6))
    assert {g.vertices[i].value for i in isolated_set(g)} == expected == {3, 6}


def test_induced_nonisolated():
    g = build_graph(make_module_pair(12, 4))
    core = induced_nonisolated(g)
    assert sorted(core.labels) == [2, 3, 6]
    assert core.edge_count == 3
    assert [g.vertices[o] for o in core.origin] == list(core.vertices)

    assert induced_nonisolated(build_graph(make_module_pair(12, 2))).order == 0

    verts, edges = brute_graph(12, 6)
    core = induced_nonisolated(build_graph(make_module_pair(12, 6)))
    assert edge_labels(core) == edges == E((2, 4))


@settings(max_examples=60, deadline=None)
@given(module_pairs(max_primes=3, max_exp=3))
def test_random_pairs_match_integer_graph(pair):
    g = build_graph(pair)
    verts, edges = brute_graph(pair.m, pair.n)
    assert sorted(g.labels) == verts
    assert edge_labels(g) == edges


def test_vertex_cap_refuses():
    with pytest.raises(GraphTooLarge):
        build_graph(make_module_pair(720720, 720720), max_vertices=100)


def test_json_export():
    g = build_graph(make_module_pair(12, 3))
    doc = json.loads(g.to_json())
    assert list(doc) == ["m", "n", "vertices", "edges", "isolated"]
    assert [v["d"] for v in doc["vertices"]] == [3, 2, 6, 4]
    assert doc["vertices"][0]["exponents"] == [0, 1]
    labels = [v["d"] for v in doc["vertices"]]
    assert [{labels[i], labels[j]} for i, j in doc["edges"]] == [{2, 4}]
    assert sorted(labels[i] for i in doc["isolated"]) == [3, 6]


def test_dot_export():
    dot = build_graph(make_module_pair(12, 12)).to_dot()
    assert dot.count("[label=") == 4
    assert dot.count(" -- ") == 4
    assert '"4Z_12"' in dot
    assert dot == build_graph(make_module_pair(12, 12)).to_dot()


def test_empty_and_single_vertex_graphs():
    assert build_graph(make_module_pair(7, 7)).order == 0
    g = build_graph(make_module_pair(9, 9))
    assert g.labels == [3] and g.edge_count == 0
