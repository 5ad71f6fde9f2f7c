import itertools
import math

import pytest
from hypothesis import assume, strategies as st

from idealgraph.arithmetic import DEFAULT_MAX_INT, make_module_pair


def int_divisors(m):
    small = [d for d in range(1, math.isqrt(m) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def brute_graph(m, n):
    """G_n(Z_m) on integer labels, straight from n not dividing lcm(d1, d2).

    Returns (vertex labels ascending, set of frozenset edges).
    """
    verts = [d for d in int_divisors(m) if 1 < d < m]
    edges = {
        frozenset((a, b))
        for a, b in itertools.combinations(verts, 2)
        if math.lcm(a, b) % n
    }
    return verts, edges


def brute_degree(m, n, d):
    verts, edges = brute_graph(m, n)
    return sum(1 for e in edges if d in e)


def brute_independence(verts, edges):
    for k in range(len(verts), -1, -1):
        for sub in itertools.combinations(verts, k):
            if not any(frozenset(p) in edges for p in itertools.combinations(sub, 2)):
                return k


def brute_domination(verts, edges):
    nbrs = {v: {v} | {u for e in edges if v in e for u in e} for v in verts}
    for k in range(len(verts) + 1):
        for sub in itertools.combinations(verts, k):
            covered = set().union(*(nbrs[v] for v in sub)) if sub else set()
            if covered >= set(verts):
                return k


def brute_chromatic_index(edges):
    """Least k with a proper k-edge-colouring, by trying every assignment."""
    edges = [tuple(e) for e in edges]
    if not edges:
        return 0
    for k in itertools.count(1):
        for colours in itertools.product(range(k), repeat=len(edges)):
            seen = set()
            ok = True
            for (u, v), c in zip(edges, colours):
                if (u, c) in seen or (v, c) in seen:
                    ok = False
                    break
                seen.add((u, c))
                seen.add((v, c))
            if ok:
                return k


def all_pairs(m_max, m_min=2):
    for m in range(m_min, m_max + 1):
        for n in int_divisors(m):
            if n > 1:
                yield m, n


@st.composite
def module_pairs(draw, max_primes=4, max_exp=4):
    """Random (m, n) with n | m, kept small enough for brute force."""
    primes = draw(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), min_size=1,
                           max_size=max_primes, unique=True))
    alpha = [draw(st.integers(1, max_exp)) for _ in primes]
    beta = [draw(st.integers(0, a)) for a in alpha]
    if not any(beta):
        beta[0] = 1
    m = math.prod(p**a for p, a in zip(primes, alpha))
    n = math.prod(p**b for p, b in zip(primes, beta))
    assume(m <= DEFAULT_MAX_INT)  # 7^3 11^3 13^3 is just past the factorization cap
    return make_module_pair(m, n)


# -- acceptance reporting --------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _ACCEPTANCE.append((marker.args[0], marker.args[1], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, text, passed in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {num:>2}: {text}")
