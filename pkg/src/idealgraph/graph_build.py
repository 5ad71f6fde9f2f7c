"""Concrete construction of G_n(Z_m) and its isolated-vertex split.

Vertices are the proper nonzero ideals dZ_m, i.e. divisors ``1 < d < m``, in
lexicographic exponent order. Adjacency is kept as one bitmask per vertex.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .arithmetic import (
    DivisorVector,
    ModulePair,
    d_support,
    enumerate_divisors,
    lcm_vector,
    n_divides,
)

DEFAULT_MAX_VERTICES = 4096


class GraphTooLarge(RuntimeError):
    """The vertex count of the requested graph exceeds the configured cap."""


def adjacent(pair: ModulePair, d1: DivisorVector, d2: DivisorVector) -> bool:
    """dZ_m -- d'Z_m iff the ideals are distinct and n does not divide lcm(d, d')."""
    return d1.r != d2.r and not n_divides(pair, lcm_vector(d1, d2))


@dataclass(frozen=True)
class IdealGraph:
    """Simple undirected graph on ideals.

    ``rows[i]`` has bit ``j`` set iff vertices ``i`` and ``j`` are adjacent.
    ``origin[i]`` is the index of vertex ``i`` in the full graph it was cut
    from (the identity for a freshly built graph).
    """

    pair: ModulePair
    vertices: tuple[DivisorVector, ...]
    rows: tuple[int, ...]
    origin: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def labels(self) -> list[int]:
        return [v.value for v in self.vertices]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def adjacency(self) -> list[list[bool]]:
        k = self.order
        return [[bool(row >> j & 1) for j in range(k)] for row in self.rows]

    def neighbors(self, i: int) -> list[int]:
        row, out, j = self.rows[i], [], 0
        while row:
            if row & 1:
                out.append(j)
            row >>= 1
            j += 1
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in self.neighbors(i) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def to_json_dict(self) -> dict:
        m = self.pair.m
        return {
            "m": m,
            "n": self.pair.n,
            "vertices": [{"d": v.value, "exponents": list(v.r)} for v in self.vertices],
            "edges": [[i, j] for i, j in self.edges()],
            "isolated": [i for i, row in enumerate(self.rows) if not row],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_dot(self) -> str:
        m, n = self.pair.m, self.pair.n
        lines = [f'graph "G_{n}(Z_{m})" {{']
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{v.value}Z_{m}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(pair: ModulePair, max_vertices: int = DEFAULT_MAX_VERTICES) -> IdealGraph:
    count = math.prod(a + 1 for a in pair.alpha) - 2
    if count > max_vertices:
        raise GraphTooLarge(
            f"G_{pair.n}(Z_{pair.m}) has {count} vertices, cap is {max_vertices}"
        )
    divisors = enumerate_divisors(pair)
    # drop d = 1 (first) and d = m (last) of the lexicographic order
    vertices = tuple(divisors[1:-1]) if len(divisors) > 2 else ()
    # u -- v iff D_u and D_v intersect, which is the lcm criterion restated
    masks = []
    for v in vertices:
        mask = 0
        for i in d_support(pair, v):
            mask |= 1 << i
        masks.append(mask)
    rows = []
    for i, mi in enumerate(masks):
        row = 0
        if mi:
            for j, mj in enumerate(masks):
                if j != i and mi & mj:
                    row |= 1 << j
        rows.append(row)
    return IdealGraph(pair, vertices, tuple(rows), tuple(range(len(vertices))))


def isolated_set(graph: IdealGraph) -> frozenset[int]:
    """Indices of the zero-degree vertices."""
    return frozenset(i for i, row in enumerate(graph.rows) if not row)


def induced_subgraph(graph: IdealGraph, keep) -> IdealGraph:
    keep = sorted(keep)
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for j in graph.neighbors(old):
            if j in index:
                row |= 1 << index[j]
        rows.append(row)
    return IdealGraph(
        graph.pair,
        tuple(graph.vertices[i] for i in keep),
        tuple(rows),
        tuple(graph.origin[i] for i in keep),
    )


def induced_nonisolated(graph: IdealGraph) -> IdealGraph:
    """G minus its isolated vertices; ``origin`` keeps the original indices."""
    iso = isolated_set(graph)
    return induced_subgraph(graph, (i for i in range(graph.order) if i not in iso))
