"""Brute-force reference implementations.

Deliberately naive and independent of the fast paths: pure-Python BFS,
exhaustive subset enumeration, O(t^4) collision scans and floating-point
evaluation of the bound formulas. Used by the test-suite and by the
experiment runner to cross-check the optimised code.
"""

from __future__ import annotations

import itertools
import math

from .graph import Graph, bfs_distances


def distance_rows(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def _items(g: Graph, rows, kind: str):
    if kind == "vertex":
        return [[rows[s][v] for s in range(g.n)] for v in range(g.n)]
    return [[min(rows[s][u], rows[s][v]) for s in range(g.n)] for u, v in g.edges]


def resolves(g: Graph, subset, kind: str = "vertex", rows=None) -> bool:
    rows = rows or distance_rows(g)
    items = _items(g, rows, kind)
    seen = set()
    for vec in items:
        key = tuple(vec[s] for s in subset)
        if key in seen:
            return False
        seen.add(key)
    return True


def naive_dimension(g: Graph, kind: str = "vertex") -> tuple[int, tuple[int, ...]]:
    """Smallest resolving set size and the lexicographically first one of that size."""
    rows = distance_rows(g)
    items = _items(g, rows, kind)
    for k in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            keys = {tuple(vec[s] for s in subset) for vec in items}
            if len(keys) == len(items):
                return k, subset
    raise AssertionError("no resolving set found")


def sidon_brute_force(members) -> bool:
    """True iff no two distinct unordered pairs (repeats allowed) share a digitwise sum."""
    members = list(members)
    t = len(members)
    for a, b, c, d in itertools.product(range(t), repeat=4):
        if a > b or c > d or (a, b) == (c, d):
            continue
        s1 = [int(x) + int(y) for x, y in zip(members[a], members[b])]
        s2 = [int(x) + int(y) for x, y in zip(members[c], members[d])]
        if s1 == s2:
            return False
    return True


# -- bounds by direct evaluation ------------------------------------------------


def order_bound_direct(n: int, D: int) -> int:
    k = 1
    while k + D**k < n:
        k += 1
    return k


def edge_bound_direct(m: int, D: int) -> int:
    k = 1
    while (D + 1) ** k < m:
        k += 1
    return k


def grid_dim_lb_float(n: int, d: int) -> int:
    return max(1, math.ceil(d * math.log(n) / math.log(d * (n - 1) + 1) - 1e-12))


def grid_edim_lb_float(n: int, d: int) -> int:
    num = math.log(d) + math.log(n - 1) + (d - 1) * math.log(n)
    return max(1, math.ceil(num / math.log(d * (n - 1) + 1) - 1e-12))


def hypercube_bound_direct(k: int) -> int:
    best = 0
    for n in range(0, 64 * k + 64):
        if 2**n <= (n + 1) ** k:
            best = n
    return best


def dominant_vertex_bound_direct(g: Graph) -> int:
    rows = distance_rows(g)
    best = 0
    for v in range(g.n):
        if max(rows[v]) <= 2:
            x = g.n - 1 - g.degree(v)
            best = max(best, g.n - 1 - x - 2**x)
    return best
