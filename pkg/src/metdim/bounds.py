"""Closed-form dimension bounds, evaluated in exact integer arithmetic.

Every log-ratio bound ``ceil(log A / log B)`` is computed as the least ``k``
with ``B**k >= A``, so no floating point is involved.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph, all_pairs_distances


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict
    bound: int

    def to_dict(self) -> dict:
        return asdict(self)


def _least_power(base: int, target: int) -> int:
    """Least k >= 0 with base**k >= target."""
    if base < 2 and target > 1:
        raise ValueError(f"base {base} never reaches {target}")
    k, acc = 0, 1
    while acc < target:
        acc *= base
        k += 1
    return k


def order_bound_dim(n: int, D: int) -> BoundReport:
    """Least k with k + D^k >= n (order of a graph of dimension k and diameter D)."""
    if n < 1 or D < 0:
        raise ValueError("need n >= 1, D >= 0")
    k = 1
    while k + D**k < n:
        k += 1
    return BoundReport("order_bound_dim", {"n": n, "D": D}, k)


def edge_bound_edim(m: int, D: int) -> BoundReport:
    """Least k >= 1 with (D+1)^k >= m."""
    if m < 0 or D < 0:
        raise ValueError("need m >= 0, D >= 0")
    k = max(1, _least_power(D + 1, m)) if m > 1 else 1
    return BoundReport("edge_bound_edim", {"m": m, "D": D}, k)


def grid_dim_lower_bound(n: int, d: int) -> BoundReport:
    """ceil(d log n / log(d(n-1)+1)), i.e. least k with (d(n-1)+1)^k >= n^d."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2, d >= 1")
    k = _least_power(d * (n - 1) + 1, n**d)
    return BoundReport("grid_dim_lower_bound", {"n": n, "d": d}, max(1, k))


def grid_edim_lower_bound(n: int, d: int) -> BoundReport:
    """ceil(log(d (n-1) n^(d-1)) / log(d(n-1)+1)), floored at 1."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2, d >= 1")
    k = _least_power(d * (n - 1) + 1, d * (n - 1) * n ** (d - 1))
    return BoundReport("grid_edim_lower_bound", {"n": n, "d": d}, max(1, k))


def dominant_vertex_edim_bound(g: Graph, dt=None) -> BoundReport:
    """Max of n-1-x-2^x over vertices within distance 2 of everything, x = n-1-deg.

    0 when no vertex qualifies or every value is negative.
    """
    dt = dt or all_pairs_distances(g)
    ecc = dt.dist.max(axis=1)
    best, best_v = 0, None
    for v in range(g.n):
        if ecc[v] <= 2:
            x = g.n - 1 - g.degree(v)
            b = g.n - 1 - x - 2**x
            if b > best:
                best, best_v = b, v
    x = None if best_v is None else g.n - 1 - g.degree(best_v)
    return BoundReport("dominant_vertex_edim_bound", {"n": g.n, "vertex": best_v, "x": x}, best)


def hypercube_dim_order_bound(k: int) -> BoundReport:
    """Largest n with 2^n <= (n+1)^k.

    n*ln2 - k*ln(n+1) is convex and zero at n = 0, so the solutions form an
    initial interval and a forward scan stops at its end.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    n = 0
    while 2 ** (n + 1) <= (n + 2) ** k:
        n += 1
    return BoundReport("hypercube_dim_order_bound", {"k": k}, n)
