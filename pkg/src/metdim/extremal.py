"""Graph invariants (degeneracy, colouring, cliques, degrees) and the claim checkers built on them."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph, GraphError, iter_bits, all_pairs_distances
from .solver import is_resolving

EXACT_CAP = 20


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Core-decomposition degeneracy and the elimination order that witnesses it.

    Repeatedly removes a minimum-degree vertex (least id on ties); the value
    is the largest degree seen at removal time.
    """
    deg = g.degrees()
    alive = (1 << g.n) - 1
    order, best = [], 0
    for _ in range(g.n):
        v = min((d, u) for u, d in enumerate(deg) if alive >> u & 1)[1]
        best = max(best, deg[v])
        order.append(v)
        alive &= ~(1 << v)
        for w in iter_bits(g.adj[v] & alive):
            deg[w] -= 1
    return best, order


def parity_coloring(g: Graph) -> list[tuple[int, ...]]:
    """Colour each vertex by its lattice label mod 2; raises if the colouring is improper."""
    if g.labels is None:
        raise GraphError("parity colouring needs lattice labels")
    if len(set(g.labels)) != g.n:
        raise GraphError("labels are not injective")
    colors = [tuple(c % 2 for c in p) for p in g.labels]
    for u, v in g.edges:
        if colors[u] == colors[v]:
            raise AssertionError(f"parity colouring clashes on edge ({u}, {v})")
    return colors


def is_proper(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def clique_number_exact(g: Graph, cap: int = EXACT_CAP) -> int:
    if g.n > cap:
        raise ValueError(f"n={g.n} above exact cap {cap}")
    best = 0

    def expand(size, cand, excl):
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: bin(cand & g.adj[u]).count("1"))
        for v in list(iter_bits(cand & ~g.adj[pivot])):
            expand(size + 1, cand & g.adj[v], excl & g.adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return best


def _colorable(g: Graph, k: int) -> list[int] | None:
    color = [-1] * g.n

    def pick():
        # DSATUR: most distinct neighbour colours, then highest degree, then least id
        best, key = None, None
        for v in range(g.n):
            if color[v] < 0:
                sat = len({color[w] for w in iter_bits(g.adj[v]) if color[w] >= 0})
                cand = (sat, g.degree(v), -v)
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def go(used):
        v = pick()
        if v is None:
            return True
        taken = {color[w] for w in iter_bits(g.adj[v])}
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if go(max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return color if go(0) else None


def chromatic_number_exact(g: Graph, cap: int = EXACT_CAP) -> int:
    if g.n > cap:
        raise ValueError(f"n={g.n} above exact cap {cap}")
    k = max(1, clique_number_exact(g, cap))
    while _colorable(g, k) is None:
        k += 1
    return k


def landmark_degree_check(g: Graph, landmarks) -> bool:
    """Every landmark of a size-k resolving set has degree at most 3^(k-1)."""
    landmarks = list(landmarks)
    if not is_resolving(all_pairs_distances(g), landmarks):
        raise GraphError("landmark set is not resolving")
    limit = 3 ** (len(landmarks) - 1)
    return all(g.degree(s) <= limit for s in landmarks)


@dataclass(frozen=True)
class InvariantReport:
    max_degree: int
    min_degree: int
    degeneracy: int
    clique_number: int | None
    chromatic_number: int | None
    order: int
    size: int

    def to_dict(self) -> dict:
        return asdict(self)

    def consistent(self) -> bool:
        ok = self.degeneracy <= self.max_degree
        if self.order:
            ok &= self.degeneracy >= self.size // self.order
        if self.clique_number is not None and self.chromatic_number is not None:
            ok &= self.clique_number <= self.chromatic_number <= self.max_degree + 1
        return bool(ok)


def invariant_report(g: Graph, cap: int = EXACT_CAP) -> InvariantReport:
    """All invariants at once; exact colouring/clique fields are None above ``cap``."""
    degs = g.degrees()
    small = g.n <= cap
    return InvariantReport(
        max_degree=max(degs),
        min_degree=min(degs),
        degeneracy=degeneracy(g)[0],
        clique_number=clique_number_exact(g, cap) if small else None,
        chromatic_number=chromatic_number_exact(g, cap) if small else None,
        order=g.n,
        size=g.m,
    )
