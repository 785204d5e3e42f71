"""Graph families on the king-move lattice and the objects used inside the proofs.

``D_k`` is the graph on nonnegative integer k-vectors with an edge whenever two
points differ by at most one in every coordinate. Everything here is an
induced subgraph of a finite window of it, except the grids/hypercubes
(Cartesian products of paths) and the clique gadget.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, LatticePoint, all_pairs_distances, build_graph, linf


def lattice_graph(points, meta: dict | None = None) -> Graph:
    """Induced subgraph of D_k on ``points`` (kept in the given order)."""
    points = [tuple(int(c) for c in p) for p in points]
    if not points:
        raise GraphError("empty point set")
    index = {p: i for i, p in enumerate(points)}
    k = len(points[0])
    steps = [s for s in itertools.product((-1, 0, 1), repeat=k) if any(s)]
    edges = []
    for i, p in enumerate(points):
        for s in steps:
            j = index.get(tuple(a + b for a, b in zip(p, s)))
            if j is not None and j > i:
                edges.append((i, j))
    return build_graph(len(points), edges, points, meta)


def dk_window(k: int, lo, hi) -> Graph:
    """All integer points of the box ``lo..hi`` (inclusive) with D_k adjacency.

    ``lo``/``hi`` may be scalars, meaning the same range in every coordinate.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    lo = [lo] * k if np.isscalar(lo) else list(lo)
    hi = [hi] * k if np.isscalar(hi) else list(hi)
    if len(lo) != k or len(hi) != k:
        raise GraphError("box bounds must have k coordinates")
    if any(a > b for a, b in zip(lo, hi)) or min(lo) < 0:
        raise GraphError(f"empty or negative box {lo}..{hi}")
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return lattice_graph(itertools.product(*ranges))


def ck_corners(k: int, q: int) -> list[LatticePoint]:
    """The landmark points: coordinate i is 0, all others q."""
    return [tuple(0 if j == i else q for j in range(k)) for i in range(k)]


def in_cross_polytope(p, q: int) -> bool:
    """L1 ball of radius q around (q, ..., q); its negative-orthant facet is the simplex on the corners."""
    return min(p) >= 0 and sum(abs(c - q) for c in p) <= q


def ck_q(k: int, q: int) -> Graph:
    """Cross-polytope window C_k(q) centred at (q, ..., q).

    Every landmark corner ``v_i`` is a vertex of the polytope, and the
    distance vector of each point to v_1..v_k is the point itself.
    ``meta["landmarks"]`` lists v_1..v_k.
    """
    if k < 1 or q < 1:
        raise GraphError("need k >= 1 and q >= 1")
    box = range(0, 2 * q + 1)
    points = [p for p in itertools.product(box, repeat=k) if in_cross_polytope(p, q)]
    g = lattice_graph(points)
    landmarks = []
    for c in ck_corners(k, q):
        if c not in g.index:
            raise AssertionError(f"corner {c} missing from C_{k}({q})")
        landmarks.append(g.index[c])
    return g.with_labels(g.labels, {"family": "ck", "k": k, "q": q, "landmarks": landmarks})


def mk(k: int) -> Graph:
    """M_k: D_k induced on {1,2,3}^k plus the k points with one 0 and all other coordinates 2."""
    if k < 1:
        raise GraphError("k must be at least 1")
    core = list(itertools.product((1, 2, 3), repeat=k))
    extra = [tuple(0 if j == i else 2 for j in range(k)) for i in range(k)]
    g = lattice_graph(core + extra)
    hub = g.index[(2,) * k]
    return g.with_labels(g.labels, {"family": "mk", "k": k, "hub": hub,
                                    "landmarks": [g.index[p] for p in extra]})


def embed_in_dk(g: Graph, landmarks) -> Graph:
    """Copy of ``g`` labelled by distance vectors to ``landmarks``.

    Raises ``GraphError`` naming a colliding pair when the landmarks do not
    resolve ``g``.
    """
    landmarks = list(landmarks)
    dt = all_pairs_distances(g)
    if not dt.connected:
        raise GraphError("graph is not connected")
    vecs = [tuple(int(dt.dist[v, s]) for s in landmarks) for v in range(g.n)]
    seen: dict[tuple, int] = {}
    for v, vec in enumerate(vecs):
        if vec in seen:
            raise GraphError(f"landmarks do not resolve: vertices {seen[vec]} and {v} share {vec}")
        seen[vec] = v
    return g.with_labels(vecs, {**g.meta, "landmarks": landmarks})


def wheel_cycle(k: int) -> list[LatticePoint]:
    """Hamiltonian cycle of D_k on {0,1,2}^k minus the centre, built by induction on k.

    Returned as the cyclic order (the closing edge back to the first point is implicit).
    """
    if k < 2:
        raise GraphError("wheel cycle needs k >= 2")
    cyc = [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)]
    for _ in range(k - 2):
        ones = (1,) * len(cyc[0])
        nxt = [(0,) + a for a in cyc]
        nxt.append((0,) + ones)
        nxt.extend((1,) + a for a in reversed(cyc[1:]))
        nxt.extend((2,) + a for a in cyc)
        nxt.append((2,) + ones)
        nxt.append((1,) + cyc[0])
        cyc = nxt
    return cyc


def check_hamiltonian_cycle(cycle, k: int) -> list[str]:
    """Return a list of violated cycle invariants (empty when all hold)."""
    problems = []
    centre = (1,) * k
    expected = set(itertools.product((0, 1, 2), repeat=k)) - {centre}
    if len(cycle) != 3**k - 1 or set(cycle) != expected:
        problems.append("does not cover {0,1,2}^k minus the centre exactly once")
    for i, p in enumerate(cycle):
        q = cycle[(i + 1) % len(cycle)]
        if linf(p, q) != 1:
            problems.append(f"consecutive points {p} {q} not adjacent")
        if linf(p, centre) != 1:
            problems.append(f"{p} not adjacent to the centre")
    return problems


def wheel_host(k: int) -> Graph:
    """D_k on {0,1,2}^k: the wheel W_{3^k-1} with hub at the centre spans it."""
    g = dk_window(k, 0, 2)
    cyc = wheel_cycle(k) if k >= 2 else None
    meta = {"family": "wheel-host", "k": k, "hub": g.index[(1,) * k]}
    if cyc is not None:
        meta["cycle"] = [g.index[p] for p in cyc]
    return g.with_labels(g.labels, meta)


def knn_embedding(k: int) -> Graph:
    """D_k induced on {0,1}^k; ``meta["parts"]`` splits it by the first coordinate."""
    if k < 1:
        raise GraphError("k must be at least 1")
    g = lattice_graph(itertools.product((0, 1), repeat=k))
    parts = [[i for i, p in enumerate(g.labels) if p[0] == b] for b in (0, 1)]
    return g.with_labels(g.labels, {"family": "knn", "k": k, "parts": parts})


def contains_complete_bipartite(g: Graph, left, right) -> bool:
    return all(g.has_edge(u, v) for u in left for v in right)


def translate(g: Graph, shift) -> Graph:
    labels = [tuple(a + b for a, b in zip(p, shift)) for p in g.labels]
    return g.with_labels(labels)


def host_in_ck(h: Graph, q: int | None = None) -> tuple[Graph, list[int], int]:
    """Translate a lattice-labelled ``h`` into some C_k(q).

    Returns ``(C_k(q), ids of h's image in it, q)``; ``q`` grows until the
    translate centred at (q, ..., q) fits.
    """
    k = len(h.labels[0])
    lo = [min(p[i] for p in h.labels) for i in range(k)]
    hi = [max(p[i] for p in h.labels) for i in range(k)]
    q = q or 1
    while True:
        mid = [(a + b) // 2 for a, b in zip(lo, hi)]
        shifted = [tuple(c - m + q for c, m in zip(p, mid)) for p in h.labels]
        if all(in_cross_polytope(p, q) for p in shifted):
            host = ck_q(k, q)
            return host, [host.index[p] for p in shifted], q
        q += 1


def grid(n: int, d: int) -> Graph:
    """P_n^d: points of {0..n-1}^d, adjacent when they differ by 1 in exactly one coordinate."""
    if n < 2 or d < 1:
        raise GraphError("grid needs n >= 2 and d >= 1")
    points = list(itertools.product(range(n), repeat=d))
    index = {p: i for i, p in enumerate(points)}
    edges = []
    for i, p in enumerate(points):
        for axis in range(d):
            if p[axis] + 1 < n:
                q = p[:axis] + (p[axis] + 1,) + p[axis + 1:]
                edges.append((i, index[q]))
    return build_graph(len(points), edges, points, {"family": "grid", "n": n, "d": d})


def hypercube(n: int) -> Graph:
    if n < 1:
        raise GraphError("hypercube needs n >= 1")
    g = grid(2, n)
    return g.with_labels(g.labels, {"family": "hypercube", "n": n})


# -- Sidon sets and the clique gadget --------------------------------------------


def pair_sum(a: str, b: str) -> tuple[int, ...]:
    """Digitwise sum of two binary strings (entries 0..2, no carries)."""
    return tuple(int(x) + int(y) for x, y in zip(a, b))


def sidon_collisions(members) -> list[tuple[tuple[str, str], tuple[str, str]]]:
    """All pairs of distinct unordered pairs (repeats allowed) with equal digitwise sums.

    Each collision is ``((a, b), (c, d))`` with ``a <= b``, ``c <= d`` and
    ``(a, b) < (c, d)``; the list is sorted.
    """
    members = sorted(set(members))
    by_sum: dict[tuple, list[tuple[str, str]]] = {}
    for i, a in enumerate(members):
        for b in members[i:]:
            by_sum.setdefault(pair_sum(a, b), []).append((a, b))
    out = []
    for pairs in by_sum.values():
        out.extend(itertools.combinations(sorted(pairs), 2))
    return sorted(out)


def is_sidon(members) -> bool:
    return not sidon_collisions(members)


@dataclass(frozen=True)
class SidonSet:
    k: int
    members: tuple[str, ...]
    sampled: int = 0  # size before repair

    def __post_init__(self):
        if any(len(s) != self.k or set(s) - {"0", "1"} for s in self.members):
            raise GraphError(f"members must be binary strings of length {self.k}")
        if not is_sidon(self.members):
            raise GraphError("members have colliding pair sums")

    def to_list(self) -> list[str]:
        return list(self.members)


def default_sidon_target(k: int) -> int:
    return max(1, math.floor((8 / 3) ** (k / 3)))


def repair_sidon(members) -> list[str]:
    """Drop strings until no collision remains.

    Collisions are scanned in sorted order; for each one still fully present,
    its least string is removed.
    """
    alive = set(members)
    for (a, b), (c, d) in sidon_collisions(members):
        if {a, b, c, d} <= alive:
            alive.discard(min(a, b, c, d))
    # a removal can only destroy collisions, never create one
    assert is_sidon(alive)
    return sorted(alive)


def sidon_sample(k: int, t: int | None = None, seed: int = 0) -> SidonSet:
    """Sample ``t`` distinct length-k binary strings, then repair to a Sidon set."""
    if k < 2:
        raise GraphError("k must be at least 2")
    t = default_sidon_target(k) if t is None else t
    if not 1 <= t <= 2**k:
        raise GraphError(f"target size {t} outside 1..{2**k}")
    rng = np.random.default_rng(seed)
    picks = rng.choice(2**k, size=t, replace=False)
    strings = [format(int(x), f"0{k}b") for x in picks]
    return SidonSet(k, tuple(repair_sidon(strings)), sampled=t)


def clique_gadget(k: int, members) -> Graph:
    """Clique on ``members`` plus attachment vertices a_i / b_i.

    a_i joins every clique vertex whose string has digit i equal to 0, b_i
    those with digit 1. Attachments with no clique neighbour are omitted so
    the graph stays connected; ``meta["landmarks"]`` lists the attachments
    that exist, ``meta["clique"]`` the clique vertex ids.
    """
    members = list(members)
    if not members or any(len(s) != k for s in members):
        raise GraphError(f"need a nonempty list of length-{k} strings")
    t = len(members)
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    names = list(members)
    landmarks = []
    for digit, tag in (("0", "a"), ("1", "b")):
        for i in range(k):
            nbrs = [v for v, s in enumerate(members) if s[i] == digit]
            if not nbrs:
                continue
            vid = len(names)
            names.append(f"{tag}{i + 1}")
            landmarks.append(vid)
            edges.extend((v, vid) for v in nbrs)
    return build_graph(len(names), edges, None, {
        "family": "clique-gadget", "k": k, "strings": members,
        "names": names, "clique": list(range(t)), "landmarks": landmarks,
    })
