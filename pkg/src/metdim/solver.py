"""Resolving-set verification and exact / greedy metric and edge metric dimension.

Both problems are treated uniformly as a matrix ``M`` of shape
``items x candidates``: row ``i`` holds the distances from item ``i`` (a vertex
or an edge) to every candidate landmark. A landmark set ``S`` resolves the
graph iff the rows of ``M[:, S]`` are pairwise distinct.

Two exact engines share that view:

``bnb``
    Minimum hitting set over item pairs. Each pair keeps the bitmask of
    landmarks that tell it apart (packed into uint64 words); the search
    branches on the pair with the fewest remaining distinguishers and prunes
    with a disjoint-pairs packing bound. A lexicographic pass driven by the
    same feasibility test then extracts the lexicographically least witness.

``lex``
    Plain lexicographic enumeration of landmark subsets with partition
    refinement: only items still sharing a signature with another item are
    carried, the last landmark is tested for all candidates in one
    vectorised batch, and twin classes prune the enumeration.

``auto`` picks ``bnb`` unless the pair masks would not fit the memory budget.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .graph import DistanceTable, Edge, Graph, GraphError, all_pairs_distances

VERTEX = "vertex"
EDGE = "edge"

# pair-mask budget in uint64 words (~120 MB)
MAX_MASK_WORDS = 15_000_000


@dataclass
class Check:
    """Outcome of a resolving-set verification; truthy iff it resolves."""

    ok: bool
    pair: tuple | None = None
    kind: str = VERTEX

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        pair = None if self.pair is None else [list(p) if isinstance(p, tuple) else p for p in self.pair]
        return {"kind": self.kind, "resolving": self.ok, "counterexample": pair}


@dataclass
class Certificate:
    kind: str
    value: int
    witness: list[int]
    exhausted: bool
    complete: bool = True
    elapsed_ms: float = 0.0
    method: str = ""
    refuted_by: str = ""  # how sets of size value-1 were ruled out
    nodes: int = 0
    refutations: list | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "value": self.value,
            "witness": list(self.witness),
            "exhausted": self.exhausted,
            "complete": self.complete,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "method": self.method,
            "refuted_by": self.refuted_by,
        }
        if self.refutations is not None:
            out["refutations"] = self.refutations
        return out


def _kind(kind: str) -> str:
    if kind not in (VERTEX, EDGE):
        raise ValueError(f"kind must be 'vertex' or 'edge', not {kind!r}")
    return kind


def item_matrix(dt: DistanceTable, kind: str = VERTEX) -> np.ndarray:
    return dt.dist if _kind(kind) == VERTEX else dt.edge_matrix


def _item(dt: DistanceTable, kind: str, i: int):
    return i if kind == VERTEX else dt.graph.edges[i]


def _first_collision(M: np.ndarray, landmarks) -> tuple[int, int] | None:
    """Lexicographically least pair (i, j) of items with equal signatures."""
    sub = M[:, list(landmarks)]
    first: dict[bytes, int] = {}
    best = None
    for j in range(sub.shape[0]):
        key = sub[j].tobytes()
        i = first.setdefault(key, j)
        if i != j and (best is None or (i, j) < best):
            best = (i, j)
    return best


def _check(dt: DistanceTable, landmarks, kind: str) -> Check:
    landmarks = list(landmarks)
    if any(not 0 <= s < dt.n for s in landmarks):
        raise GraphError(f"landmark out of range in {landmarks}")
    M = item_matrix(dt, kind)
    hit = _first_collision(M, landmarks)
    if hit is None:
        return Check(True, None, kind)
    return Check(False, (_item(dt, kind, hit[0]), _item(dt, kind, hit[1])), kind)


def is_resolving(dt: DistanceTable, landmarks) -> Check:
    return _check(dt, landmarks, VERTEX)


def is_edge_resolving(dt: DistanceTable, landmarks) -> Check:
    return _check(dt, landmarks, EDGE)


# -- twins ----------------------------------------------------------------------


def twin_classes(g: Graph) -> list[list[int]]:
    """Groups (size >= 2) of vertices with equal open or equal closed neighbourhoods.

    Any resolving set contains all but at most one vertex of each group: two
    twins have the same distance to every vertex other than themselves.
    """
    groups = []
    for closed in (False, True):
        by_key: dict[int, list[int]] = {}
        for v, mask in enumerate(g.adj):
            by_key.setdefault(mask | (1 << v) if closed else mask, []).append(v)
        groups.extend(sorted(vs) for vs in by_key.values() if len(vs) > 1)
    return sorted(groups)


def mandatory_groups(g: Graph, kind: str) -> list[list[int]]:
    """Twin groups that force landmarks for ``kind``.

    For edges the argument needs a common neighbour w outside the group (edges
    uw and vw are then confused by every other landmark).
    """
    groups = twin_classes(g)
    if kind == VERTEX:
        return groups
    out = []
    for grp in groups:
        common = ~0
        for v in grp:
            common &= g.adj[v]
        for v in grp:
            common &= ~(1 << v)
        if common:
            out.append(grp)
    return out


# -- hitting-set engine -----------------------------------------------------------


def _pack_rows(diff: np.ndarray, words: int) -> np.ndarray:
    pad = words * 64 - diff.shape[1]
    if pad:
        diff = np.pad(diff, ((0, 0), (0, pad)))
    return np.packbits(diff, axis=1, bitorder="little").view("<u8")


def pair_masks(M: np.ndarray, chunk: int = 20_000) -> np.ndarray:
    """Distinct distinguisher bitmasks over all item pairs, shape ``(P, words)``."""
    N, n = M.shape
    words = (n + 63) // 64
    ii, jj = np.triu_indices(N, 1)
    parts = []
    for s in range(0, len(ii), chunk):
        diff = M[ii[s:s + chunk]] != M[jj[s:s + chunk]]
        parts.append(np.unique(_pack_rows(diff, words), axis=0))
    if not parts:
        return np.zeros((0, words), dtype=np.uint64)
    return np.unique(np.concatenate(parts), axis=0)


def _range_mask(lo: int, hi: int, words: int) -> np.ndarray:
    bits = np.zeros(words * 64, dtype=bool)
    bits[lo:hi] = True
    return _pack_rows(bits[None, :], words)[0]


def _to_int(row: np.ndarray) -> int:
    return int.from_bytes(row.astype("<u8").tobytes(), "little")


def _bit_list(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


class HittingSearch:
    """Branch and bound for "is there a resolving set of size <= r inside ``allowed``"."""

    pack_limit = 256

    def __init__(self, M: np.ndarray):
        self.N, self.n = M.shape
        self.words = (self.n + 63) // 64
        self.masks = pair_masks(M)
        self.nodes = 0

    def without(self, active: np.ndarray, c: int) -> np.ndarray:
        """Pairs of ``active`` that landmark ``c`` does not split."""
        col = self.masks[active, c >> 6]
        return active[(col >> np.uint64(c & 63)) & np.uint64(1) == 0]

    def all_pairs(self) -> np.ndarray:
        return np.arange(len(self.masks))

    def allowed_from(self, lo: int) -> np.ndarray:
        return _range_mask(lo, self.n, self.words)

    def feasible(self, active: np.ndarray, allowed: np.ndarray, r: int) -> list[int] | None:
        self.nodes += 1
        if len(active) == 0:
            return []
        if r <= 0:
            return None
        rows = self.masks[active] & allowed
        if r == 1:
            both = _to_int(np.bitwise_and.reduce(rows, axis=0))
            return [(both & -both).bit_length() - 1] if both else None
        cnt = np.bitwise_count(rows).sum(axis=1, dtype=np.int64)
        order = np.argsort(cnt, kind="stable")
        if cnt[order[0]] == 0:
            return None
        # disjoint distinguisher sets need one landmark each
        used, lb = 0, 0
        for p in order[: self.pack_limit]:
            m = _to_int(rows[p])
            if not m & used:
                used |= m
                lb += 1
                if lb > r:
                    return None
        cands = _bit_list(_to_int(rows[order[0]]))
        if len(active) * self.n <= 4_000_000 and len(cands) > 1:
            bits = np.unpackbits(rows.view(np.uint8), axis=1, bitorder="little")
            cover = bits.sum(axis=0, dtype=np.int64)
            cands.sort(key=lambda c: (-cover[c], c))
        allowed = _to_int(allowed)
        for c in cands:
            allowed &= ~(1 << c)
            sub = self.feasible(self.without(active, c), self._from_int(allowed), r - 1)
            if sub is not None:
                return [c] + sub
        return None

    def _from_int(self, x: int) -> np.ndarray:
        return np.frombuffer(x.to_bytes(self.words * 8, "little"), dtype="<u8").copy()

    def find(self, k: int) -> list[int] | None:
        """Lexicographically least resolving set of size ``k``, or None."""
        everything = self.all_pairs()
        if self.feasible(everything, self.allowed_from(0), k) is None:
            return None
        chosen, active, start = [], everything, 0
        for pos in range(k):
            r = k - pos
            for c in range(start, self.n - r + 1):
                nxt = self.without(active, c)
                if r == 1:
                    ok = len(nxt) == 0
                else:
                    ok = self.feasible(nxt, self.allowed_from(c + 1), r - 1) is not None
                if ok:
                    chosen.append(c)
                    active, start = nxt, c + 1
                    break
            else:
                raise AssertionError("feasible root but no lexicographic completion")
        return chosen


# -- lexicographic engine -----------------------------------------------------------


class LexSearch:
    """Subsets in lexicographic order; the first resolving one is returned."""

    batch = 4096

    def __init__(self, M: np.ndarray, groups=()):
        self.M = np.ascontiguousarray(M, dtype=np.int64)
        self.N, self.n = M.shape
        self.base = int(self.M.max()) + 1 if self.M.size else 1
        self.groups = [np.asarray(g) for g in groups]
        self.nodes = 0
        rng = np.random.default_rng(0x5EED)
        self._hash = rng.integers(1, 2**62, size=self.n, dtype=np.int64)

    def _refine(self, act, lab, c):
        keys = lab * self.base + self.M[act, c]
        _, inv, counts = np.unique(keys, return_inverse=True, return_counts=True)
        keep = counts[inv] > 1
        return act[keep], inv[keep]

    def _twin_ok(self, chosen, start, r) -> bool:
        need_total = 0
        for grp in self.groups:
            have = int(np.isin(grp, chosen).sum())
            need = len(grp) - 1 - have
            if need > 0:
                if need > int((grp >= start).sum()):
                    return False
                need_total += need
        return need_total <= r

    def _dead_pair(self, act, lab, start) -> bool:
        """Some still-confused pair is told apart by no candidate >= start."""
        if start >= self.n:
            return len(act) > 0
        h = self.M[act, start:] @ self._hash[start:]
        keys = np.stack([lab, h], axis=1)
        _, inv, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
        for cls in np.flatnonzero(counts > 1):
            members = act[inv == cls]
            rows = self.M[members, start:]
            if len(np.unique(rows, axis=0)) < len(members):
                return True
        return False

    def _leaf(self, chosen, act, lab, start):
        cands = np.arange(start, self.n)
        if self.groups:
            cands = np.array([c for c in cands if self._twin_ok(chosen + [int(c)], self.n, 0)], dtype=np.intp)
        if len(act) == 0:
            return int(cands[0]) if len(cands) else None
        order = np.argsort(lab, kind="stable")
        act, lab = act[order], lab[order]
        for s in range(0, len(cands), self.batch):
            cs = cands[s:s + self.batch]
            self.nodes += len(cs)
            keys = lab[:, None] * self.base + self.M[np.ix_(act, cs)]
            keys.sort(axis=0)
            clash = (keys[1:] == keys[:-1]).any(axis=0)
            good = np.flatnonzero(~clash)
            if len(good):
                return int(cs[good[0]])
        return None

    def _dfs(self, chosen, act, lab, start, r):
        if r == 1:
            c = self._leaf(chosen, act, lab, start)
            return None if c is None else chosen + [c]
        for c in range(start, self.n - r + 1):
            self.nodes += 1
            nxt = chosen + [c]
            if self.groups and not self._twin_ok(nxt, c + 1, r - 1):
                continue
            a2, l2 = self._refine(act, lab, c)
            if len(a2) == 0:
                return nxt + list(range(c + 1, c + r))
            if self._dead_pair(a2, l2, c + 1):
                continue
            found = self._dfs(nxt, a2, l2, c + 1, r - 1)
            if found is not None:
                return found
        return None

    def find(self, k: int) -> list[int] | None:
        if k > self.n:
            return None
        act = np.arange(self.N)
        return self._dfs([], act, np.zeros(self.N, dtype=np.int64), 0, k)


# -- public solvers -------------------------------------------------------------------


def _pick_method(M: np.ndarray, method: str) -> str:
    if method != "auto":
        if method not in ("bnb", "lex"):
            raise ValueError(f"unknown method {method!r}")
        return method
    N, n = M.shape
    words = (n + 63) // 64
    return "bnb" if N * (N - 1) // 2 * words <= MAX_MASK_WORDS else "lex"


def _refutations(M: np.ndarray, dt: DistanceTable, kind: str, size: int, limit: int = 200_000):
    if size < 1:
        return []
    if math.comb(dt.n, size) > limit:
        raise ValueError(f"too many subsets of size {size} to list refutations")
    out = []
    for sub in itertools.combinations(range(dt.n), size):
        i, j = _first_collision(M, sub)
        out.append({"set": list(sub), "pair": [_jsonable(_item(dt, kind, i)), _jsonable(_item(dt, kind, j))]})
    return out


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def solve(g: Graph, kind: str = VERTEX, max_k: int | None = None, method: str = "auto",
          verbose: bool = False, dt: DistanceTable | None = None) -> Certificate:
    """Exact (edge) metric dimension with the lexicographically least witness.

    Sizes are tried in increasing order from the twin lower bound. When
    ``max_k`` is reached without success the certificate reports
    ``value = max_k + 1`` with ``complete=False``.
    """
    kind = _kind(kind)
    t0 = time.perf_counter()
    if g.n < 2:
        raise GraphError("dimension needs at least two vertices")
    dt = dt or all_pairs_distances(g)
    if not dt.connected:
        raise GraphError("graph is not connected")
    M = item_matrix(dt, kind)
    cap = g.n - 1 if max_k is None else max_k
    groups = mandatory_groups(g, kind)
    twin_lb = sum(len(grp) - 1 for grp in groups)
    lo = max(1, twin_lb)
    refuted_by = "trivial" if lo == 1 else "twins"
    method = _pick_method(M, method)
    engine = HittingSearch(M) if method == "bnb" else LexSearch(M, groups)

    value, witness = None, []
    for k in range(lo, cap + 1):
        found = engine.find(k)
        if found is not None:
            value, witness = k, found
            break
        refuted_by = "search"
    elapsed = (time.perf_counter() - t0) * 1000
    if value is None:
        return Certificate(kind, cap + 1, [], exhausted=True, complete=False, elapsed_ms=elapsed,
                           method=method, refuted_by=refuted_by if cap >= lo else "", nodes=engine.nodes)
    cert = Certificate(kind, value, witness, exhausted=True, elapsed_ms=elapsed, method=method,
                       refuted_by=refuted_by, nodes=engine.nodes)
    # the witness must verify on its own
    assert _first_collision(M, witness) is None, "solver produced a non-resolving witness"
    if verbose:
        cert.refutations = _refutations(M, dt, kind, value - 1)
    return cert


def metric_dimension(g: Graph, max_k: int | None = None, **kw) -> Certificate:
    return solve(g, VERTEX, max_k, **kw)


def edge_metric_dimension(g: Graph, max_k: int | None = None, **kw) -> Certificate:
    return solve(g, EDGE, max_k, **kw)


def greedy_resolving(dt: DistanceTable, kind: str = VERTEX) -> list[int]:
    """Add the landmark that leaves the fewest confused pairs until none remain (ties: least id)."""
    M = item_matrix(dt, _kind(kind))
    N, n = M.shape
    if N <= 1:
        return [0]
    base = int(M.max()) + 1
    lab = np.zeros(N, dtype=np.int64)
    chosen: list[int] = []

    def confused(labels) -> int:
        _, counts = np.unique(labels, return_counts=True)
        return int((counts * (counts - 1) // 2).sum())

    left = confused(lab)
    while left:
        best, best_c = left, None
        for c in range(n):
            if c in chosen:
                continue
            rem = confused(lab * base + M[:, c])
            if rem < best:
                best, best_c = rem, c
        if best_c is None:
            raise GraphError("no landmark splits the remaining pairs (disconnected graph?)")
        chosen.append(best_c)
        _, lab = np.unique(lab * base + M[:, best_c], return_inverse=True)
        left = best
    return sorted(chosen)
