"""Graph representation, all-pairs hop distances and the vertex/edge distance primitives.

Vertices are dense ids ``0..n-1``. Adjacency is stored as one Python-int
bitmask per vertex. Lattice-derived graphs also carry integer coordinate
labels and keep a point -> id index.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

# Strictly larger than any hop count a graph we can hold in memory will produce.
UNREACHABLE = np.iinfo(np.int32).max

LatticePoint = tuple[int, ...]


class GraphError(ValueError):
    pass


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"self-loop at {a}")
        return cls(a, b) if a < b else cls(b, a)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph.

    ``meta`` holds constructor output that is not part of the graph proper,
    e.g. designated landmark ids or a bipartition.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[LatticePoint, ...] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise GraphError(f"self-loop at {v}")
            if mask >> self.n:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            for u in iter_bits(mask):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("labels length does not match n")
            if len(set(self.labels)) != self.n:
                raise GraphError("labels are not injective")
            k = len(self.labels[0])
            for p in self.labels:
                if len(p) != k or k < 1 or min(p) < 0:
                    raise GraphError(f"bad lattice label {p}")
            for u, v in self.edges:
                if linf(self.labels[u], self.labels[v]) > 1:
                    raise GraphError(f"edge ({u}, {v}) joins labels more than 1 apart")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.adj, self.labels) == (other.n, other.adj, other.labels)

    def __hash__(self):
        return hash((self.n, self.adj, self.labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, labelled={self.labels is not None})"

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u, mask in enumerate(self.adj):
            out.extend(Edge(u, v) for v in iter_bits(mask >> (u + 1) << (u + 1)))
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(mask).count("1") for mask in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @cached_property
    def index(self) -> dict[LatticePoint, int]:
        """Lattice point -> vertex id (empty for unlabelled graphs)."""
        if self.labels is None:
            return {}
        return {p: i for i, p in enumerate(self.labels)}

    @property
    def landmarks(self) -> list[int] | None:
        return self.meta.get("landmarks")

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        keep = list(vertices)
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = None if self.labels is None else [self.labels[v] for v in keep]
        return build_graph(len(keep), edges, labels)

    def with_labels(self, labels, meta: dict | None = None) -> "Graph":
        labels = None if labels is None else tuple(tuple(int(c) for c in p) for p in labels)
        return Graph(self.n, self.adj, labels, dict(self.meta if meta is None else meta))


def linf(p: Sequence[int], q: Sequence[int]) -> int:
    return max(abs(a - b) for a, b in zip(p, q))


def build_graph(n: int, edges: Iterable[Sequence[int]], labels=None, meta: dict | None = None) -> Graph:
    """Build a simple undirected graph; duplicate edges collapse, self-loops are rejected."""
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    adj = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is not None:
        labels = tuple(tuple(int(c) for c in p) for p in labels)
    return Graph(n, tuple(adj), labels, dict(meta or {}))


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """All-pairs hop counts of ``graph``; disconnected pairs hold ``UNREACHABLE``."""

    graph: Graph
    dist: np.ndarray
    diameter: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    @cached_property
    def edge_matrix(self) -> np.ndarray:
        """``m x n`` matrix of edge-to-vertex distances, rows in ``graph.edges`` order."""
        if not self.graph.edges:
            return np.zeros((0, self.n), dtype=np.int64)
        e = np.asarray(self.graph.edges, dtype=np.intp)
        out = np.minimum(self.dist[e[:, 0]], self.dist[e[:, 1]])
        out.setflags(write=False)
        return out


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source BFS, plain Python."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if dist[w] == UNREACHABLE:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceTable:
    if g.m:
        e = np.asarray(g.edges)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        a = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
        raw = shortest_path(a, method="D", directed=False, unweighted=True)
    else:
        raw = np.full((g.n, g.n), np.inf)
        np.fill_diagonal(raw, 0)
    finite = np.isfinite(raw)
    dist = np.where(finite, raw, 0).astype(np.int64)
    dist[~finite] = UNREACHABLE
    dist.setflags(write=False)
    diameter = int(dist[finite].max()) if finite.any() else 0
    return DistanceTable(g, dist, diameter)


def edge_distance(dt: DistanceTable, e: Sequence[int], w: int) -> int:
    u, v = e
    if not dt.graph.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return int(min(dt.dist[u, w], dt.dist[v, w]))


def distance_vector(dt: DistanceTable, v: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(dt.dist[v, s]) for s in landmarks)


def edge_distance_vector(dt: DistanceTable, e: Sequence[int], landmarks: Sequence[int]) -> tuple[int, ...]:
    return tuple(edge_distance(dt, e, s) for s in landmarks)


# -- serialisation -----------------------------------------------------------


def graph_to_dict(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        out["labels"] = [list(p) for p in g.labels]
    if g.meta:
        out["meta"] = g.meta
    return out


def graph_from_dict(d: dict) -> Graph:
    return build_graph(d["n"], d["edges"], d.get("labels"), d.get("meta"))


def save_json(g: Graph, path) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(g)) + "\n")


def load_json(path) -> Graph:
    return graph_from_dict(json.loads(Path(path).read_text()))


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise GraphError(f"header says {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def load_graph(path) -> Graph:
    """Load JSON (``.json``) or plain edge-list text (anything else)."""
    path = Path(path)
    if path.suffix == ".json":
        return load_json(path)
    return from_edgelist(path.read_text())


def to_dot(g: Graph, highlight: Iterable[int] = ()) -> str:
    hl = set(highlight)
    lines = ["graph G {"]
    for v in range(g.n):
        attrs = []
        if g.labels is not None:
            attrs.append('label="' + ",".join(map(str, g.labels[v])) + '"')
        if v in hl:
            attrs.append("style=filled, fillcolor=orange")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
