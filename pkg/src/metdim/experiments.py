"""Reproducibility suite: every extremal claim checked on finite instances.

Each claim function yields :class:`ExperimentResult` records of the form
``lhs <relation> rhs``. All randomness derives from one integer seed through
``numpy.random.SeedSequence`` (PCG64 streams, one per claim).
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds, oracles
from .constructions import (
    check_hamiltonian_cycle, ck_q, clique_gadget, contains_complete_bipartite, dk_window,
    host_in_ck, knn_embedding, mk, grid, sidon_sample, wheel_cycle, wheel_host,
)
from .extremal import chromatic_number_exact, degeneracy, parity_coloring
from .graph import Graph, all_pairs_distances, build_graph, edge_distance_vector
from .solver import edge_metric_dimension, is_edge_resolving, is_resolving, metric_dimension

SCHEMA_ID = "metdim-suite/1"

CLAIMS = {
    1: "ck-resolving",
    2: "max-degree",
    3: "wheel-cycle",
    4: "knn",
    5: "degeneracy",
    6: "chromatic",
    7: "grid-dimensions",
    8: "bounds",
    9: "mk-dominant-vertex",
    10: "c2q-edim",
    11: "clique-gadget",
    12: "solver-vs-oracle",
}


@dataclass
class SuiteConfig:
    k_max: int = 4
    q_max: int = 5
    n_max: int = 6
    seed: int = 0
    seeds_per_k: int = 3
    random_graphs: int = 200
    only: tuple[int, ...] = ()


@dataclass
class ExperimentResult:
    claim: str
    criterion: int
    params: dict
    relation: str
    lhs: object
    rhs: object
    passed: bool = False
    elapsed_ms: float = 0.0
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        self.passed = bool(_holds(self.lhs, self.relation, self.rhs))

    def to_dict(self) -> dict:
        return asdict(self)


def _holds(lhs, rel, rhs) -> bool:
    if rel == "=":
        return lhs == rhs
    if rel == ">=":
        return lhs >= rhs
    if rel == "<=":
        return lhs <= rhs
    raise ValueError(f"unknown relation {rel}")


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1000


def _result(criterion, params, rel, lhs, rhs, ms, **info) -> ExperimentResult:
    return ExperimentResult(CLAIMS[criterion], criterion, params, rel, lhs, rhs, elapsed_ms=round(ms, 3), info=info)


def _seeds(cfg: SuiteConfig, criterion: int, count: int) -> list[int]:
    ss = np.random.SeedSequence([cfg.seed, criterion])
    return [int(x) for x in ss.generate_state(count)]


def lattice_families(k_max: int) -> list[tuple[str, Graph]]:
    """Every lattice-labelled family the suite generates, for blanket invariant checks."""
    out = []
    for k in range(1, min(k_max, 3) + 1):
        out.append((f"dk_window({k},0..2)", dk_window(k, 0, 2)))
        out.append((f"dk_window({k},0..3)", dk_window(k, 0, 3)))
        out.append((f"knn({k})", knn_embedding(k)))
        out.append((f"mk({k})", mk(k)))
        for q in (1, 2, 3):
            out.append((f"ck({k},{q})", ck_q(k, q)))
        if k >= 2:
            out.append((f"wheel_host({k})", wheel_host(k)))
    out.append(("dk_window(2,0..4)", dk_window(2, 0, 4)))
    out.append(("dk_window(2,0..6)", dk_window(2, 0, 6)))
    return out


# -- claims ---------------------------------------------------------------------


def claim_ck_resolving(cfg):
    for k in (2, 3):
        if k > cfg.k_max:
            continue
        for q in range(1, min(4, cfg.q_max) + 1):
            with _Timer() as t:
                g = ck_q(k, q)
                dt = all_pairs_distances(g)
                ok = bool(is_resolving(dt, g.landmarks))
                mismatches = sum(
                    1 for v in range(g.n)
                    if tuple(int(dt.dist[v, s]) for s in g.landmarks) != g.labels[v]
                )
            yield _result(1, {"k": k, "q": q}, "=", [ok, mismatches], [True, 0], t.ms, order=g.n)


def claim_max_degree(cfg):
    for k in range(1, min(3, cfg.k_max) + 1):
        with _Timer() as t:
            g = dk_window(k, 0, 2)
            centre = g.degree(g.index[(1,) * k])
            top = max(g.degrees())
        yield _result(2, {"k": k}, "=", [centre, top], [3**k - 1, 3**k - 1], t.ms)


REFERENCE_K2_CYCLE = [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)]


def claim_wheel(cfg):
    for k in range(2, min(4, cfg.k_max) + 1):
        with _Timer() as t:
            cyc = wheel_cycle(k)
            problems = check_hamiltonian_cycle(cyc, k)
            verbatim = cyc == REFERENCE_K2_CYCLE if k == 2 else True
        yield _result(3, {"k": k}, "=", [problems, verbatim], [[], True], t.ms, length=len(cyc))


def claim_knn(cfg):
    for k in range(1, min(4, cfg.k_max) + 1):
        with _Timer() as t:
            g = knn_embedding(k)
            left, right = g.meta["parts"]
            complete = contains_complete_bipartite(g, left, right)
            sizes = [len(left), len(right)]
        yield _result(4, {"k": k, "check": "K_nn"}, "=", [complete, sizes],
                      [True, [2 ** (k - 1)] * 2], t.ms)
        if k in (2, 3):
            with _Timer() as t:
                host, image, q = host_in_ck(g)
                left_h = [image[v] for v in left]
                right_h = [image[v] for v in right]
                inside = contains_complete_bipartite(host, left_h, right_h)
                ok = bool(is_resolving(all_pairs_distances(host), host.landmarks))
            yield _result(4, {"k": k, "check": "host-contains-knn", "q": q}, "=", [inside, ok], [True, True], t.ms)
            yield _result(4, {"k": k, "check": "host-dim", "q": q}, "<=", len(host.landmarks), k, 0.0)


def claim_degeneracy(cfg):
    if cfg.k_max >= 2:
        for q in (2, 3):
            with _Timer() as t:
                d, _ = degeneracy(dk_window(2, 0, 2 * q))
            yield _result(5, {"k": 2, "q": q, "check": "realised"}, "=", d, 4, t.ms)
    with _Timer() as t:
        worst = []
        for name, g in lattice_families(cfg.k_max):
            k = len(g.labels[0])
            d, _ = degeneracy(g)
            if d > (3**k - 1) // 2:
                worst.append(name)
    yield _result(5, {"check": "upper-bound-all-families"}, "=", worst, [], t.ms)


def claim_chromatic(cfg):
    with _Timer() as t:
        bad = []
        for name, g in lattice_families(cfg.k_max):
            k = len(g.labels[0])
            try:
                colors = parity_coloring(g)
            except AssertionError:
                bad.append(name)
                continue
            if len(set(colors)) > 2**k:
                bad.append(name)
    yield _result(6, {"check": "parity-proper"}, "=", bad, [], t.ms)
    for k in (1, 2):
        if k > cfg.k_max:
            continue
        with _Timer() as t:
            chi = chromatic_number_exact(knn_embedding(k))
        yield _result(6, {"k": k, "check": "exact"}, "=", chi, 2**k, t.ms)


def claim_grid(cfg):
    for n in range(2, min(6, cfg.n_max) + 1):
        with _Timer() as t:
            g = grid(n, 2)
            d = metric_dimension(g)
            e = edge_metric_dimension(g)
        yield _result(7, {"n": n, "d": 2}, "=", [d.value, e.value], [2, 2], t.ms,
                      dim_witness=d.witness, edim_witness=e.witness)
    if cfg.k_max >= 3:
        with _Timer() as t:
            c = metric_dimension(grid(9, 3))
        yield _result(7, {"n": 9, "d": 3}, "=", [c.value, c.exhausted, c.refuted_by], [3, True, "search"],
                      t.ms, witness=c.witness)


def claim_bounds(cfg):
    cases = [
        ("order_bound_dim", (729, 24), 3, bounds.order_bound_dim, oracles.order_bound_direct),
        ("grid_dim_lower_bound", (9, 3), 3, bounds.grid_dim_lower_bound, oracles.grid_dim_lb_float),
        ("grid_edim_lower_bound", (5, 2), 2, bounds.grid_edim_lower_bound, oracles.grid_edim_lb_float),
        ("hypercube_dim_order_bound", (2,), 5, bounds.hypercube_dim_order_bound, oracles.hypercube_bound_direct),
    ]
    for name, args, expected, fast, direct in cases:
        with _Timer() as t:
            got = fast(*args).bound
            ref = direct(*args)
        yield _result(8, {"bound": name, "args": list(args)}, "=", [got, ref], [expected, expected], t.ms)


def claim_mk(cfg):
    if cfg.k_max < 2:
        return
    with _Timer() as t:
        g = mk(2)
        lower = bounds.dominant_vertex_edim_bound(g).bound
    yield _result(9, {"k": 2, "check": "dominant-vertex-bound"}, "=", lower, 4, t.ms)
    with _Timer() as t:
        e = edge_metric_dimension(g)
    yield _result(9, {"k": 2, "check": "edim>=dominant-vertex-bound"}, ">=", e.value, lower, t.ms,
                  witness=e.witness)
    with _Timer() as t:
        d = metric_dimension(g)
    yield _result(9, {"k": 2, "check": "dim"}, "=", d.value, 2, t.ms, witness=d.witness)


def claim_c2q(cfg):
    if cfg.k_max < 2:
        return
    for q in range(2, min(5, cfg.q_max) + 1):
        g = ck_q(2, q)
        with _Timer() as t:
            d = metric_dimension(g)
        yield _result(10, {"q": q, "check": "dim"}, "=", d.value, 2, t.ms, witness=d.witness)
        with _Timer() as t:
            e = edge_metric_dimension(g)
        yield _result(10, {"q": q, "check": "edim"}, ">=", e.value, q - 1, t.ms, witness=e.witness)


def claim_clique_gadget(cfg):
    for k in range(2, min(4, cfg.k_max) + 1):
        targets = sorted({None, 2 ** (k - 1)}, key=lambda x: -1 if x is None else x)
        for seed in _seeds(cfg, 11, cfg.seeds_per_k):
            for target in targets:
                with _Timer() as t:
                    U = sidon_sample(k, target, seed=seed)
                    brute = oracles.sidon_brute_force(U.members)
                    g = clique_gadget(k, U.members)
                    dt = all_pairs_distances(g)
                    marks = g.landmarks
                    clique = set(g.meta["clique"])
                    vecs = [edge_distance_vector(dt, e, marks) for e in g.edges
                            if e.u in clique and e.v in clique]
                    clique_ok = len(set(vecs)) == len(vecs)
                    full_ok = bool(is_edge_resolving(dt, marks))
                    e = edge_metric_dimension(g, dt=dt)
                params = {"k": k, "seed": seed, "t": U.sampled, "size": len(U.members)}
                yield _result(11, {**params, "check": "sidon+clique-edges"}, "=", [brute, clique_ok],
                              [True, True], t.ms, members=list(U.members))
                yield _result(11, {**params, "check": "edim"}, "<=", e.value, 2 * k, 0.0,
                              witness=e.witness, landmarks_resolve_all_edges=full_ok)


def random_connected_graph(rng: np.random.Generator, n_max: int = 9) -> Graph:
    n = int(rng.integers(2, n_max + 1))
    p = float(rng.uniform(0.1, 0.6))
    edges = {(int(rng.integers(0, i)), i) for i in range(1, n)}
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((i, j))
    return build_graph(n, sorted(edges))


def claim_solver_vs_oracle(cfg):
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, 12]))
    mismatches = []
    with _Timer() as t:
        for i in range(cfg.random_graphs):
            g = random_connected_graph(rng)
            for kind, fn in (("vertex", metric_dimension), ("edge", edge_metric_dimension)):
                c = fn(g)
                ref = oracles.naive_dimension(g, kind)
                if (c.value, tuple(c.witness)) != ref:
                    mismatches.append({"graph": i, "kind": kind, "solver": c.value, "oracle": ref[0]})
    yield _result(12, {"graphs": cfg.random_graphs, "n_max": 9}, "=", mismatches, [], t.ms)


CLAIM_FUNCS = {
    1: claim_ck_resolving, 2: claim_max_degree, 3: claim_wheel, 4: claim_knn,
    5: claim_degeneracy, 6: claim_chromatic, 7: claim_grid, 8: claim_bounds,
    9: claim_mk, 10: claim_c2q, 11: claim_clique_gadget, 12: claim_solver_vs_oracle,
}


def run_claim(criterion: int, cfg: SuiteConfig) -> list[ExperimentResult]:
    return list(CLAIM_FUNCS[criterion](cfg))


def _run_one(args):
    return run_claim(*args)


def run_suite(cfg: SuiteConfig, jobs: int = 1) -> list[ExperimentResult]:
    todo = [c for c in CLAIM_FUNCS if not cfg.only or c in cfg.only]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, [(c, cfg) for c in todo]))
    else:
        chunks = [run_claim(c, cfg) for c in todo]
    return [r for chunk in chunks for r in chunk]


def report(results: list[ExperimentResult], cfg: SuiteConfig) -> dict:
    summary = {}
    for r in results:
        key = str(r.criterion)
        summary[key] = summary.get(key, True) and r.passed
    return {
        "schema": SCHEMA_ID,
        "config": {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(cfg).items()},
        "passed": all(r.passed for r in results),
        "summary": summary,
        "results": [r.to_dict() for r in results],
    }


def dumps(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"not JSON serialisable: {type(o)}")
