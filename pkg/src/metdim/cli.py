"""Command-line front end.

Exit codes: 0 success, 1 a claim or verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .experiments import SuiteConfig, dumps, report, run_suite
from .extremal import invariant_report
from .graph import GraphError, all_pairs_distances, graph_to_dict, load_graph, to_dot
from .solver import is_edge_resolving, is_resolving, solve

FAMILIES = ["dk-window", "ck", "mk", "grid", "hypercube", "knn", "clique-gadget", "wheel-host"]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _corner(text, default):
    if not text:
        return default
    vals = _ints(text)
    return vals[0] if len(vals) == 1 else vals


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise GraphError(f"{args.family} needs {', '.join(missing)}")


def build_family(args):
    fam = args.family
    if fam == "dk-window":
        _need(args, "k")
        lo = _corner(args.lo, 0)
        hi = _corner(args.hi, 2)
        return C.dk_window(args.k, lo, hi)
    if fam == "ck":
        _need(args, "k", "q")
        return C.ck_q(args.k, args.q)
    if fam == "mk":
        _need(args, "k")
        return C.mk(args.k)
    if fam == "grid":
        _need(args, "n", "d")
        return C.grid(args.n, args.d)
    if fam == "hypercube":
        _need(args, "n")
        return C.hypercube(args.n)
    if fam == "knn":
        _need(args, "k")
        return C.knn_embedding(args.k)
    if fam == "wheel-host":
        _need(args, "k")
        return C.wheel_host(args.k)
    if fam == "clique-gadget":
        _need(args, "k")
        if args.strings:
            members = args.strings.replace(",", " ").split()
            sidon = C.SidonSet(args.k, tuple(sorted(members)))
        else:
            sidon = C.sidon_sample(args.k, args.t, seed=args.seed)
        g = C.clique_gadget(args.k, sidon.members)
        g.meta["sidon"] = {"members": sidon.to_list(), "sampled": sidon.sampled, "seed": args.seed}
        return g
    raise GraphError(f"unknown family {fam}")


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args) -> int:
    g = build_family(args)
    _write(json.dumps(graph_to_dict(g)) + "\n", args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, g.landmarks or ()))
    return 0


def cmd_dim(args) -> int:
    g = load_graph(args.input)
    cert = solve(g, "edge" if args.edge else "vertex", args.max_k, method=args.method, verbose=args.verbose)
    print(json.dumps(cert.to_dict()))
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.input)
    landmarks = _ints(args.set) if args.set else (g.landmarks or [])
    dt = all_pairs_distances(g)
    check = (is_edge_resolving if args.edge else is_resolving)(dt, landmarks)
    out = check.to_dict()
    out["set"] = landmarks
    print(json.dumps(out))
    return 0 if check else 1


def cmd_report(args) -> int:
    g = load_graph(args.input)
    print(json.dumps(invariant_report(g, args.cap).to_dict()))
    return 0


def cmd_export_dot(args) -> int:
    g = load_graph(args.input)
    hl = _ints(args.highlight) if args.highlight else (g.landmarks or ())
    _write(to_dot(g, hl), args.out)
    return 0


def cmd_suite(args) -> int:
    cfg = SuiteConfig(k_max=args.k_max, q_max=args.q_max, n_max=args.n_max, seed=args.seed,
                      seeds_per_k=args.seeds, random_graphs=args.random_graphs,
                      only=tuple(_ints(args.only)) if args.only else ())
    results = run_suite(cfg, jobs=args.jobs)
    rep = report(results, cfg)
    if args.report:
        Path(args.report).write_text(dumps(rep))
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} [{r.criterion:2d}] {r.claim} {json.dumps(r.params)} "
              f"{json.dumps(r.lhs)} {r.relation} {json.dumps(r.rhs)}")
    print("all claims pass" if rep["passed"] else "SOME CLAIMS FAILED")
    return 0 if rep["passed"] else 1


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="metdim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph family as JSON")
    g.add_argument("family", choices=FAMILIES)
    for name in ("k", "q", "n", "d", "t"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--lo", help="box lower corner, e.g. '0,0' (dk-window)")
    g.add_argument("--hi", help="box upper corner (dk-window)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--strings", help="explicit Sidon members for clique-gadget, e.g. 00,01,10")
    g.add_argument("--out", "-o")
    g.add_argument("--dot", help="also write DOT here")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("dim", help="exact (edge) metric dimension")
    d.add_argument("input")
    d.add_argument("--edge", action="store_true")
    d.add_argument("--max-k", type=int)
    d.add_argument("--method", choices=["auto", "bnb", "lex"], default="auto")
    d.add_argument("--verbose", action="store_true", help="list a counterexample for every smaller set")
    d.set_defaults(func=cmd_dim)

    v = sub.add_parser("verify", help="check a landmark set")
    v.add_argument("input")
    v.add_argument("--set", help="landmark ids, e.g. 0,3; default: the file's landmark metadata")
    v.add_argument("--edge", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="graph invariants")
    r.add_argument("input")
    r.add_argument("--cap", type=int, default=20)
    r.set_defaults(func=cmd_report)

    x = sub.add_parser("export-dot", help="write Graphviz DOT")
    x.add_argument("input")
    x.add_argument("--highlight")
    x.add_argument("--out", "-o")
    x.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("suite", help="run every claim check")
    s.add_argument("--k-max", type=int, default=4)
    s.add_argument("--q-max", type=int, default=5)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--seeds", type=int, default=3, help="Sidon seeds per k")
    s.add_argument("--random-graphs", type=int, default=200)
    s.add_argument("--only", help="criterion numbers, e.g. 1,7")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--report")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
