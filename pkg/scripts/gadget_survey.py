"""Sidon clique gadgets over many seeds: achieved |U|, exact edim and whether the attachment set resolves every edge.

    python scripts/gadget_survey.py --k-max 4 --seeds 20
"""

import argparse

from metdim.constructions import clique_gadget, sidon_sample
from metdim.graph import all_pairs_distances
from metdim.solver import edge_metric_dimension, is_edge_resolving


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--t", type=int, help="sample size before repair (default: built-in target)")
    args = p.parse_args()
    print(f"{'k':>2} {'seed':>5} {'|U|':>4} {'n':>4} {'edim':>5} {'2k':>3}  landmarks resolve")
    for k in range(2, args.k_max + 1):
        for seed in range(args.seeds):
            t = None if args.t is None else min(args.t, 2**k)
            u = sidon_sample(k, t, seed=seed)
            g = clique_gadget(k, u.members)
            ok = bool(is_edge_resolving(all_pairs_distances(g), g.landmarks))
            edim = edge_metric_dimension(g).value if g.n >= 2 else 0
            print(f"{k:>2} {seed:>5} {len(u.members):>4} {g.n:>4} {edim:>5} {2 * k:>3}  {ok}")


if __name__ == "__main__":
    main()
