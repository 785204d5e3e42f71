"""Exact edge metric dimension of C_2(q) next to its q-1 lower bound; dim stays 2.

    python scripts/c2q_edim_table.py --q-max 6
"""

import argparse

from metdim.constructions import ck_q
from metdim.solver import edge_metric_dimension, metric_dimension


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--q-max", type=int, default=5)
    args = p.parse_args()
    print(f"{'q':>3} {'n':>4} {'m':>4} {'dim':>4} {'edim':>5} {'q-1':>4} {'ms':>9}")
    for q in range(1, args.q_max + 1):
        g = ck_q(2, q)
        dim = metric_dimension(g)
        edim = edge_metric_dimension(g)
        print(f"{q:>3} {g.n:>4} {g.m:>4} {dim.value:>4} {edim.value:>5} {q - 1:>4} {edim.elapsed_ms:>9.1f}")


if __name__ == "__main__":
    main()
