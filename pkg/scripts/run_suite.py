"""Run the full claim suite and write a JSON report.

    python scripts/run_suite.py --out report.json --jobs 4
"""

import argparse
import sys

from metdim.experiments import SuiteConfig, dumps, report, run_suite


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--out", default="report.json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    cfg = SuiteConfig(seed=args.seed)
    results = run_suite(cfg, jobs=args.jobs)
    rep = report(results, cfg)
    with open(args.out, "w") as fh:
        fh.write(dumps(rep))
    for crit, ok in sorted(rep["summary"].items(), key=lambda kv: int(kv[0])):
        print(f"{'PASS' if ok else 'FAIL'} criterion {crit}")
    return 0 if rep["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
