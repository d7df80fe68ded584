#!/usr/bin/env python3
"""Method comparison tables over a (k, pc) grid.

Full grid for one family (4 k values x 5 pc values x 20 trials x 7 methods,
roughly 45 minutes per family on one core at paper settings)::

    python scripts/comparison_grid.py --family tsp --out results/tsp

Single Table-1 cell::

    python scripts/comparison_grid.py --k 10 --pc 0 --out results/tsp_k10_pc0
"""

import argparse
import os
import sys

from ndrank.cli import main as cli_main

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", choices=("tsp", "jsp"), default="tsp")
    ap.add_argument("--k", type=int, nargs="+")
    ap.add_argument("--pc", type=float, nargs="+")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--generations", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    argv = ["compare", "--family", args.family, "--trials", str(args.trials), "--generations", str(args.generations),
            "--seed", str(args.seed), "--workers", str(args.workers), "--out-dir", args.out]
    if args.k:
        argv += ["--k", *map(str, args.k)]
    if args.pc:
        argv += ["--pc", *map(str, args.pc)]
    sys.exit(cli_main(argv))
