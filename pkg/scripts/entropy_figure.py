#!/usr/bin/env python3
"""Relative-entropy histograms of favour and k-optimality over random TSP populations.

    python scripts/entropy_figure.py --pops 200 --k 5 10 18 --out results/entropy.csv

Prints the zero-entropy fraction per (method, k) and, with ``--plot``, saves a
bar chart per method next to the CSV (needs matplotlib).
"""

import argparse
import sys
from pathlib import Path

from ndrank.cli import STUDY_KS, main as cli_main
from ndrank.rankstats import BIN_EDGES


def read_hist(path):
    rows = [line.split(",") for line in Path(path).read_text().splitlines() if line and not line.startswith("#")][1:]
    hists = {}
    for method, k, lo, hi, count in rows:
        hists.setdefault((method, int(k)), []).append(int(count))
    return hists


def plot(hists, out):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    methods = sorted({m for m, _ in hists})
    fig, axes = plt.subplots(1, len(methods), figsize=(6 * len(methods), 4), squeeze=False)
    labels = ["0"] + [f"{hi:.2f}" for hi in BIN_EDGES[1:]]
    for ax, m in zip(axes[0], methods):
        for (mm, k), counts in sorted(hists.items()):
            if mm == m:
                ax.plot(range(len(counts)), counts, marker="o", label=f"k={k}")
        ax.set_title(m)
        ax.set_xticks(range(0, 21, 4), labels[::4])
        ax.set_xlabel("relative entropy bin (upper edge)")
        ax.legend()
    fig.tight_layout()
    fig.savefig(out)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, nargs="+", default=list(STUDY_KS))
    ap.add_argument("--pops", type=int, default=1000)
    ap.add_argument("--pc", type=float, default=0.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/entropy.csv")
    ap.add_argument("--plot", action="store_true")
    args = ap.parse_args()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    argv = ["entropy-study", "--pops", str(args.pops), "--pc", str(args.pc), "--seed", str(args.seed), "-o", args.out, "--k", *map(str, args.k)]
    if cli_main(argv):
        sys.exit(1)
    hists = read_hist(args.out)
    for (m, k), counts in sorted(hists.items()):
        print(f"{m:>7} k={k:<3} zero fraction {counts[0] / sum(counts):.3f}")
    if args.plot:
        plot(hists, Path(args.out).with_suffix(".png"))
