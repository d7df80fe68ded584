"""Command-line entry point: ``ndrank {gen,rank,entropy-study,run,compare}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io, ranking
from .experiment import (
    PAPER_JSP_PCS,
    PAPER_KS,
    PAPER_TSP_PCS,
    ExperimentGrid,
    format_table1,
    format_table2,
    run_grid,
    write_covers_csv,
    write_summary_csv,
    write_table1_csv,
    write_table2_csv,
)
from .moea import ALL_METHODS, MoeaConfig, run_moea
from .problems import generate
from .rankstats import entropy_studies

STUDY_KS = (5, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20)


def _open_out(path: str | None):
    return sys.stdout if path in (None, "-") else open(path, "w", newline="")


def cmd_gen(args) -> None:
    n = args.cities if args.family == "tsp" else args.jobs
    inst = generate(args.family, n, args.k, args.pc, args.seed)
    text = io.dumps_instance(inst)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)


def cmd_rank(args) -> None:
    points = io.read_points(args.points)
    ra = ranking.rank(points, args.method)
    out = sys.stdout
    out.write("index,rank,score\n")
    for i, (r, s) in enumerate(zip(ra.ranks, ra.scores)):
        out.write(f"{i},{int(r)},{io.fmt(s)}\n")


def cmd_entropy_study(args) -> None:
    hists = []
    for k in args.k:
        by_method = entropy_studies(k, args.pops, args.popsize, args.seed, tuple(args.methods), args.cities, args.pc)
        hists.extend(by_method[m] for m in args.methods)
        if args.verbose:
            summary = ", ".join(f"{m} zero={by_method[m].zero_fraction:.3f}" for m in args.methods)
            print(f"k={k}: {summary}", file=sys.stderr)
    meta = {"pops": args.pops, "popsize": args.popsize, "seed": args.seed, "cities": args.cities, "pc": args.pc}
    with _open_out(args.out) as out:
        io.write_comments(out, meta)
        out.write("method,k,bin_lo,bin_hi,count\n")
        for h in hists:
            for method, k, lo, hi, count in h.rows():
                out.write(f"{method},{k},{io.fmt(lo)},{io.fmt(hi)},{count}\n")


def cmd_run(args) -> None:
    if args.instance:
        inst = io.read_instance(args.instance)
    else:
        inst = generate(args.family, args.n, args.k, args.pc, args.instance_seed)
    cfg = MoeaConfig(args.popsize, args.generations, args.tournament, args.archive, args.method, args.seed)
    t0 = time.perf_counter()
    archive = run_moea(inst, cfg)
    wall = time.perf_counter() - t0
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    meta = {"family": inst.family, "k": inst.k, "n": inst.n, "instance_seed": inst.seed, "method": cfg.method.value, "seed": cfg.seed}
    with open(f"{prefix}.points.csv", "w", newline="") as f:
        io.write_points(f, archive.objectives, meta)
    with open(f"{prefix}.genomes.txt", "w") as f:
        io.write_genomes(f, archive.genomes)
    record = {
        "config": {**vars(cfg), "method": cfg.method.value},
        "instance": {key: v for key, v in io.instance_to_dict(inst).items() if key in ("family", "params", "seed")},
        "archive_size": len(archive),
        "evaluations": cfg.popsize + cfg.generations * (cfg.popsize - 1),
        "wall_time_s": round(wall, 3),
    }
    Path(f"{prefix}.json").write_text(json.dumps(record, indent=2) + "\n")
    print(f"archived {len(archive)} points in {wall:.2f}s -> {prefix}.points.csv", file=sys.stderr)


def cmd_compare(args) -> None:
    pcs = tuple(args.pc) if args.pc else (PAPER_TSP_PCS if args.family == "tsp" else PAPER_JSP_PCS)
    grid = ExperimentGrid(
        family=args.family,
        ks=tuple(args.k),
        pcs=pcs,
        methods=tuple(args.methods),
        trials=args.trials,
        base_seed=args.seed,
        n=args.n,
        popsize=args.popsize,
        generations=args.generations,
        tournament_size=args.tournament,
        archive_capacity=args.archive,
        threshold=args.threshold,
        bonferroni_m=args.bonferroni_m,
    )

    def progress(cell):
        print(f"done {cell.family} k={cell.k} pc={io.fmt(cell.pc)}", file=sys.stderr)

    cells = run_grid(grid, workers=args.workers, progress=progress)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, writer in (
        ("covers.csv", write_covers_csv),
        ("summary.csv", write_summary_csv),
        ("table1.csv", write_table1_csv),
        ("table2.csv", write_table2_csv),
    ):
        with open(out / name, "w", newline="") as f:
            writer(f, grid, cells)
    t1, t2 = format_table1(grid, cells), format_table2(cells)
    (out / "table1.txt").write_text(t1)
    (out / "table2.txt").write_text(t2)
    sys.stdout.write(t1 + "\n" + t2)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ndrank", description="Ranking nondominated points in many-objective search.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a problem instance file")
    g.add_argument("family", choices=("tsp", "jsp"))
    g.add_argument("--cities", type=int, default=30)
    g.add_argument("--jobs", type=int, default=30)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--pc", type=float, required=True, help="correlation parameter (TSPpc or JSPpc)")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", "-o")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("rank", help="rank the points of a point-set CSV")
    r.add_argument("points")
    r.add_argument("--method", choices=sorted(ranking.RANKERS), default="ar")
    r.set_defaults(func=cmd_rank)

    e = sub.add_parser("entropy-study", help="relative-entropy histograms over random TSP populations")
    e.add_argument("--k", type=int, nargs="+", default=list(STUDY_KS))
    e.add_argument("--pops", type=int, default=1000)
    e.add_argument("--popsize", type=int, default=50)
    e.add_argument("--cities", type=int, default=30)
    e.add_argument("--pc", type=float, default=0.0)
    e.add_argument("--methods", nargs="+", default=["favour", "ko"], choices=sorted(ranking.RANKERS))
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out", "-o")
    e.add_argument("--verbose", "-v", action="store_true")
    e.set_defaults(func=cmd_entropy_study)

    method_names = [m.value for m in ALL_METHODS]

    def moea_flags(sp):
        sp.add_argument("--popsize", type=int, default=20)
        sp.add_argument("--generations", type=int, default=500)
        sp.add_argument("--tournament", type=int, default=5)
        sp.add_argument("--archive", type=int, default=100)
        sp.add_argument("--seed", type=int, default=0)

    u = sub.add_parser("run", help="one MOEA run")
    u.add_argument("--instance", help="instance file from `gen`; otherwise one is generated")
    u.add_argument("--family", choices=("tsp", "jsp"), default="tsp")
    u.add_argument("--n", type=int, default=30, help="cities or jobs")
    u.add_argument("--k", type=int, default=10)
    u.add_argument("--pc", type=float, default=0.0)
    u.add_argument("--instance-seed", type=int, default=0)
    u.add_argument("--method", choices=method_names, default="ARF")
    u.add_argument("--out", "-o", required=True, help="output prefix")
    moea_flags(u)
    u.set_defaults(func=cmd_run)

    c = sub.add_parser("compare", help="paired-trial method comparison over a grid")
    c.add_argument("--family", choices=("tsp", "jsp"), default="tsp")
    c.add_argument("--k", type=int, nargs="+", default=list(PAPER_KS))
    c.add_argument("--pc", type=float, nargs="+", help="defaults to the five paper values for the family")
    c.add_argument("--methods", nargs="+", choices=method_names, default=method_names)
    c.add_argument("--trials", type=int, default=20)
    c.add_argument("--n", type=int, default=30, help="cities or jobs")
    c.add_argument("--threshold", type=int, help="wins needed for significance (default 17 of 20, scaled)")
    c.add_argument("--bonferroni-m", type=int, help="comparisons for the Bonferroni factor (default: number of pairs)")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--out-dir", required=True)
    moea_flags(c)
    c.set_defaults(func=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError) as e:
        print(f"ndrank {args.command}: error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
