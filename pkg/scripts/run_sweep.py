"""Length-ratio sweep on random strings; writes the CSV and prints the averages.

    python3 scripts/run_sweep.py --alphabet 4 --trials 20 --out sweep4.csv
"""

import argparse

from frontier_edit.bench import DEFAULT_RATIOS, SweepConfig, run_sweep, write_csv


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--base-len", type=int, default=1000)
    p.add_argument("--alphabet", type=int, default=4)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0x5EED)
    p.add_argument("--ratios", type=float, nargs="+", default=list(DEFAULT_RATIOS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="sweep.csv")
    args = p.parse_args()

    cfg = SweepConfig(args.base_len, tuple(args.ratios), args.alphabet, args.trials, args.seed)
    records, means = run_sweep(cfg, jobs=args.jobs)
    with open(args.out, "w", newline="") as fh:
        write_csv(records + means, fh)

    print(f"{'algo':9} {'ratio':>5} {'s':>9} {'s/m':>6} {'work':>12} {'ms':>9}")
    for r in means:
        print(
            f"{r.algorithm:9} {r.ratio:5.2f} {r.s:9.1f} {r.s / r.m if r.m else 0:6.3f} "
            f"{r.counters.cell_touches + r.counters.candidate_visits:12.0f} {r.ns_elapsed / 1e6:9.2f}"
        )


if __name__ == "__main__":
    main()
