"""Command-line entry point: ``dist``, ``verify``, ``sweep`` and ``table``."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence as Seq

from .algorithms import ALGORITHMS
from .bench import DEFAULT_RATIOS, SweepConfig, format_table, read_pairs_file, run_sweep, run_table, write_csv
from .core import make_instance
from .frontier import frontier_distance
from .rng import SplitMix64, derive_seed, random_sequence, standard_alphabet
from .seqio import SequenceFormatError, load_pair


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frontier-edit", description="Exact edit distance engine and benchmarks.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="edit distance between two files")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("--algo", choices=list(ALGORITHMS), default="frontier")
    d.add_argument("--format", choices=["text", "fasta"], default="text")
    d.add_argument("--bytes", action="store_true", help="compare raw bytes instead of code points")
    d.add_argument("--trace", action="store_true", help="per-level frontier trace on stderr")
    d.add_argument("--counters", action="store_true", help="print work counters")

    v = sub.add_parser("verify", help="differential test of all algorithms on seeded random pairs")
    v.add_argument("--pairs", type=int, default=1000)
    v.add_argument("--max-len", type=int, default=64)
    v.add_argument("--alphabet", type=int, default=4)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--debug", action="store_true", help="also check frontier list invariants")

    s = sub.add_parser("sweep", help="random-string length-ratio sweep to CSV")
    s.add_argument("--base-len", type=int, default=1000)
    s.add_argument("--ratios", type=float, nargs="+", default=list(DEFAULT_RATIOS))
    s.add_argument("--alphabet", type=int, default=4)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0x5EED)
    s.add_argument("--algos", nargs="+", choices=list(ALGORITHMS), default=list(ALGORITHMS))
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", required=True)

    t = sub.add_parser("table", help="pairwise comparison report")
    t.add_argument("--pairs-file", required=True)
    return p


def _dist(args) -> int:
    inst = load_pair(args.a, args.b, args.format, raw_bytes=args.bytes)
    if args.algo == "frontier":
        s, counters = frontier_distance(inst, trace=sys.stderr if args.trace else None)
    else:
        s, counters = ALGORITHMS[args.algo](inst)
    print(s)
    if args.counters:
        for key, value in counters.as_dict().items():
            print(f"{key}\t{value}")
    return 0


def _verify(args) -> int:
    if args.pairs < 0 or args.max_len < 0 or args.alphabet < 1:
        print("verify: --pairs, --max-len must be >= 0 and --alphabet >= 1", file=sys.stderr)
        return 2
    alpha = standard_alphabet(args.alphabet)
    for index in range(args.pairs):
        pair_seed = derive_seed(args.seed, index)
        rng = SplitMix64(pair_seed)
        x = random_sequence(rng, rng.uniform_int(0, args.max_len), args.alphabet, alpha)
        y = random_sequence(rng, rng.uniform_int(0, args.max_len), args.alphabet, alpha)
        inst = make_instance(x, y)
        results = {name: fn(inst)[0] for name, fn in ALGORITHMS.items()}
        if args.debug:
            results["frontier"] = frontier_distance(inst, debug=True)[0]
        if len(set(results.values())) != 1:
            print(
                f"MISMATCH pair={index} seed={pair_seed} len_a={len(x)} len_b={len(y)} "
                + " ".join(f"{k}={v}" for k, v in results.items()),
            )
            print(f"a={x.text()}\nb={y.text()}")
            return 1
    print(f"ok: {args.pairs} pairs agree (max_len={args.max_len}, alphabet={args.alphabet}, seed={args.seed})")
    return 0


def _sweep(args) -> int:
    try:
        cfg = SweepConfig(args.base_len, tuple(args.ratios), args.alphabet, args.trials, args.seed, tuple(args.algos))
    except ValueError as exc:
        print(f"sweep: {exc}", file=sys.stderr)
        return 2
    records, means = run_sweep(cfg, jobs=args.jobs)
    with open(args.out, "w", newline="") as fh:
        write_csv(records + means, fh)
    return 0


def _table(args) -> int:
    print(format_table(run_table(read_pairs_file(args.pairs_file))), end="")
    return 0


def main(argv: Seq[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    handler = {"dist": _dist, "verify": _verify, "sweep": _sweep, "table": _table}[args.command]
    try:
        return handler(args)
    except (SequenceFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def cli_main(argv: Seq[str] | None = None) -> int:
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
