"""Random-pair sweeps over length ratios and the pairwise comparison table."""

from __future__ import annotations

import csv
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .algorithms import ALGORITHMS
from .core import ProblemInstance, WorkCounters, make_instance
from .rng import SplitMix64, derive_seed, random_sequence, standard_alphabet
from .seqio import load_pair

DEFAULT_RATIOS = (1.00, 1.25, 1.50, 1.75, 2.00, 2.25, 2.50, 2.75, 3.00)
CSV_COLUMNS = ("algorithm", "ratio", "trial", "n", "m", "s", "ns_elapsed", "cell_touches", "iterations")


@dataclass(frozen=True)
class SweepConfig:
    base_len: int = 1000
    ratios: tuple[float, ...] = DEFAULT_RATIOS
    alphabet_size: int = 4
    trials: int = 100
    seed: int = 0x5EED
    algorithms: tuple[str, ...] = ("frontier", "ukkonen", "basic")

    def __post_init__(self):
        if any(r < 1 for r in self.ratios):
            raise ValueError("ratios must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.alphabet_size < 2:
            raise ValueError("alphabet_size must be >= 2")
        if self.base_len < 0:
            raise ValueError("base_len must be >= 0")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")


@dataclass
class BenchRecord:
    algorithm: str
    ratio: float
    trial: int | str
    n: int
    m: int
    s: float
    ns_elapsed: float
    counters: WorkCounters = field(default_factory=WorkCounters)

    def row(self) -> list[str]:
        cells = (self.n, self.m, self.s, self.ns_elapsed, self.counters.cell_touches, self.counters.iterations)
        return [self.algorithm, f"{self.ratio:.2f}", str(self.trial)] + [_fmt(v) for v in cells]


def _fmt(v: float) -> str:
    return str(v) if isinstance(v, int) else f"{v:.4f}"


def sweep_pair(cfg: SweepConfig, ratio_index: int, trial: int) -> ProblemInstance:
    rng = SplitMix64(derive_seed(cfg.seed, ratio_index, trial))
    alpha = standard_alphabet(cfg.alphabet_size)
    m = cfg.base_len
    n = round(cfg.ratios[ratio_index] * m)
    long = random_sequence(rng, n, cfg.alphabet_size, alpha)
    short = random_sequence(rng, m, cfg.alphabet_size, alpha)
    return make_instance(long, short)


def _run_trial(args: tuple[SweepConfig, int, int]) -> list[BenchRecord]:
    cfg, ri, trial = args
    inst = sweep_pair(cfg, ri, trial)
    out = []
    for name in cfg.algorithms:
        t0 = time.perf_counter_ns()
        s, counters = ALGORITHMS[name](inst)
        elapsed = time.perf_counter_ns() - t0
        out.append(BenchRecord(name, cfg.ratios[ri], trial, inst.n, inst.m, s, elapsed, counters))
    distances = {r.s for r in out}
    if len(distances) != 1:
        raise RuntimeError(f"algorithms disagree at ratio {cfg.ratios[ri]} trial {trial}: {distances}")
    return out


def averages(records: Iterable[BenchRecord]) -> list[BenchRecord]:
    groups: dict[tuple[str, float], list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.algorithm, r.ratio), []).append(r)
    out = []
    for (name, ratio), rs in groups.items():
        mean = statistics.fmean
        c = WorkCounters(
            iterations=mean(r.counters.iterations for r in rs),
            cell_touches=mean(r.counters.cell_touches for r in rs),
            candidate_visits=mean(r.counters.candidate_visits for r in rs),
        )
        out.append(
            BenchRecord(
                name, ratio, "mean", mean(r.n for r in rs), mean(r.m for r in rs),
                mean(r.s for r in rs), mean(r.ns_elapsed for r in rs), c,
            )
        )
    order = list(ALGORITHMS)
    return sorted(out, key=lambda r: (r.ratio, order.index(r.algorithm)))


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> tuple[list[BenchRecord], list[BenchRecord]]:
    """Per-trial records ordered by ``(ratio, trial)`` and per-``(algorithm, ratio)`` means."""
    tasks = [(cfg, ri, t) for ri in range(len(cfg.ratios)) for t in range(cfg.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_run_trial, tasks, chunksize=4))
    else:
        chunks = [_run_trial(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    return records, averages(records)


def write_csv(records: Iterable[BenchRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.row())


@dataclass(frozen=True)
class TableRow:
    label: str
    length: float
    seconds: dict[str, float]
    s: int


def read_pairs_file(path: str | Path) -> list[tuple[str, str, str, str, str]]:
    rows = []
    base = Path(path).parent
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ValueError(f"{path}: line {lineno}: expected 5 tab-separated fields, got {len(parts)}")
        la, pa, lb, pb, fmt = (p.strip() for p in parts)
        pa = str((base / pa)) if not Path(pa).is_absolute() else pa
        pb = str((base / pb)) if not Path(pb).is_absolute() else pb
        rows.append((la, pa, lb, pb, fmt))
    return rows


def run_table(pairs: list[tuple[str, str, str, str, str]], algorithms: Iterable[str] = tuple(ALGORITHMS)) -> list[TableRow]:
    out = []
    for la, pa, lb, pb, fmt in pairs:
        inst = load_pair(pa, pb, fmt)
        secs: dict[str, float] = {}
        dists = set()
        for name in algorithms:
            t0 = time.perf_counter()
            s, _ = ALGORITHMS[name](inst)
            secs[name] = time.perf_counter() - t0
            dists.add(s)
        if len(dists) != 1:
            raise RuntimeError(f"algorithms disagree on {la} vs {lb}: {dists}")
        out.append(TableRow(f"{la} vs {lb}", (inst.n + inst.m) / 2, secs, dists.pop()))
    return out


def format_table(rows: list[TableRow]) -> str:
    names = list(rows[0].seconds) if rows else list(ALGORITHMS)
    head = ["pair", "avg_length"] + [f"{n}_sec" for n in names] + ["s"]
    lines = ["\t".join(head)]
    for r in rows:
        lines.append("\t".join([r.label, f"{r.length:.1f}"] + [f"{r.seconds[n]:.4f}" for n in names] + [str(r.s)]))
    return "\n".join(lines) + "\n"
