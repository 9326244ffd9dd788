"""Threshold-doubling diagonal-band edit distance.

For a threshold ``t`` only diagonals within ``(t - (n - m)) // 2`` of the band
``[0, n - m]`` can carry a path of cost at most ``t``; everything outside is
treated as infinite.
"""

from __future__ import annotations

import numpy as np

from .core import ProblemInstance, WorkCounters

_INF = np.iinfo(np.int64).max // 4


def _window(prev: np.ndarray, lo_prev: int, lo: int, hi: int) -> np.ndarray:
    out = np.full(hi - lo + 1, _INF, dtype=np.int64)
    s = max(lo, lo_prev)
    e = min(hi, lo_prev + len(prev) - 1)
    if s <= e:
        out[s - lo : e - lo + 1] = prev[s - lo_prev : e - lo_prev + 1]
    return out


def banded_distance_at_most(
    inst: ProblemInstance, t: int, counters: WorkCounters | None = None
) -> int | None:
    """Exact distance if it is at most ``t``, otherwise ``None``."""
    if t < 0:
        raise ValueError("threshold must be non-negative")
    n, m = inst.n, inst.m
    slack = t - (n - m)
    if slack < 0:
        return None
    p = slack // 2
    if m == 0:
        return n
    a = np.asarray(inst.long.symbols, dtype=np.int64)
    lo_prev, hi_prev = 0, min(n, n - m + p)
    prev = np.arange(lo_prev, hi_prev + 1, dtype=np.int64)
    touched = len(prev)
    for i, b in enumerate(inst.short.symbols, start=1):
        lo, hi = max(0, i - p), min(n, i + n - m + p)
        width = hi - lo + 1
        row = np.empty(width, dtype=np.int64)
        start = 0
        if lo == 0:
            row[0] = i
            start = 1
        j0 = lo + start
        if j0 <= hi:
            diag = _window(prev, lo_prev, j0 - 1, hi - 1) + (a[j0 - 1 : hi] != b)
            up = _window(prev, lo_prev, j0, hi) + 1
            row[start:] = np.minimum(diag, up)
        offs = np.arange(width, dtype=np.int64)
        row = np.minimum.accumulate(row - offs) + offs
        touched += width
        if row.min() > t:
            if counters is not None:
                counters.cell_touches += touched
            return None
        prev, lo_prev = row, lo
    if counters is not None:
        counters.cell_touches += touched
    s = int(prev[n - lo_prev])
    return s if s <= t else None


def ukkonen_distance(inst: ProblemInstance, counters: WorkCounters | None = None) -> int:
    counters = counters if counters is not None else WorkCounters()
    t = max(1, inst.n - inst.m)
    while True:
        counters.iterations += 1
        s = banded_distance_at_most(inst, t, counters)
        if s is not None:
            return s
        t *= 2
