"""Row-by-row Levenshtein dynamic program in two rows of storage."""

from __future__ import annotations

import numpy as np

from .core import ProblemInstance


def basic_distance(inst: ProblemInstance) -> int:
    n, m = inst.n, inst.m
    if m == 0:
        return n
    a = np.asarray(inst.long.symbols, dtype=np.int64)
    cols = np.arange(n + 1, dtype=np.int64)
    prev = cols.copy()
    row = np.empty(n + 1, dtype=np.int64)
    for i, b in enumerate(inst.short.symbols, start=1):
        row[0] = i
        # diagonal and vertical moves first; horizontal chain via running minimum
        np.minimum(prev[:-1] + (a != b), prev[1:] + 1, out=row[1:])
        np.minimum.accumulate(row - cols, out=row)
        row += cols
        prev, row = row, prev
    return int(prev[n])

