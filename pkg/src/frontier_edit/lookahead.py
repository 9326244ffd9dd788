"""Per-symbol next-occurrence tables.

``table.next[c][k]`` is the smallest 1-based position ``l >= k`` holding symbol
``c``, or ``length + 1`` when there is none.  Index 0 behaves like index 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Alphabet, Sequence


@dataclass(frozen=True)
class LookaheadTable:
    next: tuple[list[int], ...]
    length: int

    @property
    def sentinel(self) -> int:
        return self.length + 1

    @property
    def writes(self) -> int:
        return sum(len(row) for row in self.next)


def build_lookahead(seq: Sequence, alphabet: Alphabet | None = None) -> LookaheadTable:
    alphabet = alphabet or seq.alphabet
    n = len(seq)
    sym = seq.symbols
    rows = []
    for c in range(alphabet.size):
        row = [0] * (n + 2)
        nxt = n + 1
        row[n + 1] = nxt
        for k in range(n, 0, -1):
            if sym[k - 1] == c:
                nxt = k
            row[k] = nxt
        row[0] = nxt
        rows.append(row)
    return LookaheadTable(tuple(rows), n)


def next_match(table: LookaheadTable, symbol: int, pos: int) -> int:
    if not 1 <= pos <= table.length + 1:
        raise ValueError(f"position {pos} outside 1..{table.length + 1}")
    if not 0 <= symbol < len(table.next):
        raise ValueError(f"symbol index {symbol} outside alphabet")
    return table.next[symbol][pos]
