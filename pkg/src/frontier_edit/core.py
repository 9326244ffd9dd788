"""Shared domain types: alphabets, sequences, problem instances, coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence as Seq


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Sorted set of code points with a dense index per symbol.

    Code points are Unicode ordinals for text input or byte values in byte mode.
    """

    symbols: tuple[int, ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if list(self.symbols) != sorted(set(self.symbols)):
            raise ValueError("alphabet symbols must be sorted and distinct")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.symbols)})

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, code_point: int) -> int:
        try:
            return self._index[code_point]
        except KeyError:
            raise KeyError(f"code point {code_point!r} not in alphabet") from None

    def encode(self, text: str | bytes, label: str | None = None) -> "Sequence":
        points = text if isinstance(text, (bytes, bytearray)) else map(ord, text)
        idx = self._index
        try:
            syms = tuple(idx[c] for c in points)
        except KeyError as exc:
            raise KeyError(f"symbol {exc.args[0]!r} not in alphabet") from None
        return Sequence(syms, self, label)

    def decode(self, seq: "Sequence") -> str:
        return "".join(chr(self.symbols[s]) for s in seq.symbols)


def build_alphabet(texts: Iterable[str | bytes]) -> Alphabet:
    """Alphabet of every distinct code point occurring in ``texts``."""
    points: set[int] = set()
    for t in texts:
        points.update(t if isinstance(t, (bytes, bytearray)) else map(ord, t))
    return Alphabet(tuple(sorted(points)))


@dataclass(frozen=True)
class Sequence:
    symbols: tuple[int, ...]
    alphabet: Alphabet
    label: str | None = None

    def __post_init__(self):
        size = self.alphabet.size
        if any(not 0 <= s < size for s in self.symbols):
            raise ValueError("sequence symbol outside alphabet range")

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def text(self) -> str:
        return self.alphabet.decode(self)


def encode_pair(x: str | bytes, y: str | bytes) -> tuple[Sequence, Sequence]:
    """Encode two texts over their joint alphabet."""
    alpha = build_alphabet([x, y])
    return alpha.encode(x), alpha.encode(y)


@dataclass(frozen=True)
class ProblemInstance:
    """Ordered pair with ``len(long) >= len(short)``; ``swapped`` records an exchange."""

    long: Sequence
    short: Sequence
    swapped: bool = False

    def __post_init__(self):
        if len(self.long) < len(self.short):
            raise ValueError("long sequence is shorter than short sequence")
        if self.long.alphabet != self.short.alphabet:
            raise AlphabetMismatch("sequences are over different alphabets")

    @property
    def n(self) -> int:
        return len(self.long)

    @property
    def m(self) -> int:
        return len(self.short)

    @property
    def main_diagonal(self) -> int:
        return self.n - self.m


def make_instance(x: Sequence, y: Sequence) -> ProblemInstance:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(
            f"alphabet mismatch: {x.alphabet.size} symbols vs {y.alphabet.size} symbols"
        )
    if len(x) >= len(y):
        return ProblemInstance(x, y, swapped=False)
    return ProblemInstance(y, x, swapped=True)


def instance_from_texts(x: str | bytes, y: str | bytes) -> ProblemInstance:
    return make_instance(*encode_pair(x, y))


@dataclass(frozen=True)
class CellCoord:
    """Edit-graph cell: row ``i`` indexes the short string, column ``j`` the long one."""

    i: int
    j: int

    @property
    def diagonal(self) -> int:
        return self.j - self.i

    def on_main_diagonal(self, n: int, m: int) -> bool:
        return self.j - self.i == n - m


def diagonal_of(c: CellCoord) -> int:
    return c.j - c.i


@dataclass
class WorkCounters:
    iterations: int = 0
    cell_touches: int = 0
    list_insertions: int = 0
    list_removals: int = 0
    candidate_visits: int = 0

    @property
    def work(self) -> int:
        return self.cell_touches + self.candidate_visits

    def as_dict(self) -> dict[str, int]:
        return {
            "iterations": self.iterations,
            "cell_touches": self.cell_touches,
            "list_insertions": self.list_insertions,
            "list_removals": self.list_removals,
            "candidate_visits": self.candidate_visits,
        }


def as_symbols(seq: Sequence | Seq[int]) -> tuple[int, ...]:
    return seq.symbols if isinstance(seq, Sequence) else tuple(seq)
