"""Output-sensitive edit distance over dominance-pruned frontier lists.

The edit graph is split along the main diagonal ``j - i = n - m``.  On the left
part vertical moves cost 2 and horizontal moves are free; on the right part the
roles swap.  Matches cost 0, substitutions 1, and ``n - m`` is added to the
final score.  Under this scoring rows of the left part (columns of the right
part) are non-increasing, so each score level ``D`` is described by the
furthest row reached on every diagonal, a step function whose jump points are
the dominant cells kept in the list.

The right part is handled by the same code on the transposed problem: rows
index the long string, and its main diagonal is ``m - n``.  Both lists share the
main diagonal, which is reconciled after every level.

Internally a half works in its own frame: ``rows`` are the row string, ``cols``
the column string, ``R``/``C`` their lengths and ``M = C - R`` its main
diagonal.  All cells of the half satisfy ``j - i <= M``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, TextIO

from .core import ProblemInstance, WorkCounters
from .lookahead import LookaheadTable, build_lookahead

NEG = -(1 << 62)
INF = 1 << 62


class Half(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class RescoredCosts:
    half: Half
    final_offset: int
    away_indel_cost: int = 2
    toward_indel_cost: int = 0
    match: int = 0
    substitution: int = 1


@dataclass(frozen=True)
class FrontierCell:
    """A list cell in original coordinates: row ``i`` of the short string."""

    i: int
    j: int
    value: int


class FrontierInvariantError(AssertionError):
    pass


class FrontierList:
    """Doubly linked list keyed by column; at most one cell per column.

    ``next``/``prev`` are arrays indexed by column, with slot ``ncols + 1``
    acting as the circular head/tail sentinel.
    """

    def __init__(self, ncols: int):
        self.end = ncols + 1
        size = ncols + 2
        self.next = [self.end] * size
        self.prev = [self.end] * size
        self.row = [0] * size
        self.value = [0] * size
        self.size = 0

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        c = self.next[self.end]
        while c != self.end:
            yield c
            c = self.next[c]

    @property
    def head(self) -> int:
        return self.next[self.end]

    @property
    def tail(self) -> int:
        return self.prev[self.end]

    def insert_before(self, before: int, col: int, row: int, value: int) -> None:
        p = self.prev[before]
        self.next[p] = col
        self.prev[col] = p
        self.next[col] = before
        self.prev[before] = col
        self.row[col] = row
        self.value[col] = value
        self.size += 1

    def remove(self, col: int) -> int:
        """Unlink ``col`` and return the column that followed it."""
        p, q = self.prev[col], self.next[col]
        self.next[p] = q
        self.prev[q] = p
        self.size -= 1
        return q

    def cells(self) -> list[tuple[int, int, int]]:
        """``(row, col, value)`` triples, head to tail."""
        return [(self.row[c], c, self.value[c]) for c in self]


class HalfFrontier:
    def __init__(self, half: Half, rows: tuple[int, ...], cols: tuple[int, ...], col_table: LookaheadTable):
        self.half = half
        self.rows = rows
        self.cols = cols
        self.next = col_table.next
        self.R = len(rows)
        self.C = len(cols)
        self.M = self.C - self.R
        self.cells = FrontierList(self.C)
        # F_D(M-1) of the level just swept; decides whether a synced main cell is a jump
        self.before_main = NEG

    def process_candidate(self, base: int, k: int, cur: int, cursor: int, D: int, counters: WorkCounters) -> tuple[int, int]:
        """Slide ``(base, base + k)`` to the end of its match run; insert it if it lifts the level.

        Returns the end row and the list cursor after removing the following
        cells the new cell dominates, i.e. every one whose column is at or
        before the new cell's column.
        """
        rows, cols, R = self.rows, self.cols, self.R
        r = base
        while r < R and rows[r] == cols[r + k]:
            r += 1
        counters.cell_touches += r - base + 1
        if r <= cur:
            return r, cursor
        lst = self.cells
        col = r + k
        end = lst.end
        removed = 0
        while cursor != end and cursor <= col:
            cursor = lst.remove(cursor)
            removed += 1
        counters.list_removals += removed
        lst.insert_before(cursor, col, r, D)
        counters.list_insertions += 1
        return r, cursor

    def sweep(self, D: int, counters: WorkCounters) -> int:
        """Compute level ``D`` on this half; returns the furthest main-diagonal row.

        Events are visited in increasing diagonal order: list cells (a value
        ``D-1`` cell offers a substitution on its own diagonal, a value ``D-2``
        cell a vertical move onto the diagonal below it), the next match in the
        current row located through the lookahead table, and finally the main
        diagonal.  Between events the level is flat and nothing is touched.
        """
        lst = self.cells
        end = lst.end
        row_of, val_of = lst.row, lst.value
        nxt_of, prv_of = lst.next, lst.prev
        rows, nxt = self.rows, self.next
        visits = removed = 0
        R, M = self.R, self.M
        cur = NEG  # furthest row at level D on the last processed diagonal
        kc = NEG
        f1 = NEG  # level D-1 step function at the current diagonal
        f2 = NEG  # level D-2 step function one diagonal up
        seed = 0 if D == 0 and M >= 0 else INF
        cursor = lst.head
        while True:
            if cursor != end:
                r = row_of[cursor]
                ev_list = cursor - r if val_of[cursor] == D - 1 else cursor - r - 1
            else:
                ev_list = INF
            if NEG < cur < R:
                ev_match = nxt[rows[cur]][cur + kc + 2] - cur - 1
            else:
                ev_match = INF
            k = ev_list if ev_list < ev_match else ev_match
            if seed < k:
                k = seed
            if M < k:
                k = M
            visits += 1
            while cursor != end:
                r = row_of[cursor]
                if val_of[cursor] == D - 1:
                    if cursor - r != k:
                        break
                    f1 = r
                    if cur <= r:
                        cursor = nxt_of[cursor]
                        continue
                else:
                    if cursor - r - 1 != k:
                        break
                    f2 = r
                # expired or dominated: unlink in place
                p, q = prv_of[cursor], nxt_of[cursor]
                nxt_of[p] = q
                prv_of[q] = p
                lst.size -= 1
                removed += 1
                cursor = q
            if k == M:
                self.before_main = cur
            base = cur
            if k == seed:
                base = max(base, 0)
                seed = INF
            if NEG < f1 < R and f1 + 1 > base:
                base = f1 + 1
            if NEG < f2 < R and f2 + 1 > base:
                base = f2 + 1
            if base > NEG:
                new_row, cursor = self.process_candidate(base, k, cur, cursor, D, counters)
                if new_row > cur:
                    cur = new_row
            kc = k
            if k == M:
                counters.candidate_visits += visits
                counters.list_removals += removed
                return cur

    def set_main(self, row: int, D: int, counters: WorkCounters) -> None:
        """Adopt the reconciled level-``D`` main-diagonal row."""
        if row <= NEG:
            return
        lst = self.cells
        M = self.M
        tail = lst.tail
        if tail != lst.end and lst.value[tail] == D and tail - lst.row[tail] == M:
            if lst.row[tail] == row:
                return
            lst.remove(tail)
            counters.list_removals += 1
            counters.list_insertions += 1
            lst.insert_before(lst.end, row + M, row, D)
        elif row > self.before_main:
            lst.insert_before(lst.end, row + M, row, D)
            counters.list_insertions += 1


@dataclass
class FrontierState:
    inst: ProblemInstance
    left: HalfFrontier
    right: HalfFrontier
    D: int = 0
    boundary: int = NEG  # furthest row (original frame) on the main diagonal at level D
    counters: WorkCounters = field(default_factory=WorkCounters)

    @property
    def offset(self) -> int:
        return self.inst.n - self.inst.m

    def finished(self) -> bool:
        return self.boundary == self.inst.m

    def list_cells(self, half: Half) -> list[FrontierCell]:
        """List contents, head to tail, in original ``(i, j)`` coordinates."""
        if half is Half.LEFT:
            return [FrontierCell(r, c, v) for r, c, v in self.left.cells.cells()]
        return [FrontierCell(c, r, v) for r, c, v in self.right.cells.cells()]

    def boundary_cells(self) -> list[FrontierCell]:
        off = self.offset
        return [c for c in self.list_cells(Half.LEFT) if c.j - c.i == off]


def initialize_frontier(
    inst: ProblemInstance,
    lookahead_long: LookaheadTable | None = None,
    lookahead_short: LookaheadTable | None = None,
    counters: WorkCounters | None = None,
) -> FrontierState:
    """Score-0 lists for both halves, synchronised on the main diagonal."""
    la = lookahead_long or build_lookahead(inst.long)
    lb = lookahead_short or build_lookahead(inst.short)
    a, b = inst.long.symbols, inst.short.symbols
    state = FrontierState(
        inst,
        left=HalfFrontier(Half.LEFT, b, a, la),
        right=HalfFrontier(Half.RIGHT, a, b, lb),
        counters=counters if counters is not None else WorkCounters(),
    )
    _run_level(state, 0)
    return state


def _run_level(state: FrontierState, D: int) -> None:
    c = state.counters
    left_main = state.left.sweep(D, c)
    right_main = state.right.sweep(D, c)
    sync_main_diagonal(state, D, left_main, right_main)


def sync_main_diagonal(state: FrontierState, D: int, left_main: int, right_main: int) -> int:
    """Reconcile both halves' level-``D`` main-diagonal rows; constant time."""
    off = state.offset
    right_as_left = right_main - off if right_main > NEG else NEG
    best = max(left_main, right_as_left)
    state.left.set_main(best, D, state.counters)
    state.right.set_main(best + off if best > NEG else NEG, D, state.counters)
    state.D = D
    state.boundary = best
    return best


def advance_iteration(state: FrontierState) -> FrontierState:
    if state.finished():
        raise ValueError("terminal cell already reached")
    D = state.D + 1
    state.counters.iterations += 1
    _run_level(state, D)
    return state


def check_invariants(state: FrontierState) -> None:
    """Raise ``FrontierInvariantError`` if the lists break a structural law.

    Meant for the start of an iteration, when every value must be ``D`` or
    ``D - 1`` for the level ``D`` just completed.
    """
    D = state.D
    for half, hf in ((Half.LEFT, state.left), (Half.RIGHT, state.right)):
        cells = hf.cells.cells()
        if len(cells) != len(hf.cells):
            raise FrontierInvariantError(f"{half.value}: size counter out of step")
        by_diag: dict[int, list[int]] = {}
        by_row: dict[int, list[int]] = {}
        last_col = -1
        last_event = NEG
        for r, c, v in cells:
            if c <= last_col:
                raise FrontierInvariantError(f"{half.value}: columns not strictly increasing at {c}")
            last_col = c
            k = c - r
            if k > hf.M:
                raise FrontierInvariantError(f"{half.value}: cell ({r},{c}) beyond main diagonal")
            if v not in (D, D - 1):
                raise FrontierInvariantError(f"{half.value}: value {v} outside {{{D - 1},{D}}}")
            event = k if v == D else k - 1
            if event < last_event:
                raise FrontierInvariantError(f"{half.value}: list order breaks diagonal sweep order")
            last_event = event
            by_diag.setdefault(k, []).append(v)
            by_row.setdefault(r, []).append(v)
        for groups, what in ((by_diag, "diagonal"), (by_row, "row")):
            for key, vals in groups.items():
                if len(vals) > 2 or (len(vals) == 2 and abs(vals[0] - vals[1]) != 1):
                    raise FrontierInvariantError(f"{half.value}: {what} {key} holds values {vals}")


TraceSink = Callable[[str], None]


def _trace_line(state: FrontierState) -> str:
    return (
        f"D={state.D} left={len(state.left.cells)} right={len(state.right.cells)} "
        f"boundary_row={state.boundary if state.boundary > NEG else '-'}"
    )


def frontier_distance(
    inst: ProblemInstance,
    counters: WorkCounters | None = None,
    *,
    debug: bool = False,
    trace: TextIO | TraceSink | None = None,
    observer: Callable[[FrontierState], None] | None = None,
) -> tuple[int, WorkCounters]:
    """Edit distance and the work counters of the computation.

    ``debug`` checks the list invariants after every level, ``trace`` receives
    one line per level, ``observer`` is called with the state after every level.
    """
    counters = counters if counters is not None else WorkCounters()
    if inst.m == 0:
        return inst.n, counters
    state = initialize_frontier(inst, counters=counters)
    emit = None
    if trace is not None:
        emit = trace if callable(trace) else (lambda line: print(line, file=trace))
    while True:
        if debug:
            check_invariants(state)
        if emit is not None:
            emit(_trace_line(state))
        if observer is not None:
            observer(state)
        if state.finished():
            break
        advance_iteration(state)
    internal = state.D
    assert internal >= 0
    return internal + state.offset, counters


def frontier(inst: ProblemInstance) -> int:
    return frontier_distance(inst)[0]


def trace_to_stderr(line: str) -> None:
    print(line, file=sys.stderr)
