import itertools

import pytest
from hypothesis import given, settings, strategies as st

from frontier_edit import WorkCounters, instance_from_texts
from frontier_edit.core import encode_pair, make_instance
from frontier_edit.frontier import (
    FrontierList,
    Half,
    HalfFrontier,
    check_invariants,
    frontier_distance,
    initialize_frontier,
)
from frontier_edit.lookahead import build_lookahead
from oracles import full_dp, levenshtein, rescored_matrix


def run(a, b, **kw):
    return frontier_distance(instance_from_texts(a, b), **kw)


def levels(inst):
    seen = []
    frontier_distance(inst, observer=lambda st: seen.append((st.D, st.list_cells(Half.LEFT), st.list_cells(Half.RIGHT))))
    return seen


def test_worked_example_distance_and_phases(worked):
    s, c = frontier_distance(worked, debug=True)
    assert s == 7
    assert c.iterations == 4
    assert [d for d, _, _ in levels(worked)] == [0, 1, 2, 3, 4]


def test_worked_example_score0_cells_distinct_rows_cols_diagonals(worked):
    state = initialize_frontier(worked)
    cells = state.list_cells(Half.LEFT)
    assert cells and all(c.value == 0 for c in cells)
    for key in (lambda c: c.i, lambda c: c.j, lambda c: c.j - c.i):
        assert len({key(c) for c in cells}) == len(cells)
    assert all(c.j - c.i <= worked.n - worked.m for c in cells)


def test_identical_strings_need_no_iteration():
    s, c = run("AAAA", "AAAA")
    assert (s, c.iterations) == (0, 0)
    state = initialize_frontier(instance_from_texts("AAAA", "AAAA"))
    assert state.finished()


@pytest.mark.parametrize("a", ["A", "ACGT", "GATTACA"])
def test_empty_short_string(a):
    assert run(a, "") == (len(a), WorkCounters())


def test_disjoint_symbols_initialization():
    state = initialize_frontier(instance_from_texts("BBBB", "A"))
    assert [(c.i, c.j, c.value) for c in state.list_cells(Half.LEFT)] == [(0, 0, 0)]
    assert run("BBBB", "A")[0] == 4


def test_equal_lengths_share_main_diagonal_at_start():
    inst = instance_from_texts("ACGTTA", "ACGAAA")
    state = initialize_frontier(inst)
    # main diagonal is diagonal 0; both halves start on it from the origin
    assert state.boundary == 3
    left_main = [c for c in state.list_cells(Half.LEFT) if c.j == c.i]
    right_main = [c for c in state.list_cells(Half.RIGHT) if c.j == c.i]
    assert left_main == right_main == [left_main[0]]
    assert (left_main[0].i, left_main[0].value) == (3, 0)


def test_one_sided_progress_suffix_of_novel_symbols():
    inst = instance_from_texts("ACGTACGTWXYZ", "ACGTACGT")
    boundaries = []
    s, c = frontier_distance(inst, observer=lambda st: boundaries.append((st.boundary, st.boundary_cells())))
    assert s == inst.n - inst.m == levenshtein("ACGTACGTWXYZ", "ACGTACGT")
    assert c.iterations == 0
    state = initialize_frontier(inst)
    off = inst.n - inst.m
    assert [(x.i, x.j) for x in state.list_cells(Half.RIGHT)] == [(inst.m, inst.m + off)]


def test_process_candidate_slides_to_run_end():
    inst = instance_from_texts("XX", "XX")
    la = build_lookahead(inst.long)
    half = HalfFrontier(Half.LEFT, inst.short.symbols, inst.long.symbols, la)
    c = WorkCounters()
    row, cursor = half.process_candidate(0, 0, -1, half.cells.end, 0, c)
    assert row == 2
    assert half.cells.cells() == [(2, 2, 0)]
    assert c.list_insertions == 1


def test_process_candidate_removes_same_column_cell():
    inst = instance_from_texts("ABCDE", "AXC")
    la = build_lookahead(inst.long)
    half = HalfFrontier(Half.LEFT, inst.short.symbols, inst.long.symbols, la)
    lst = half.cells
    lst.insert_before(lst.end, 2, 0, 0)
    c = WorkCounters()
    half.process_candidate(2, 0, -1, lst.head, 1, c)
    assert lst.cells() == [(3, 3, 1)]
    half2 = HalfFrontier(Half.LEFT, inst.short.symbols, inst.long.symbols, la)
    half2.cells.insert_before(half2.cells.end, 3, 1, 0)
    half2.process_candidate(3, 0, -1, half2.cells.head, 1, c)
    assert [col for _, col, _ in half2.cells.cells()] == [3]


def test_frontier_list_operations():
    lst = FrontierList(6)
    for col in (1, 3, 5):
        lst.insert_before(lst.end, col, col // 2, 0)
    assert list(lst) == [1, 3, 5]
    assert lst.remove(3) == 5
    lst.insert_before(5, 4, 2, 1)
    assert lst.cells() == [(0, 1, 0), (2, 4, 1), (2, 5, 0)]
    assert len(lst) == 3 and lst.head == 1 and lst.tail == 5


def test_trace_emits_one_line_per_level(worked):
    lines = []
    frontier_distance(worked, trace=lines.append)
    assert len(lines) == 5
    assert lines[0].startswith("D=0 ") and "boundary_row=7" in lines[-1]


def test_exhaustive_binary_up_to_length_4():
    words = ["".join(p) for L in range(5) for p in itertools.product("ab", repeat=L)]
    for a, b in itertools.product(words, repeat=2):
        if not (a or b):
            continue
        inst = instance_from_texts(a, b)
        s, c = frontier_distance(inst, debug=True)
        expected = levenshtein(a, b)
        assert s == expected, (a, b)
        assert c.iterations == expected - (inst.n - inst.m)


def test_random_pair_sigma4_n60_m20():
    from frontier_edit.rng import SplitMix64, random_sequence, standard_alphabet

    rng = SplitMix64(2024)
    alpha = standard_alphabet(4)
    x = random_sequence(rng, 60, 4, alpha)
    y = random_sequence(rng, 20, 4, alpha)
    s, _ = frontier_distance(make_instance(x, y), debug=True)
    assert s == levenshtein(x.text(), y.text())


@settings(max_examples=300, deadline=None)
@given(st.text("ACGT", max_size=50), st.text("ACGT", max_size=50))
def test_oracle_equality_iteration_law_and_invariants(a, b):
    if not (a or b):
        return
    inst = instance_from_texts(a, b)
    s, c = frontier_distance(inst, debug=True)
    assert s == levenshtein(a, b)
    assert c.iterations == s - (inst.n - inst.m)
    n, m = inst.n, inst.m
    assert c.work <= 16 * ((s - (n - m) + 1) * min(m, n, s) + m + n)


@settings(max_examples=200, deadline=None)
@given(st.text("ABC", max_size=12), st.text("ABC", max_size=12))
def test_list_values_match_brute_force_rescored_matrix(a, b):
    if not (a or b):
        return
    inst = instance_from_texts(a, b)
    long, short = inst.long.text(), inst.short.text()
    R = rescored_matrix(long, short)

    def check(state):
        check_invariants(state)
        for half in (Half.LEFT, Half.RIGHT):
            for cell in state.list_cells(half):
                assert R[cell.i][cell.j] == cell.value, (half, cell)

    s, _ = frontier_distance(inst, observer=check)
    assert R[inst.m][inst.n] + inst.n - inst.m == s


@settings(max_examples=150, deadline=None)
@given(st.text("ABC", max_size=12), st.text("ABC", max_size=12))
def test_rescored_matrix_monotone_and_equivalent(a, b):
    long, short = (a, b) if len(a) >= len(b) else (b, a)
    n, m = len(long), len(short)
    main = n - m
    R = rescored_matrix(long, short)
    d = full_dp(long, short)
    for i in range(m + 1):
        for j in range(n + 1):
            k = j - i
            assert R[i][j] == d[i][j] - main + abs(k - main)
            if j < n and k + 1 <= main:
                assert R[i][j + 1] <= R[i][j]
            if i < m and k - 1 >= main:
                assert R[i + 1][j] <= R[i][j]
    assert R[m][n] + main == d[m][n]


@pytest.mark.parametrize("which", ["long", "short"])
def test_rejects_nothing_on_swapped_inputs(which):
    x, y = encode_pair("GATCGCGACC", "ACTTCTA")
    inst = make_instance(y, x) if which == "short" else make_instance(x, y)
    assert frontier_distance(inst)[0] == 7
