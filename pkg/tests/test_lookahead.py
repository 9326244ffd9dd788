import pytest
from hypothesis import given, strategies as st

from frontier_edit.core import build_alphabet
from frontier_edit.lookahead import build_lookahead, next_match
from oracles import naive_next


def _table(text):
    alpha = build_alphabet([text, "ACGT"])
    seq = alpha.encode(text)
    return alpha, seq, build_lookahead(seq, alpha)


@pytest.mark.parametrize(
    "text,sym,pos,expected",
    [
        ("GATCGCGACC", "C", 1, 4),
        ("GATCGCGACC", "T", 4, 11),
        ("ACTTCTA", "T", 3, 3),
        ("ACTTCTA", "A", 2, 7),
        ("ACTTCTA", "C", 8, 8),
        ("GATCGCGACC", "G", 2, 5),
    ],
)
def test_examples(text, sym, pos, expected):
    alpha, _, table = _table(text)
    assert next_match(table, alpha.index(ord(sym)), pos) == expected


def test_out_of_range_position():
    alpha, _, table = _table("ACGT")
    with pytest.raises(ValueError):
        next_match(table, 0, 0)
    with pytest.raises(ValueError):
        next_match(table, 0, 6)


@given(st.text("ACGT", max_size=40))
def test_matches_linear_scan(text):
    alpha, seq, table = _table(text)
    L = len(text)
    assert table.writes <= (L + 2) * alpha.size
    for c in range(alpha.size):
        row = table.next[c]
        assert row[L + 1] == L + 1
        for k in range(1, L + 2):
            v = next_match(table, c, k)
            assert v == naive_next(seq.symbols, c, k)
            assert v >= k
            if k <= L:
                assert (v == k) == (seq.symbols[k - 1] == c)
        assert all(row[k] <= row[k + 1] for k in range(L + 1))
