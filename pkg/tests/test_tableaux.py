from math import factorial

import pytest
from hypothesis import given, strategies as st

from hecke_clifford.tableaux import (
    ShiftedTableau,
    StrictPartition,
    bruhat_step,
    column_tableau,
    compose,
    enumerate_standard,
    enumerate_strict_partitions,
    inverse_perm,
    perm_from_word,
    perm_length,
    reduced_word,
    reduced_words,
    row_tableau,
    s_of,
    standard_count,
    subsequences,
    w_of,
)

strict_shapes = st.integers(1, 7).flatmap(lambda n: st.sampled_from(enumerate_strict_partitions(n)))


def test_strict_partition_counts():
    # OEIS A000009
    assert [len(enumerate_strict_partitions(n)) for n in range(1, 11)] == [1, 1, 2, 2, 3, 4, 5, 6, 8, 10]


def test_order_and_parsing():
    assert enumerate_strict_partitions(5) == [StrictPartition((5,)), StrictPartition((4, 1)), StrictPartition((3, 2))]
    assert StrictPartition.parse("4,3,1").parts == (4, 3, 1)
    with pytest.raises(ValueError):
        StrictPartition((2, 2))


def test_431_row_and_column():
    shape = StrictPartition((4, 3, 1))
    assert row_tableau(shape).rows == ((1, 2, 3, 4), (5, 6, 7), (8,))
    assert column_tableau(shape).rows == ((1, 2, 4, 7), (3, 5, 8), (6,))


def shifted_hook_count(shape: StrictPartition) -> int:
    # Schur's formula for shifted standard tableaux: independent oracle
    parts = shape.parts
    n = shape.n
    val = factorial(n)
    for p in parts:
        val /= factorial(p)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            val *= (parts[i] - parts[j]) / (parts[i] + parts[j])
    return round(val)


@given(strict_shapes)
def test_standard_count_matches_product_formula(shape):
    assert standard_count(shape) == shifted_hook_count(shape)


@given(strict_shapes)
def test_enumerated_tableaux_are_standard(shape):
    tabs = enumerate_standard(shape)
    assert len(set(tabs)) == len(tabs)
    assert all(t.is_standard() for t in tabs)
    assert row_tableau(shape) in tabs and column_tableau(shape) in tabs


@given(strict_shapes)
def test_w_and_s_compose_to_longest(shape):
    n = shape.n
    w0 = tuple(range(n, 0, -1))
    for t in enumerate_standard(shape)[:6]:
        w, s = w_of(t), s_of(t)
        assert perm_length(w) + perm_length(s) == perm_length(w0)
        ww, sw = reduced_words(t)
        assert perm_from_word(ww, n) == w
        assert len(ww) == perm_length(w) and len(sw) == perm_length(s)


def test_column_tableau_has_longest_w():
    for shape in enumerate_strict_partitions(5):
        ct = column_tableau(shape)
        assert w_of(ct) == tuple(range(5, 0, -1))
        assert s_of(ct) == tuple(range(1, 6))


@given(st.permutations(range(1, 7)))
def test_reduced_word_roundtrip(p):
    p = tuple(p)
    word = reduced_word(p)
    assert len(word) == perm_length(p)
    assert perm_from_word(word, 6) == p
    assert compose(p, inverse_perm(p)) == tuple(range(1, 7))


@given(strict_shapes)
def test_bruhat_cases_partition_the_steps(shape):
    for t in enumerate_standard(shape)[:6]:
        for k in range(1, shape.n):
            case = bruhat_step(t, k)
            if case in ("up", "down"):
                u = t.swap(k)
                assert u.is_standard()
                grow = perm_length(w_of(u)) > perm_length(w_of(t))
                assert grow == (case == "up")
            else:
                assert not t.swap(k).is_standard()


def test_subsequences_example():
    t = row_tableau(StrictPartition((3, 1)))
    sub = subsequences(t, 4)
    assert sub.before == (1, 2, 3)
    assert sub.after == ()


def test_tableau_json_roundtrip():
    t = column_tableau(StrictPartition((4, 2)))
    assert ShiftedTableau.from_json(t.to_json()) == t
    with pytest.raises(ValueError):
        ShiftedTableau(((1, 2), (2,)))
