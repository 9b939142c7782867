from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from hecke_clifford.linalg import SparseMatrix, independent_columns, nullspace, rank, solve_in_span
from hecke_clifford.scalars import q_power

small = st.integers(-3, 3)
dense = st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5)


def to_rows(m):
    return [{j: Fraction(v) for j, v in enumerate(r) if v} for r in m]


@given(dense)
def test_rank_matches_numpy(m):
    assert rank(to_rows(m)) == np.linalg.matrix_rank(np.array(m, dtype=float))


@given(dense)
def test_nullspace_vectors_are_annihilated(m):
    rows = to_rows(m)
    basis = nullspace(rows, 4)
    assert len(basis) == 4 - rank(rows)
    for v in basis:
        for r in rows:
            assert sum((r.get(j, 0) * c for j, c in v.items()), Fraction(0)) == 0


@given(dense)
def test_independent_columns_and_solve(m):
    cols = [{i: Fraction(v) for i, v in enumerate(col) if v} for col in zip(*m)]
    chosen = independent_columns(cols)
    assert len(chosen) == rank(to_rows(m))
    basis = [cols[j] for j in chosen]
    for col in cols:
        coeffs = solve_in_span(basis, col)
        assert coeffs is not None
        recon: dict[int, object] = {}
        for b, c in zip(basis, coeffs):
            for i, v in b.items():
                recon[i] = recon.get(i, 0) + c * v
        assert {i: v for i, v in recon.items() if v} == {i: v for i, v in col.items() if v}


def test_solve_outside_span():
    assert solve_in_span([{0: 1}], {1: 1}) is None


def test_matrix_algebra_over_rational_functions():
    a = SparseMatrix(2, 2, {0: {0: q_power(1), 1: 1}, 1: {1: q_power(-1)}})
    one = SparseMatrix.identity(2)
    assert a @ one == a
    assert (a - a).is_zero()
    assert not a.is_diagonal()
    sq = a @ a
    assert sq[0, 1] == q_power(1) + q_power(-1)
    assert np.allclose(sq.to_numeric(2.0), a.to_numeric(2.0) @ a.to_numeric(2.0))
    assert a.apply({1: 1}) == {0: 1, 1: q_power(-1)}
