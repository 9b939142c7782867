from fractions import Fraction

import pytest

from hecke_clifford.representations import (
    basis_element,
    beta_consistency,
    build_U,
    build_module,
    central_action_check,
    central_character_table,
    commutant_check,
    commutant_dimension,
    content_sum_formula,
    dimension_identity,
    ideal_model_check,
    jm_eigencheck,
    module_relations,
    projector,
    relation_report,
    rho,
    splitting_report,
    u_dimension,
)
from hecke_clifford.linalg import SparseMatrix
from hecke_clifford.tableaux import StrictPartition, enumerate_strict_partitions, standard_count

SHAPES = [s for n in range(1, 5) for s in enumerate_strict_partitions(n)]


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_module_structure(shape):
    M = build_module(shape)
    assert M.dim == 2**shape.n * standard_count(shape)
    assert all(module_relations(M).values())
    assert jm_eigencheck(M)
    assert beta_consistency(M)
    assert all(commutant_check(M).values())


def test_empty_clifford_word_has_inverse_eigenvalue():
    M = build_module(StrictPartition((2,)))
    i = M.basis.index((0, M.tableaux[0]))
    J2 = M.J(2)
    assert J2[i, i] == M.expected_eigenvalue(i, 2)
    assert J2[i, i] != 1 / J2[i, i]


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_splitting_and_U(shape):
    M = build_module(shape)
    assert all(splitting_report(M).values())
    U = build_U(M)
    assert U.dim == u_dimension(shape)
    assert all(relation_report({"T": U.T, "C": U.C}, shape.n).values())
    expected = 1 if shape.length % 2 == 0 else 2
    assert commutant_dimension(U) == expected
    assert commutant_dimension(U, even_only=True) == 1


def test_rho_index_range():
    M = build_module(StrictPartition((2, 1)))
    with pytest.raises(ValueError):
        rho(M, 3)
    r1, r2 = rho(M, 1), rho(M, 2)
    assert (r1 @ r2 + r2 @ r1).is_zero()


def test_projectors_partition_unity():
    M = build_module(StrictPartition((2, 1)))
    total = projector(M, (1,)) + projector(M, (-1,))
    assert total == SparseMatrix.identity(M.dim)


@pytest.mark.parametrize("shape", [s for s in SHAPES if s.n <= 3], ids=str)
def test_matrices_agree_with_left_ideal(shape):
    M = build_module(shape)
    assert ideal_model_check(M)
    assert basis_element(M.basis[0]) == basis_element((0, M.tableaux[0]))


def test_dimension_identity_n3_frozen():
    # 2^{-1} * 8^2 + 2^{-0} * 4^2 = 32 + 16 = 48
    assert u_dimension(StrictPartition((3,))) == 8
    assert u_dimension(StrictPartition((2, 1))) == 4
    assert dimension_identity(3) == (True, Fraction(48), 48)


@pytest.mark.parametrize("n", range(1, 7))
def test_dimension_identity(n):
    ok, total, target = dimension_identity(n)
    assert ok, (total, target)


@pytest.mark.parametrize("n", range(1, 6))
def test_central_characters_distinct(n):
    table = central_character_table(n)
    assert len(table) == len(enumerate_strict_partitions(n))
    assert len(set(map(tuple, table.values()))) == len(table)
    for shape, row in table.items():
        assert row[0] == content_sum_formula(shape)


@pytest.mark.parametrize("shape", [s for s in SHAPES if s.n <= 3], ids=str)
def test_central_elements_act_by_table(shape):
    assert central_action_check(shape)
