import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hecke_clifford.algebra import AlgebraElement, w0
from hecke_clifford.fusion import psi_tableau
from hecke_clifford.numeric import (
    NumericConfig,
    basis_keys,
    degeneration_check,
    degeneration_formula,
    extrapolate_to_zero,
    fusion_agreement,
    generator_matrices,
    numeric_eval,
    path_idempotency_defect,
    random_generic_character,
    scalar_action_error,
    intertwiner_error,
    to_vector,
)
from hecke_clifford.scalars import special_value
from hecke_clifford.tableaux import StrictPartition, enumerate_standard


def test_config_validation():
    with pytest.raises(ValueError):
        NumericConfig(q=1.0)
    with pytest.raises(ValueError):
        NumericConfig(ts=(0.1, 0.2))


def test_basis_starts_with_identity():
    keys = basis_keys(3)
    assert len(keys) == 48
    assert keys[0] == ((1, 2, 3), 0)


@pytest.mark.parametrize("n", [2, 3])
def test_generator_matrices_satisfy_relations(n):
    q = 1.2
    T, C = generator_matrices(n, q)
    eps = q - 1 / q
    eye = np.eye(2**n * math.factorial(n))
    for k, t in T.items():
        assert np.allclose(t @ t, eps * t + eye)
    for k, c in C.items():
        assert np.allclose(c @ c, -eye)


def test_to_vector_matches_generator_action():
    T, C = generator_matrices(3, 1.2)
    x = AlgebraElement.T(1, 3) * AlgebraElement.C(2, 3)
    e = to_vector(AlgebraElement.one(3))
    assert np.allclose(T[1] @ C[2] @ e, to_vector(x))


@given(st.lists(st.floats(-2, 2), min_size=3, max_size=3))
def test_extrapolation_is_exact_on_low_degree_polynomials(c):
    ts = [0.1 / 2**j for j in range(6)]
    vals = [np.array([c[0] + c[1] * t + c[2] * t**2]) for t in ts]
    assert abs(extrapolate_to_zero(ts, vals)[0] - c[0]) < 1e-9


def test_numeric_eval():
    assert abs(numeric_eval(special_value(1)) - 0.5987540510912835) < 1e-13
    assert numeric_eval(3) == 3


@pytest.mark.parametrize("tab", [t for n in (2, 3) for s in (StrictPartition((n,)), StrictPartition((n - 1, 1)) if n > 2 else None) if s for t in enumerate_standard(s)], ids=str)
def test_fusion_limit_matches_exact(tab):
    assert fusion_agreement(tab, psi_tableau(tab)) <= 1e-6
    assert path_idempotency_defect(tab) <= 1e-9


@pytest.mark.parametrize("a, b", [(0, 1), (1, 2), (0, 2)])
def test_degeneration(a, b):
    ok, err = degeneration_check(a, b)
    assert ok, err


def test_degeneration_formula_frozen():
    f0, f1 = degeneration_formula(0, 1)
    assert f0 == pytest.approx(-1 / math.sqrt(2))
    assert f1 == pytest.approx(-1 / math.sqrt(2))


@pytest.mark.parametrize("n", [2, 3])
def test_principal_series_numeric(n):
    rng = np.random.default_rng(7)
    chi = random_generic_character(n, rng)
    assert chi.is_generic()
    assert scalar_action_error(w0(n), chi) < 1e-9
    assert intertwiner_error(w0(n), chi) < 1e-9
