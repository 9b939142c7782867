from fractions import Fraction

import pytest

from hecke_clifford.affine import phi_on_identity, psi_factor, psi_left, tableau_character
from hecke_clifford.algebra import AlgebraElement, alpha, jm_apply, mul
from hecke_clifford.fusion import (
    FusionError,
    PsiCache,
    cache_filename,
    divisibility_suite,
    fusion_plan,
    leading_check,
    proportionality,
    psi_column,
    psi_summary,
    psi_tableau,
    psi_tableau_direct,
    raw_theta_factors,
    raw_theta_prime_factors,
    special_point,
    symmetrizer,
    theta_column,
    theta_prime_column,
)
from hecke_clifford.scalars import special_value
from hecke_clifford.tableaux import (
    StrictPartition,
    column_tableau,
    enumerate_standard,
    enumerate_strict_partitions,
    row_tableau,
    w_of,
)

SMALL = [s for n in range(1, 5) for s in enumerate_strict_partitions(n)]
SMALL_TABS = [t for s in SMALL for t in enumerate_standard(s)]


def tid(t):
    return "".join(map(str, t.row_reading())) + f"_{t.shape}"


def test_trivial_shape_gives_one():
    assert psi_tableau(row_tableau(StrictPartition((1,)))) == AlgebraElement.one(1)


def test_two_box_row_is_single_factor():
    # x_1 = special value of content 0 (= 1), x_2 of content 1; one factor psi_1(x_2, x_1)
    t = row_tableau(StrictPartition((2,)))
    assert psi_tableau(t) == psi_factor(1, special_value(1), special_value(0), 2)


@pytest.mark.parametrize(
    "parts, pairs",
    [((2, 1), ((3, 1),)), ((3, 1), ((3, 1),)), ((3, 2), ((3, 1), (5, 2))), ((4,), ())],
)
def test_singular_pairs_frozen(parts, pairs):
    assert fusion_plan(StrictPartition(parts)).singular_pairs == pairs


@pytest.mark.parametrize("parts", [(2, 1), (3, 1), (3, 2)])
def test_column_product_splits_at_generic_points(parts):
    shape = StrictPartition(parts)
    n = shape.n
    ct = column_tableau(shape)
    x = dict(zip(range(1, n + 1), map(Fraction, [2, 3, 5, 7, 11])))

    def product(fs):
        m = AlgebraElement.one(n)
        for f in reversed(fs):
            m = psi_left(f.index, x[f.first], x[f.second], m)
        return m

    theta = product([f for _, _, f in raw_theta_factors(shape)])
    theta_p = product(raw_theta_prime_factors(shape))
    chi = tableau_character([x[k] for k in range(1, n + 1)], w_of(ct))
    assert mul(theta, theta_p) == phi_on_identity(w_of(ct), chi)


@pytest.mark.parametrize("shape", SMALL, ids=str)
def test_column_value_is_theta_times_theta_prime(shape):
    assert mul(theta_column(shape), theta_prime_column(shape)) == psi_column(shape)


@pytest.mark.parametrize("tab", SMALL_TABS, ids=tid)
def test_leading_term_and_two_routes(tab):
    psi = psi_tableau(tab)
    assert leading_check(tab, psi)
    assert psi == psi_tableau_direct(tab)


def test_frozen_term_counts():
    # frozen from the first exact computation
    assert len(psi_tableau(column_tableau(StrictPartition((2, 1))))) == 15


@pytest.mark.parametrize("tab", [t for t in SMALL_TABS if t.n <= 3], ids=tid)
def test_jucys_murphy_eigenvalues(tab):
    psi = psi_tableau(tab)
    pt = special_point(tab)
    for k in range(1, tab.n + 1):
        assert jm_apply(k, psi) == psi.scale(1 / pt.value(k))


@pytest.mark.parametrize("shape", SMALL, ids=str)
def test_column_element_alpha_invariant(shape):
    psi = psi_tableau(column_tableau(shape))
    assert alpha(psi) == psi


@pytest.mark.parametrize("shape", SMALL, ids=str)
def test_divisibility_suite(shape):
    results = divisibility_suite(shape)
    assert all(r.status != "fail" for r in results), [r for r in results if r.status == "fail"]
    assert any(r.status == "pass" for r in results)


@pytest.mark.parametrize("shape", [s for s in SMALL if s.n <= 3], ids=str)
def test_symmetrizer_square_proportional(shape):
    s = symmetrizer(shape)
    c = proportionality(mul(s, s), s)
    assert c is not None and c


def test_proportionality_rejects():
    a = AlgebraElement.T(1, 2)
    assert proportionality(a + AlgebraElement.one(2), a) is None
    with pytest.raises(ValueError):
        proportionality(a, AlgebraElement.zero(2))


def test_cache_roundtrip_is_byte_identical(tmp_path):
    tab = column_tableau(StrictPartition((2, 1)))
    cache = PsiCache(tmp_path)
    psi, cached = cache.get(tab)
    assert not cached
    first = cache.path(tab).read_bytes()
    assert cache.path(tab).name == cache_filename(tab) == "psi_n3_shape2-1_row1-2-3.json"
    again, cached = PsiCache(tmp_path).get(tab)
    assert cached and again == psi
    cache.store(tab, again)
    assert cache.path(tab).read_bytes() == first
    assert not list(tmp_path.glob(".tmp-*"))


def test_summary():
    tab = column_tableau(StrictPartition((2, 1)))
    s = psi_summary(tab, psi_tableau(tab))
    assert s["leading_ok"] and s["leading_coefficient"] == "(1)"
    assert s["leading_permutation"] == [3, 2, 1]


def test_fusion_error_is_runtime_error():
    assert issubclass(FusionError, RuntimeError)
