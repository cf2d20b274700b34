from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fusionkit.errors import DegenerateGaussSum, IntegralityViolation
from fusionkit.modular import (CheckReport, central_charge, character_ratio, complete_homogeneous,
                               conformal_weights, fusion_tensor, gauss_sum, modular_data,
                               round_nonnegative, s_matrix, s_matrix_from_characters,
                               schur_polynomial, verify_modular, verlinde_tensor, y_matrix)
from fusionkit.weights import AlgebraParams, conjugate

from oracles import (casimir_weight, su2_dims, su2_s_matrix, verlinde_brute, weyl_q_dimension,
                     weyl_sum_s_matrix)

GRID = [(n, k) for n in (2, 3, 4) for k in range(1, 5)]
grid = st.sampled_from([(n, k) for n in (2, 3, 4, 5) for k in range(1, 5)])


@pytest.mark.parametrize("k", range(1, 9))
def test_su2_s_closed_form(k):
    assert np.allclose(s_matrix(AlgebraParams(2, k)), su2_s_matrix(k), atol=1e-13)


@pytest.mark.parametrize("n,k", [(2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (5, 1)])
def test_s_matches_explicit_permutation_sum(n, k):
    assert np.allclose(s_matrix(AlgebraParams(n, k)), weyl_sum_s_matrix(n, k), atol=1e-12)


def test_su3_level1_s_is_fourier_matrix():
    s = modular_data((3, 1)).s
    w = np.exp(2j * np.pi / 3)
    # vacuum, (0,1), (1,0): S = F_3 / sqrt(3) with the two triplets exchanged
    want = np.array([[1, 1, 1], [1, w, w * w], [1, w * w, w]]) / np.sqrt(3)
    assert np.allclose(s, want, atol=1e-13) or np.allclose(s, np.conj(want), atol=1e-13)


@pytest.mark.parametrize("n,k", GRID + [(5, 2), (6, 1)])
def test_quantum_dims_match_weyl_product(n, k):
    md = modular_data((n, k))
    want = [weyl_q_dimension(lam, n, k) for lam in md.weights]
    assert np.allclose(md.dims, want, atol=1e-12)
    assert np.all(md.dims >= 1 - 1e-12)


def test_su2_dims_and_weights():
    md = modular_data((2, 2))
    assert np.allclose(md.dims, [1, np.sqrt(2), 1])
    assert md.conformal_weights == (0, Fraction(3, 16), Fraction(1, 2))
    for k in range(1, 7):
        assert np.allclose(modular_data((2, k)).dims, su2_dims(k), atol=1e-12)


def test_su3_level3_global_dimension():
    # sum d^2 = 36 for SU(3)_3 (ten sectors; three of dimension 1, one of dimension 3)
    md = modular_data((3, 3))
    assert float(np.sum(md.dims ** 2)) == pytest.approx(36.0, abs=1e-10)


@pytest.mark.parametrize("n,k", GRID + [(5, 3)])
def test_conformal_weights_match_casimir(n, k):
    p = AlgebraParams(n, k)
    assert conformal_weights(p) == [casimir_weight(lam, n, k) for lam in modular_data(p).weights]


@given(grid)
@settings(deadline=None)
def test_c0_is_central_charge_mod_8(nk):
    md = modular_data(nk)
    c = float(central_charge(md.params))
    assert (md.c0 - c) % 8 == pytest.approx(0, abs=1e-9) or (md.c0 - c) % 8 == pytest.approx(8, abs=1e-9)
    assert abs(md.gauss_sum) ** 2 == pytest.approx(float(np.sum(md.dims ** 2)), rel=1e-12)
    # c0 is only fixed mod 8, so T_00 is pinned down up to a cube root of unity
    assert md.t[0, 0] ** 3 == pytest.approx(np.exp(-2j * np.pi * c / 8), abs=1e-12)


@given(grid)
@settings(deadline=None)
def test_s_properties(nk):
    md = modular_data(nk)
    s = md.s
    assert np.allclose(s, s.T, atol=1e-12)
    assert np.allclose(s @ s.conj().T, np.eye(md.size), atol=1e-12)
    assert np.allclose(s[0].imag, 0, atol=1e-12) and np.all(s[0].real > 0)
    # S_{conj(l) m} = conj(S_{l m})
    conj = [md.index(conjugate(lam)) for lam in md.weights]
    assert np.allclose(s[conj], s.conj(), atol=1e-12)


@pytest.mark.parametrize("n,k", GRID)
def test_verify_modular_passes(n, k):
    rep = verify_modular(modular_data((n, k)), tol=1e-9)
    assert rep.ok, rep.lines()
    assert {"S S^dag = I", "S^2 = C"} <= set(rep.checks)


def test_verify_modular_flags_perturbed_s():
    md = modular_data((3, 3))
    bumped = np.array(md.s)
    bumped[1, 2] += 1e-6
    rep = verify_modular(md, tol=1e-9, s=bumped)
    assert not rep.ok
    assert "S S^dag = I" in rep.failures


def test_verify_modular_flags_wrong_twist():
    md = modular_data((2, 3))
    swapped = np.array(md.s)[:, [0, 2, 1, 3]]
    rep = verify_modular(md, tol=1e-9, s=swapped)
    assert not rep.ok


@pytest.mark.parametrize("n,k", GRID)
def test_character_route(n, k):
    p = AlgebraParams(n, k)
    assert np.allclose(s_matrix_from_characters(p), s_matrix(p), atol=1e-10)


def test_character_ratio_vacuum_is_quantum_dimension():
    md = modular_data((3, 4))
    for j, lam in enumerate(md.weights):
        assert character_ratio(md.params, lam, (0, 0)) == pytest.approx(md.dims[j], abs=1e-10)


def test_schur_polynomial_small_cases():
    xs = [2.0, 3.0, 5.0]
    assert complete_homogeneous(xs, 2)[2] == pytest.approx(4 + 9 + 25 + 6 + 10 + 15)
    assert schur_polynomial([1], xs) == pytest.approx(10)
    assert schur_polynomial([1, 1], xs) == pytest.approx(6 + 10 + 15)
    assert schur_polynomial([], xs) == pytest.approx(1)
    # s_(2,1)(x, y, z) at (1,1,1) is the dimension of the adjoint of SU(3)
    assert schur_polynomial([2, 1], [1.0, 1.0, 1.0]) == pytest.approx(8)


@pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (3, 3), (4, 2)])
def test_verlinde_matches_triple_loop(n, k):
    md = modular_data((n, k))
    assert np.array_equal(fusion_tensor((n, k)).entries, np.rint(verlinde_brute(md.s).real))


def test_su3_level1_fusion_is_z3():
    N = fusion_tensor((3, 1))
    i = {w: N.index(w) for w in N.weights}
    assert N.entries[i[(1, 0)], i[(1, 0)], i[(0, 1)]] == 1
    assert N.entries[i[(1, 0)], i[(0, 1)], i[(0, 0)]] == 1
    assert N.entries.sum() == 9


@pytest.mark.parametrize("n,k", GRID)
def test_y_matrix_is_scaled_s(n, k):
    md = modular_data((n, k))
    assert np.allclose(y_matrix(fusion_tensor((n, k)), md) / abs(md.gauss_sum), md.s, atol=1e-12)


def test_y_matrix_su2_level1():
    md = modular_data((2, 1))
    assert np.allclose(y_matrix(fusion_tensor((2, 1)), md), np.sqrt(2) * md.s)


def test_arrays_are_read_only():
    md = modular_data((2, 2))
    with pytest.raises(ValueError):
        md.s[0, 0] = 0
    with pytest.raises(ValueError):
        fusion_tensor((2, 2)).entries[0, 0, 0] = 5


def test_round_nonnegative():
    ints, dev = round_nonnegative(np.array([1 + 1e-9, 2 - 1e-9j, 0.0]))
    assert list(ints) == [1, 2, 0] and dev < 1e-8
    with pytest.raises(IntegralityViolation) as err:
        round_nonnegative(np.array([0.0, 0.5]))
    assert err.value.entry == (1,)
    with pytest.raises(IntegralityViolation):
        round_nonnegative(np.array([-1.0]))
    with pytest.raises(IntegralityViolation):
        round_nonnegative(np.array([1 + 1e-3j]))


def test_verlinde_rejects_non_integral():
    md = modular_data((2, 2))
    mixed = np.array(md.s)
    mixed[1, 2] += 0.05

    class Fake:
        params, weights, s = md.params, md.weights, mixed
    with pytest.raises(IntegralityViolation):
        verlinde_tensor(Fake)


def test_gauss_sum_degenerate():
    md = modular_data((2, 3))
    a, c0 = gauss_sum(md.dims, md.twists)
    assert a == pytest.approx(md.gauss_sum)
    with pytest.raises(DegenerateGaussSum):
        gauss_sum(md.dims, np.ones(md.size) * np.exp(1j * np.linspace(0, 3, md.size)))


def test_check_report():
    rep = CheckReport(1e-3)
    rep.add("small", 1e-6)
    rep.add("large", 1.0)
    rep.add("forced", 5.0, passed=True)
    assert not rep.ok
    assert rep.failures == ["large"]
    assert rep.lines()[1].startswith("FAIL  large")
