import random
from fractions import Fraction

import numpy as np
import pytest

from k3fourh import kuga_satake as ks

M = ks.CliffordElem.monomial


def test_dimension_and_masks():
    assert ks.DIM == 128
    assert all(bin(m).count("1") % 2 == 0 for m in ks.MASKS)


def test_generator_squares():
    assert M(1, 2) * M(1, 2) == ks.CliffordElem.scalar(-1)
    assert M(5, 6) * M(5, 6) == ks.CliffordElem.scalar(-4)
    assert M(1, 3) * M(1, 3) == ks.CliffordElem.scalar(1)


def test_monomial_reordering_sign():
    assert M(2, 1) == -M(1, 2)
    assert M(1, 2) * M(2, 3) == M(1, 3)


def test_ortho_basis_gram():
    m8 = ks.ortho_basis().matrix()
    inv = ks.ortho_basis().inverse()
    for i in range(8):
        for j in range(8):
            assert sum(m8[i][k] * inv[k][j] for k in range(8)) == (i == j)
    # e_1 = (eps_1 + eps_2) / 2
    assert ks.e_to_eps([1, 0, 0, 0, 0, 0, 0, 0]) == [Fraction(1, 2), Fraction(1, 2)] + [0] * 6
    assert ks.eps_to_e([1, 1, 0, 0, 0, 0, 0, 0]) == [2] + [0] * 7


def test_gram_from_basis_change():
    A = ks.gram_A()
    inv = np.array(ks.ortho_basis().inverse(), dtype=float)
    assert np.allclose(inv.T @ np.diag(ks.Q_DIAG) @ inv, A)


def test_algebra_axioms():
    r = ks.algebra_report(seed=7, trials=20)
    assert r["ok"] and r["associative"] and r["anti_automorphism"] and r["star_automorphism"]


def test_reversal_and_star():
    rng = random.Random(1)
    for _ in range(10):
        a, b = ks.random_element(rng), ks.random_element(rng)
        assert ks.reversal(a * b) == ks.reversal(b) * ks.reversal(a)
        assert ks.star(a * b) == ks.star(a) * ks.star(b)


def test_m_eta0():
    m = ks.m_of_eta(ks.ETA0)
    assert np.allclose((m * m).array(), ks.CliffordElem.scalar(-1).array())
    J = ks.complex_structure(ks.ETA0)
    assert np.allclose(J @ J, -np.eye(128))


def test_split_eta_rejects():
    with pytest.raises(ks.KugaSatakeError):
        ks.split_eta([1, 1, 1, 1, 0, 0, 0, 0])
    m8 = np.array(ks.ortho_basis().matrix(), dtype=float)
    negative = m8 @ np.array([0, 0, 1, 1j, 0, 0, 0, 0])
    with pytest.raises(ks.KugaSatakeError):
        ks.split_eta(negative)


def test_conjugate_changes_component():
    eta = np.array(ks.ETA0)
    assert ks.component_sign(eta) == 1
    assert ks.component_sign(np.conj(eta)) == -1
    assert ks.component_sign(ks.sigma_on_eta(eta)) == -1


def test_riemann_values():
    one = ks.CliffordElem.scalar(1)
    assert ks.riemann_form(one, one) == 0
    assert ks.riemann_form(one, M(1, 2)) == 512
    Mx = ks.riemann_matrix(exact=True)
    assert all(Mx[i][j] == -Mx[j][i] for i in range(0, 128, 7) for j in range(128))


def test_riemann_report():
    r = ks.riemann_report(seed=3, samples=50)
    assert r["ok"]
    assert r["sign_plus"] == 1 and r["sign_minus"] == -1
    assert r["sigma_component"] == -1


def test_eps_monomial():
    assert ks.eps_monomial([1, 2]) == ks.CliffordElem.scalar(2) - M(1, 3).scale(2)


def test_integrality():
    r = ks.lattice_integrality()
    assert r["integral"] and r["skew"] and r["gcd"] == 512


def test_center_split():
    r = ks.center_and_split()
    assert r["ok"]
    assert r["center_dimension"] == 2 and r["center_masks"] == [0, 255]
    assert r["omega_squared"] == "16" and r["factor_dimensions"] == [64, 64]
