import random
from fractions import Fraction

import pytest

from k3fourh import exact_core as ec
from k3fourh.lattice import D4_GRAM, lattice_T


def _check_snf(m):
    r = ec.snf(m)
    n, k = ec.shape(m)
    prod = ec.mat_mul(ec.mat_mul(r.u, m), r.v)
    assert prod == ec.diag(r.d, n, k)
    assert abs(ec.det_exact(r.u)) == 1 and abs(ec.det_exact(r.v)) == 1
    nz = [d for d in r.d if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return r


def test_snf_identity():
    assert _check_snf(ec.identity(3)).d == (1, 1, 1)


def test_snf_u2():
    assert _check_snf([[0, 2], [2, 0]]).d == (2, 2)


def test_snf_d4():
    assert _check_snf(D4_GRAM).d == (1, 1, 2, 2)


def test_snf_random_reconstruction():
    rng = random.Random(1)
    for _ in range(30):
        n, k = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(k)] for _ in range(n)]
        r = _check_snf(m)
        if n == k and ec.det_exact(m) != 0:
            p = 1
            for d in r.d:
                p *= d
            assert abs(ec.det_exact(m)) == p


def test_det_examples():
    assert ec.det_exact(ec.identity(8)) == 1
    assert ec.det_exact(D4_GRAM) == 4
    assert ec.det_exact(lattice_T().matrix()) == 256


def test_det_non_square():
    with pytest.raises(ec.DimensionError):
        ec.det_exact([[1, 2, 3]])


def test_det_rational_matches_integer():
    rng = random.Random(2)
    for _ in range(20):
        m = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        assert ec.det_rational(m) == ec.det_exact(m)
    assert ec.det_rational([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_kernel_basis_examples():
    assert ec.kernel_basis(ec.identity(3)) == []
    k = ec.kernel_basis([[2, -2]])
    assert len(k) == 1 and [abs(v) for v in k[0]] == [1, 1]


def test_kernel_basis_saturated():
    rng = random.Random(3)
    for _ in range(20):
        m = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(2)]
        basis = ec.kernel_basis(m)
        for v in basis:
            assert ec.mat_vec(m, v) == [0, 0]
        if basis:
            assert all(d == 1 for d in ec.snf(basis).d)


def test_inverse_and_solve():
    m = [[2, 1], [1, 1]]
    inv = ec.inverse_rational(m)
    assert ec.mat_mul(m, inv) == [[1, 0], [0, 1]]
    assert ec.solve_rational(m, [3, 2]) == [1, 1]


def test_nullspace_and_rank():
    m = [[1, 2, 3], [2, 4, 6]]
    assert ec.rank_rational(m) == 1
    ns = ec.nullspace_rational(m)
    assert len(ns) == 2
    for v in ns:
        assert ec.mat_vec(m, v) == [0, 0]


def test_symmetric_signature():
    assert ec.symmetric_signature([[2]])[:2] == (1, 0)
    assert ec.symmetric_signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert ec.symmetric_signature([[1, 1], [1, 1]]) == (1, 0, 1)
