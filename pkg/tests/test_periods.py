import math

import numpy as np
import pytest

from k3fourh import fibration as fb
from k3fourh import gkz
from k3fourh import periods as pr


@pytest.fixture(scope="module")
def ref():
    return pr.period_vector()


def test_branch_points_at_base_point():
    t = pr.branch_points_t(pr.S0)
    assert abs(t[0] - 4j) < 1e-14
    assert abs(t[1] + 4j) < 1e-14
    assert len(set(np.round(t, 8))) == 4


def test_singular_values_match_exact():
    exact = np.array([complex(f.s) for f in fb.reference_fibers()])
    assert np.max(np.abs(pr.singular_values() - exact)) < 1e-10


def test_legendre_oracle():
    for k in (0.3, 0.6, 0.9):
        got, want = pr.legendre_ratio(k)
        assert abs(got - want) < 1e-10 * want


def test_agm_special_value():
    # K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt(pi))
    want = math.gamma(0.25) ** 2 / (4 * math.sqrt(math.pi))
    assert abs(pr.ellipk_agm(1 / math.sqrt(2)) - want) < 1e-14


def test_zero_chain():
    assert pr.period_over_chain(fb.TwoChain([])) == 0


def test_reference_period_point(ref):
    assert ref.bilinear_residual() < 1e-10
    assert ref.positivity() > 0
    assert ref.component_sign() == -1
    assert np.array_equal(pr.gram_matrix(), np.array(fb.gram_gamma(), dtype=float))


def test_dual_route():
    theta = pr.thimble_integrals()
    for ch in [fb.build_gamma(i) for i in range(1, 9)] + [fb.build_c(i) for i in range(1, 9)]:
        a = pr.period_over_chain(ch, theta=theta)
        b = pr.period_over_chain(ch, method="direct")
        assert abs(a - b) < 1e-8 * max(1.0, abs(a))


def test_c_periods_from_pairing(ref):
    theta = pr.thimble_integrals()
    pairing = np.array(fb.pairing_gamma_c(), dtype=float)
    for j, ch in enumerate(fb.build_c(i) for i in range(1, 9)):
        got = pr.period_over_chain(ch, theta=theta)
        assert abs(got + ref.eta @ pairing[:, j]) < 1e-8


def test_unknown_method():
    with pytest.raises(pr.PeriodError):
        pr.period_over_chain(fb.build_gamma(1), method="bogus")


def test_continuity_near_reference(ref):
    rng = np.random.default_rng(3)
    x = pr.random_nearby(size=1e-6, rng=rng)
    v = pr.periods(x)
    assert np.max(np.abs(v - ref.v)) < 1e-4 * np.max(np.abs(ref.v))


def test_euler_residuals():
    u = pr.PeriodCache()
    for op in gkz.euler_operators():
        assert pr.fd_residual(op, u=u) < 1e-5


def test_e12_residual():
    assert pr.fd_residual(gkz.e_op(1, 2)) < 1e-5


def test_homogeneity():
    e = pr.homogeneity_exponents()
    assert np.max(np.abs(e + 0.5)) < 1e-4


def test_equivariance_small():
    r = pr.equivariance_errors(count=3, seed=1)
    assert r["max"] < 1e-6


def test_track_rejects_far_point():
    x = pr.REFERENCE.copy()
    x[3] = np.array([[1, 0], [0, 1]])
    with pytest.raises(pr.PeriodError):
        pr.track(x)
