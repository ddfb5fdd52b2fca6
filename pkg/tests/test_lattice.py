import pytest

from k3fourh import exact_core as ec
from k3fourh import lattice as la


def test_discriminants():
    assert la.discriminant(la.U()) == -1
    assert la.discriminant(la.lattice_P()) == -256
    assert la.discriminant(la.lattice_T()) == 256
    assert la.discriminant(la.lattice_P()) * la.discriminant(la.lattice_T()) == -2 ** 16


def test_signatures():
    assert la.signature(la.rank_one(2)) == (1, 0)
    assert la.signature(la.lattice_T()) == (2, 6)
    assert la.signature(la.lattice_P()) == (1, 13)
    assert la.signature(la.k3_lattice()) == (3, 19)
    with pytest.raises(la.LatticeError):
        la.signature(la.QuadLattice(((1, 1), (1, 1))))


def test_even_and_ranks():
    for l in (la.lattice_P(), la.lattice_T(), la.k3_lattice()):
        assert l.is_even()
    assert la.lattice_P().rank + la.lattice_T().rank == 22


def test_discriminant_groups():
    assert la.discriminant_group(la.U()).order == 1
    for l in (la.lattice_T(), la.lattice_P()):
        g = la.discriminant_group(l)
        assert g.invariant_factors == (2,) * 8 and g.order == 256
        # lifts pair integrally with the lattice
        for y in g.generator_lifts:
            assert all(v.denominator == 1 for v in ec.mat_vec(l.matrix(), list(y)))


def _e(k):
    """I - 2 E_kk (0-based k)."""
    return [[(-1 if i == j == k else 1 if i == j else 0) for j in range(8)] for i in range(8)]


def test_reflections():
    assert la.reflection([0, 0, 0, 0, 1, 0, 0, 0]).matrix() == _e(4)
    assert la.reflection([0, 0, 0, 0, 0, 1, 0, 0]).matrix() == _e(5)
    T = la.lattice_T()
    for v in la.minus2_vectors():
        r = la.reflection(v)
        m = r.matrix()
        assert ec.mat_mul(m, m) == ec.identity(8)
        assert ec.mat_mul(ec.mat_mul(ec.transpose(m), T.matrix()), m) == T.matrix()
        assert ec.mat_vec(m, list(v)) == [-a for a in v]
        assert la.is_in_G2(r) and la.acts_trivially_on_qT(r)
    with pytest.raises(la.LatticeError):
        la.reflection([1, 0, 0, 0, 0, 0, 0, 0])


def test_g2_examples():
    ident = la.IsometryZ(ec.identity(8))
    assert la.is_in_G2(ident) and la.acts_trivially_on_qT(ident)
    swap = dict(la.t_generators())["swap12"]
    assert not la.is_in_G2(swap)
    assert not la.acts_trivially_on_qT(swap)
    with pytest.raises(la.LatticeError):
        la.is_in_G2(la.IsometryZ([[2 if i == j else 0 for j in range(8)] for i in range(8)]))


def test_g2_equivalence_random_words():
    words = la.random_isometry_words(200, seed=0)
    members = 0
    for _, g in words:
        a = la.is_in_G2(g)
        assert a == la.acts_trivially_on_qT(g)
        members += a
    assert 0 < members < 200


def test_picard_basis():
    r = la.picard_basis_check()
    assert r["ok"]
    assert r["Delta1^2"] == -2 and r["Delta2^2"] == 2
    assert [row[:4] for row in r["gram14"][:4]] == [list(x) for x in la.D4_GRAM]


def test_glue(tmp_path):
    h = la.load_or_find_glue(tmp_path / "glue.txt")
    v = la.verify_glue(h)
    assert v["ok"] and v["order"] == 256
    rep = la.overlattice_report(h)
    assert rep == {"rank": 22, "even": True, "det": -1, "signature": (3, 19), "ok": True}
    # round trip through the cache file
    h2 = la.load_or_find_glue(tmp_path / "glue.txt")
    assert la.verify_glue(h2)["ok"]


def test_trivial_glue_fails():
    v = la.verify_glue(la.GlueData(()))
    assert not v["ok"] and any("order" in f for f in v["failures"])
