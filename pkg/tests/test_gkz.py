import os
from fractions import Fraction

import pytest

from k3fourh import gkz

V = gkz.var_index


@pytest.fixture(scope="module")
def toric(cache_dir):
    order = gkz.revlex()
    G = gkz.toric_groebner(order, cache_dir)
    return G, order


def test_matrix():
    data = gkz.gkz_matrix()
    a = data.a_matrix
    assert [a[r][V(1, 1, 1)] for r in range(6)] == [1, 0, 0, 0, 1, 1]
    assert [a[r][V(4, 2, 2)] for r in range(6)] == [0, 0, 0, 1, 0, 0]
    assert data.rank == 6
    for k in range(16):
        assert sum(a[r][k] for r in range(4)) == 1
    assert [str(b) for b in data.beta] == ["-1/2"] * 4 + ["-1", "-1"]


def test_kernel_rank():
    from k3fourh import exact_core as ec
    assert len(ec.kernel_basis([list(r) for r in gkz.gkz_matrix().a_matrix])) == 10


def test_groebner_trivial():
    f = gkz.poly([(1, (2, 0)), (-1, (0, 2))])
    order = gkz.revlex(n=2)
    G = gkz.groebner([f], order)
    assert len(G) == 1 and set(G[0].values()) == {Fraction(1), Fraction(-1)}
    assert set(G[0]) == set(f)


def test_groebner_small_example():
    # ideal (x^2 - y, x y - 1) in Q[x, y]
    order = gkz.revlex(n=2)
    f = gkz.poly([(1, (2, 0)), (-1, (0, 1))])
    g = gkz.poly([(1, (1, 1)), (-1, (0, 0))])
    G = gkz.groebner([f, g], order)
    assert gkz.is_groebner(G, order)
    L = [gkz.leading(h, order) for h in G]
    for h in (f, g, gkz.poly([(1, (0, 3)), (-1, (0, 0))])):
        assert not gkz.normal_form(h, G, order, L)


def test_toric_basis(toric):
    G, order = toric
    a = gkz.gkz_matrix().a_matrix
    assert len(G) == 46
    assert all(gkz.binomial_in_kernel(g, a) for g in G)
    assert gkz.is_squarefree(gkz.initial_monomials(G, order))
    assert {sum(gkz.leading(g, order)) for g in G} == {2}


def test_toric_basis_is_groebner(toric):
    G, order = toric
    assert gkz.is_groebner(G, order)


def test_membership_examples(toric):
    G, order = toric
    L = [gkz.leading(g, order) for g in G]
    e = gkz.monomial_exp
    f1 = gkz.binomial(e(V(1, 1, 1), V(2, 2, 2)), e(V(1, 2, 1), V(2, 1, 2)))
    f2 = gkz.binomial(e(V(1, 1, 2), V(2, 2, 1)), e(V(1, 2, 1), V(2, 1, 2)))
    f3 = gkz.binomial(e(V(1, 1, 1)), e(V(2, 1, 1)))
    assert not gkz.normal_form(f1, G, order, L)
    assert not gkz.normal_form(f2, G, order, L)
    assert gkz.normal_form(f3, G, order, L)


def test_cache_round_trip(cache_dir, toric):
    G, order = toric
    files = os.listdir(cache_dir)
    assert files
    again = gkz.toric_groebner(order, cache_dir)
    assert sorted(map(sorted, (g.items() for g in again))) == sorted(map(sorted, (g.items() for g in G)))


def test_multiplicity_and_volume(cache_dir):
    assert gkz.multiplicity(cache_dir=cache_dir) == 20
    assert gkz.normalized_volume() == 20


def test_unit_simplex():
    ident = tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    assert gkz.normalized_volume(ident) == 1
    assert gkz.multiplicity(ident) == 1


def test_euler_operators():
    ops = gkz.euler_operators()
    assert len(ops) == 6
    u = tuple([0] * 16)
    u = tuple(2 if k == V(1, 1, 1) else 1 if k == V(1, 2, 2) else 0 for k in range(16))
    out = ops[0].apply_to_monomial(u)
    assert out == {u: Fraction(3) + Fraction(1, 2)}
    assert ops[0].as_dict() == gkz.scaling_operators()[0].as_dict()
    for op in ops:
        assert gkz.initial_form(op).as_dict() == op.as_dict()
    assert gkz.euler_span_check()["ok"]


def test_e_operator_terms():
    op = gkz.e_op(1, 2)
    assert op.order() == 1 and len(op.terms) == 8
    keys = {(a.index(1), b.index(1)) for (a, b), _ in op.terms}
    want = {(V(p, 1, j), V(p, 2, j)) for p in range(1, 5) for j in (1, 2)}
    assert keys == want
    assert gkz.e_op(1, 1).constant() == 1


def test_initial_form_e12():
    op = gkz.e_op(1, 2)
    init = gkz.initial_form(op)
    W = gkz.weyl_weight()
    weights = [gkz.term_weight(a, b, W) for (a, b), _ in op.terms]
    assert len(init.terms) == weights.count(max(weights))
    (a, b), _ = init.terms[0]
    assert (a.index(1), b.index(1)) == (V(4, 1, 2), V(4, 2, 2))
    single = gkz.DiffOp(op.terms[:1])
    assert gkz.initial_form(single).terms == single.terms


def test_e2_membership(toric):
    G, order = toric
    r = gkz.check_e2_membership(G, order)
    assert r["ok"] and r["count"] == 88
    assert len(gkz.e2_operators()) == 88
