from fractions import Fraction

import numpy as np
import pytest

from k3fourh import fibration as fb


def test_singular_values_exact():
    fibers = fb.singular_fibers()
    vals = [f.s_value for f in fibers]
    r19 = fb.RealAlg19(0, 1)
    expected = [fb.RealAlg19(-12), fb.RealAlg19(-8), fb.RealAlg19(0, -1), fb.RealAlg19(-4),
                fb.RealAlg19(-2), fb.RealAlg19(-1), fb.RealAlg19(1), fb.RealAlg19(2),
                fb.RealAlg19(4), r19, fb.RealAlg19(8), fb.RealAlg19(12)]
    assert vals == expected
    for a, b in zip(vals, vals[1:]):
        assert a < b


def test_singular_value_labels():
    by_s = {float(f.s_value): f.pair for f in fb.singular_fibers()}
    assert by_s[4.0] == by_s[-4.0] == (1, 2)
    assert by_s[19 ** 0.5] == by_s[-(19 ** 0.5)] == (3, 4)
    assert by_s[12.0] == by_s[-12.0] == (2, 4)
    assert by_s[2.0] == by_s[-8.0] == (1, 4)
    assert by_s[-2.0] == by_s[8.0] == (2, 3)
    assert by_s[1.0] == by_s[-1.0] == (1, 3)


def test_pair_quadratic_h2_h4():
    A, B, C = fb.pair_quadratic(fb.REFERENCE_X, 2, 4)
    # proportional to s^2 - 144
    assert B == 0 and C / A == -144


def test_realalg19_ordering():
    a = fb.RealAlg19(4)
    b = fb.RealAlg19(0, 1)
    assert a < b and -b < -a
    assert fb.RealAlg19(5) > b and fb.RealAlg19(-5) < -b
    assert fb.RealAlg19(0, 1) == fb.RealAlg19(Fraction(0), Fraction(1))


def test_monodromy_examples():
    s_index = {float(f.s_value): f.index for f in fb.reference_fibers()}
    assert fb.monodromy_matrix(s_index[4.0]).tolist() == [[1, 2], [0, 1]]
    assert fb.monodromy_matrix(s_index[-4.0]).tolist() == [[1, 2], [0, 1]]
    assert fb.monodromy_matrix(s_index[8.0]).tolist() == [[-1, 2], [-2, 3]]
    assert fb.monodromy_matrix(s_index[2.0]).tolist() == [[3, 2], [-2, -1]]
    with pytest.raises(fb.FibrationError):
        fb.monodromy_matrix(13)


def test_unipotent_and_picard_lefschetz():
    for j in range(1, 13):
        T = fb.monodromy_matrix(j)
        assert round(np.linalg.det(T)) == 1 and np.trace(T) == 2
        assert fb.verify_picard_lefschetz(j)["ok"]
    assert not fb.verify_picard_lefschetz(np.eye(2, dtype=int), (1, 0))["ok"]
    T = np.array([[3, 2], [-2, -1]])
    assert (T @ np.array([1, -1])).tolist() == [1, -1]


def test_action_convention_and_total_monodromy():
    assert fb.action_convention() == "column: c -> T c"
    tm = fb.total_monodromy()
    assert tm["ascending"] == [[1, 0], [0, 1]]
    assert tm["identity_order"]


def test_transport_examples():
    j4 = next(f.index for f in fb.reference_fibers() if float(f.s_value) == 4.0)
    assert fb.transport((0, 1), fb.lasso(j4, 1)) == (2, 1)
    upper = [fb.S0, fb.S0 + 3, fb.S0 + 3 + 2j, fb.S0 - 5 + 2j]
    assert fb.transport((1, 0), upper) == (1, 0)
    assert fb.crossings(upper) == []
    # a small loop around a regular point
    loop = [0.5 + 0.5j, 0.6 + 0.5j, 0.6 + 0.6j, 0.5 + 0.6j, 0.5 + 0.5j]
    assert fb.transport((1, 1), loop) == (1, 1)


def test_build_chains():
    c1 = fb.build_c(1)
    assert len(c1.tracks) == 2
    assert sorted((t.terminal, t.multiplicity) for t in c1.tracks) in ([(6, 1), (7, -1)], [(6, -1), (7, 1)])
    assert all(t.start_class in ((0, 1), (0, -1)) for t in c1.tracks)
    g3 = fb.build_gamma(3)
    assert len(g3.tracks) == 1 and g3.tracks[0].start_class == (1, 0)
    assert [j for j, _ in g3.tracks[0].word] == [8, 7, 6, 5]
    g5 = fb.build_gamma(5)
    assert g5.tracks[0].start_class == (1, 1) and g5.tracks[0].word == ((12, 1),)


def test_closure():
    for i in range(1, 9):
        assert tuple(fb.closure_defect(fb.build_gamma(i))) == (0, 0)
        assert tuple(fb.closure_defect(fb.build_c(i))) == (0, 0)
    assert tuple(fb.closure_defect(fb.TwoChain(()))) == (0, 0)
    lone = fb.TwoChain((fb.thimble_track(9, (0, 1)),))
    with pytest.raises(fb.FibrationError):
        fb.closure_defect(lone)
    assert tuple(fb.closure_defect(lone, strict=False)) != (0, 0)


def test_intersection_examples():
    conv = fb.calibrated_conventions()
    assert fb.intersection(fb.build_gamma(1), fb.build_gamma(2), conv) == 2
    assert fb.intersection(fb.build_gamma(5), fb.build_gamma(5), conv) == -2
    assert fb.intersection(fb.build_gamma(8), fb.build_c(8), conv) == 1
    assert fb.intersection(fb.build_gamma(5), fb.build_c(2), conv) == -1


def test_gram_and_pairing():
    assert np.array_equal(fb.gram_gamma(), fb.REFERENCE_GRAM_GAMMA)
    pairing = fb.pairing_gamma_c()
    assert round(np.linalg.det(pairing)) in (1, -1)
    diff = np.argwhere(pairing != fb.REFERENCE_PAIRING_GAMMA_C)
    # the single disagreement is the tabulated (Gamma_6 . C_4) entry
    assert [tuple(d + 1) for d in diff] == [(6, 4)]
    assert pairing[5, 3] == 1


def test_report():
    r = fb.fibration_report()
    assert r["picard_lefschetz_ok"] and r["gram_gamma_matches"]
    assert r["validated_entries"] == 127 and r["matched_entries"] == 126
    assert r["conventions"]["w"] == -1
    assert r["closed_form_signature"] == [2, 18, 2] or tuple(r["closed_form_signature"]) == (2, 18, 2)
