import cmath
import math

import numpy as np
import pytest

from whitenorm.cohomology import (
    coboundary_matrix,
    d1_classification,
    d1_poly,
    d1_roots,
    d2_check,
    d2_poly,
    det_P_reducible,
    det_p_closed_form,
    reducible_presentation_matrix,
    trace_pairing_matrix,
)
from whitenorm.errors import CommonRootSuspected, DegenerateCase
from whitenorm.laurent import LaurentPoly
from whitenorm.reps import prep_to_partially_diagonal, reconstruct_prep
from whitenorm.roots import nontrivial_roots, resultant_roots


def test_coboundary_rank_three():
    # at a genuine irreducible representation's slice parameters
    z = nontrivial_roots(resultant_roots(2, 1)).values[-1]
    pr = reconstruct_prep(z, 1, 2, 1)
    s, a, _ = prep_to_partially_diagonal(pr)
    assert coboundary_matrix(s, a).rank() == 3
    # the reducible case a = 1 keeps rank 3
    assert coboundary_matrix(0.3 + 0.7j, 1.0).rank() == 3
    # degenerating s -> 1 loses rank
    assert coboundary_matrix(1 + 1e-12, 0.4 + 0.3j).rank() < 3


def test_presentation_matrix_rank_five():
    for p in (3, 5, 7, 15):
        for k in (1, 2):
            s = cmath.exp(2j * cmath.pi * k / p)
            m = reducible_presentation_matrix(s, p, 1)
            assert m.shape == (5, 6) and m.rank() == 5


def test_presentation_matrix_degenerates_at_one():
    m = reducible_presentation_matrix(1.0 + 0j, 5, 1)
    assert m.rank() < 5


def test_det_p_matches_closed_form_on_grid():
    worst = 0.0
    for k in range(50):
        r = 0.5 + 1.5 * k / 49
        s = r * cmath.exp(2j * math.pi * ((k * 0.6180339887) % 1.0))
        det = det_P_reducible(s, 5, 1)
        closed = det_p_closed_form(s, 5, 1)
        worst = max(worst, abs(det - closed) / abs(closed))
    assert worst <= 1e-8


def test_det_p_zero_cases():
    s = cmath.exp(2j * cmath.pi / 5)
    assert abs(complex(np.linalg.det(trace_pairing_matrix(s, 0, 1).data))) < 1e-12
    # the quartic factor vanishes only off the unit circle
    for s2 in (1 + 1j, 1 - 1j):
        root = cmath.sqrt(s2)
        assert abs(abs(root) - 1) > 0.1
        assert abs(det_p_closed_form(root, 5, 1)) < 1e-10


def test_d1_poly_and_roots():
    assert d1_poly(5, 1) == LaurentPoly({4: 5, 2: -62, 0: 5})
    roots = d1_roots(5, 1)
    vals = sorted(r.real for r in roots)
    assert vals[0] == pytest.approx(-vals[3]) and vals[1] == pytest.approx(-vals[2])
    with pytest.raises(DegenerateCase):
        d1_poly(4, 1)


def test_d1_classification_ranges():
    samples = {
        "real": [(5, 1), (9, 2), (-1, 1), (-3, 2), (-7, 3), (13, 3), (25, 4)],
        "imaginary": [(1, 1), (3, 2), (5, 2), (7, 2), (1, 4), (11, 3), (3, 4)],
    }
    for expected, pqs in samples.items():
        for p, q in pqs:
            assert d1_classification(p, q) == expected, (p, q)


def test_d2_checksum():
    poly = d2_poly()
    assert poly.maxdeg == 40
    assert poly[40] == 22
    assert poly[0] == 11
    assert all(e % 2 == 0 for e in poly.coeffs)
    assert len(poly.coeffs) == 21


def test_d2_root_avoidance():
    assert d2_check(5, 1) > 1e-3
    assert d2_check(-1, 1) > 1e-3


def test_d2_detects_planted_collision(monkeypatch):
    import whitenorm.cohomology as co

    # plant the characterization roots directly onto d2 roots
    d2_roots = [r.value for r in co.find_roots(d2_poly().to_complex())]

    class FakeRoot:
        def __init__(self, v):
            self.value = v

    class FakeSet:
        values = [d2_roots[0]]

    monkeypatch.setattr(co, "nontrivial_roots", lambda rs: FakeSet)
    monkeypatch.setattr(co, "resultant_roots", lambda p, q, tol: None)
    with pytest.raises(CommonRootSuspected):
        co.d2_check(5, 1)
