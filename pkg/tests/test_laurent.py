import math

import pytest
from hypothesis import given, settings, strategies as st

from whitenorm.errors import DegenerateInput, InexactDivision
from whitenorm.laurent import (
    BivarPoly,
    LaurentPoly,
    chebyshev_T,
    chebyshev_U,
    det_bareiss,
    det_cofactor,
    filling_eigenvalue_poly,
    peripheral_quadric,
    sylvester_resultant_t,
)

S = LaurentPoly.variable()
ONE = LaurentPoly.constant(1)


def small_laurent(min_coeff=-9, max_coeff=9):
    return st.dictionaries(st.integers(-4, 4), st.integers(min_coeff, max_coeff), max_size=6).map(
        LaurentPoly
    )


def test_ring_smoke():
    assert (S - ONE) * (S + ONE) == LaurentPoly({2: 1, 0: -1})
    assert LaurentPoly({2: 1, 0: 3}).substitute_inv() == LaurentPoly({-2: 1, 0: 3})
    assert LaurentPoly({3: 1, 2: 1}).substitute_neg() == LaurentPoly({3: -1, 2: 1})
    assert LaurentPoly({5: 0}).is_zero


def test_evaluation_and_derivative():
    f = LaurentPoly({2: 1, 0: -3, -1: 2})
    assert f(2.0) == pytest.approx(4 - 3 + 1)
    assert f.derivative() == LaurentPoly({1: 2, -2: -2})
    assert f.eval_at_int(-1) == 1 - 3 - 2


def test_normalize_unit_examples():
    assert LaurentPoly({3: 1, 5: -1}).normalize_unit() == LaurentPoly({2: 1, 0: -1})
    assert LaurentPoly({-2: -1}).normalize_unit() == ONE
    assert LaurentPoly({1: 2, 0: -2}).normalize_unit() == LaurentPoly({1: 2, 0: -2})


@given(small_laurent().filter(lambda f: not f.is_zero), st.integers(-5, 5), st.booleans())
def test_normalize_unit_is_canonical(f, k, neg):
    g = f.shift(k)
    if neg:
        g = -g
    assert g.normalize_unit() == f.normalize_unit()
    assert f.normalize_unit().normalize_unit() == f.normalize_unit()
    assert f.normalize_unit().mindeg == 0
    assert f.unit_equal(g)


@given(small_laurent(), small_laurent(), small_laurent())
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_chebyshev_bases():
    assert chebyshev_T(0) == ONE
    assert chebyshev_T(1) == S
    assert chebyshev_T(2) == LaurentPoly({2: 2, 0: -1})
    assert chebyshev_U(0) == ONE
    assert chebyshev_U(1) == LaurentPoly({1: 2})
    assert chebyshev_U(2) == LaurentPoly({2: 4, 0: -1})


def test_chebyshev_cosine_identity():
    for q in range(13):
        Tq = chebyshev_T(q)
        for k in range(17):
            theta = 0.17 + 6.0 * k / 17
            assert Tq(math.cos(theta)) == pytest.approx(math.cos(q * theta), abs=1e-12)


def test_exact_division():
    f = (S - ONE) * (S + ONE)
    assert f.exact_div(S - ONE) == S + ONE
    with pytest.raises(InexactDivision):
        (S + ONE).exact_div(LaurentPoly({1: 2}))
    shifted = f.shift(-3)
    assert shifted.exact_div((S - ONE).shift(-1)) == (S + ONE).shift(-2)


def test_sylvester_of_linear_factors():
    # f = t - a(s), g = t - b(s): the resultant is a - b up to sign
    a = LaurentPoly({2: 1, 0: 3})
    b = LaurentPoly({1: -2, 0: 1})
    f = BivarPoly({(0, 1): 1, (2, 0): -1, (0, 0): -3})
    g = BivarPoly({(0, 1): 1, (1, 0): 2, (0, 0): -1})
    res = sylvester_resultant_t(f, g)
    assert res.unit_equal(a - b)


def _det3_by_rule(m):
    """Sarrus cofactor formula, written out; independent of det_bareiss."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def test_resultant_1_1_against_written_out_determinant():
    k1 = filling_eigenvalue_poly(1, 1)
    k2 = peripheral_quadric()
    z = LaurentPoly()
    row_k1 = [LaurentPoly({1: 1}), LaurentPoly({0: -1}), z]
    matrix = [
        row_k1,
        [z] + row_k1[:2],
        [LaurentPoly({4: 1}), LaurentPoly({4: -1, 2: 4, 0: -1}), ONE],
    ]
    by_rule = _det3_by_rule(matrix)
    assert sylvester_resultant_t(k1, k2).unit_equal(by_rule)
    assert by_rule.normalize_unit() == LaurentPoly({4: 1, 3: -1, 2: -4, 1: -1, 0: 1})


def test_resultant_2_1_frozen():
    res = sylvester_resultant_t(filling_eigenvalue_poly(2, 1), peripheral_quadric())
    assert res.normalize_unit() == LaurentPoly({4: 1, 2: -6, 0: 1})


def test_resultant_rejects_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        sylvester_resultant_t(BivarPoly({(3, 0): 1}), peripheral_quadric())


def test_resultant_vanishes_iff_common_root():
    # plant linear factors with known intersections: f = (t - c0)(t - c1),
    # g = (t - c0)(t - c2) share a factor -> resultant identically zero
    def lin(poly):
        return BivarPoly(
            {(0, 1): 1, **{(e, 0): -c for e, c in poly.coeffs.items()}}
        )

    def mul2(f, g):
        out = {}
        for (es1, et1), c1 in f.coeffs.items():
            for (es2, et2), c2 in g.coeffs.items():
                key = (es1 + es2, et1 + et2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    c0 = LaurentPoly({1: 1, 0: 2})
    c1 = LaurentPoly({2: 1})
    c2 = LaurentPoly({0: 5})
    shared = sylvester_resultant_t(mul2(lin(c0), lin(c1)), mul2(lin(c0), lin(c2)))
    assert shared.is_zero

    # no shared factor: res(s0) = 0 exactly when two planted roots collide at s0
    f = mul2(lin(c1), lin(c2))  # roots s^2 and 5
    g = lin(c0)                 # root s + 2
    res = sylvester_resultant_t(f, g)
    for s0 in range(-6, 7):
        collide = (s0 * s0 == s0 + 2) or (5 == s0 + 2)
        assert (res.eval_at_int(s0) == 0) == collide, s0


def test_resultant_nonzero_when_roots_stay_apart():
    # seeded pseudo-random integer bivariate polynomials, brute-force root
    # comparison at integer points of s
    import numpy as np

    rng_state = 12345

    def next_coeff():
        nonlocal rng_state
        rng_state = (1103515245 * rng_state + 12345) % (1 << 31)
        return rng_state % 7 - 3

    for _ in range(12):
        f = BivarPoly({(es, et): next_coeff() for es in range(3) for et in range(3)})
        g = BivarPoly({(es, et): next_coeff() for es in range(3) for et in range(3)})
        if f.is_zero or g.is_zero or f.t_degree() == 0 or g.t_degree() == 0:
            continue
        res = sylvester_resultant_t(f, g)
        for s0 in range(-3, 4):
            fc = [f.t_coefficient(j).eval_at_int(s0) for j in range(f.t_degree(), -1, -1)]
            gc = [g.t_coefficient(j).eval_at_int(s0) for j in range(g.t_degree(), -1, -1)]
            if fc[0] == 0 or gc[0] == 0 or s0 == 0:
                continue  # leading coefficient vanishes: resultant theory degrades
            dist = min(
                (abs(a - b) for a in np.roots(fc) for b in np.roots(gc)),
                default=float("inf"),
            )
            if dist > 1e-6:
                assert res.eval_at_int(s0) != 0, (s0, fc, gc)


def test_bareiss_matches_cofactor():
    k2 = peripheral_quadric()
    for p, q in [(1, 1), (2, 1), (3, 2), (-1, 1), (5, 3)]:
        k1 = filling_eigenvalue_poly(p, q)
        a = sylvester_resultant_t(k1, k2, method="bareiss")
        b = sylvester_resultant_t(k1, k2, method="cofactor")
        assert a == b


def test_bareiss_zero_pivot_and_singular():
    z = LaurentPoly()
    m = [[z, ONE], [S, z]]
    assert det_bareiss(m) == -(S * ONE)
    singular = [[S, S], [S, S]]
    assert det_bareiss(singular).is_zero
    assert det_cofactor(singular).is_zero


def test_json_roundtrip():
    f = LaurentPoly({-2: 3, 0: -(10**30), 5: 7})
    data = f.to_json_coeffs()
    assert data == {"-2": "3", "0": str(-(10**30)), "5": "7"}
    assert LaurentPoly.from_json_coeffs(data) == f
