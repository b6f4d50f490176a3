import math

import pytest

from whitenorm.errors import DegenerateCase, ScopeError, ValidationError
from whitenorm.laurent import LaurentPoly
from whitenorm.seminorm import (
    detected_slopes,
    evaluate_norm,
    nonabelian_reducible_u2,
    seifert_character_counts,
    seifert_norms,
    seminorm_profile,
    solve_linear_system,
    twisted_alexander,
)
from whitenorm.slopes import INFINITY, Slope


def odd_sweep(pmax=25, qmax=8):
    for q in range(1, qmax + 1):
        for p in range(-pmax, pmax + 1):
            if p % 2 and math.gcd(abs(p), q) == 1 and p != 3 * q:
                yield p, q


def test_profile_spot_values():
    for p, q, a, s in [
        (-1, 1, (2, 2, 0), 4),
        (1, 1, (0, 2, 0), 2),
        (5, 1, (2, 2, 0), 8),
        (7, 2, (2, 4, 2), 12),
    ]:
        prof = seminorm_profile(p, q)
        assert prof.a == a and prof.s_min == s


def test_scope_errors():
    with pytest.raises(ScopeError):
        seminorm_profile(2, 1)
    with pytest.raises(ScopeError):
        seminorm_profile(3, 1)
    with pytest.raises(ValidationError):
        seminorm_profile(6, 2)
    with pytest.raises(ValidationError):
        seminorm_profile(1, -1)


def test_evaluate_norm_examples():
    assert evaluate_norm(seminorm_profile(-1, 1), INFINITY) == 4
    assert evaluate_norm(seminorm_profile(5, 1), Slope(1, 1)) == 8
    # the indefinite direction: the norm vanishes along the varying slope
    assert evaluate_norm(seminorm_profile(1, 1), Slope(6, 1)) == 0


def test_norm_is_even_and_coefficients_nonnegative():
    for p, q in odd_sweep(15, 5):
        prof = seminorm_profile(p, q)
        assert all(a >= 0 and a % 2 == 0 for a in prof.a)
        assert prof.s_min >= 0 and prof.s_min % 2 == 0


def test_minimal_norm_is_norm_of_meridian():
    for p, q in odd_sweep():
        prof = seminorm_profile(p, q)
        assert evaluate_norm(prof, INFINITY) == prof.s_min


def test_seifert_norm_examples():
    assert seifert_norms(5, 1) == (8, 8, 12)
    assert seifert_norms(-1, 1) == (16, 16, 16)


def test_seifert_norms_match_distance_evaluation():
    gammas = (Slope(1, 1), Slope(2, 1), Slope(3, 1))
    for p, q in odd_sweep():
        prof = seminorm_profile(p, q)
        norms = seifert_norms(p, q)
        assert tuple(evaluate_norm(prof, g) for g in gammas) == norms


def test_character_counts_5_1():
    ct = seifert_character_counts(5, 1, 1)
    assert (ct.psl2_total, ct.psl2_irreducible, ct.sl2_nonabelian) == (3, 0, 0)
    ct = seifert_character_counts(5, 1, 2)
    assert ct.sl2_nonabelian == 0  # (3/2)(|p-4q|-1)
    ct = seifert_character_counts(5, 1, 3)
    assert ct.sl2_nonabelian == 2  # 2(|p-3q|-1)
    with pytest.raises(ValidationError):
        seifert_character_counts(5, 1, 4)
    with pytest.raises(ScopeError):
        seifert_character_counts(2, 1, 1)


def test_character_counts_consistency_sweep():
    for p, q in odd_sweep(15, 4):
        for sigma in (1, 2, 3):
            seifert_character_counts(p, q, sigma)  # all row sums asserted inside


def test_twisted_alexander():
    assert twisted_alexander(5, 1, False) == LaurentPoly({1: 1, 0: -1})
    assert twisted_alexander(5, 1, True) == LaurentPoly({2: 1, 1: 3, 0: 1})
    assert twisted_alexander(0, 1, True) == LaurentPoly({2: 1, 1: -2, 0: 1})


def test_nonabelian_reducible_u2():
    a, b = nonabelian_reducible_u2(5, 1)
    assert sorted([a.real, b.real]) == pytest.approx(
        sorted([(-3 + math.sqrt(5)) / 2, (-3 - math.sqrt(5)) / 2])
    )
    assert a * b == pytest.approx(1.0)  # product of the quadratic roots
    da, db = nonabelian_reducible_u2(4, 1)
    assert da == pytest.approx(-1.0) and db == pytest.approx(-1.0)
    with pytest.raises(DegenerateCase):
        nonabelian_reducible_u2(0, 1)


def test_linear_system_examples():
    r = solve_linear_system(7, 2)
    assert (r.a, r.s_min, r.rank) == ((2, 4, 2), 12, 4)
    r = solve_linear_system(-1, 1)
    assert (r.a, r.s_min, r.rank, r.z, r.z_candidates) == ((2, 2, 0), 4, 3, 0, (0,))
    r = solve_linear_system(5, 1)
    assert (r.a, r.s_min, r.rank) == ((2, 2, 0), 8, 4)


def test_linear_system_ambiguous_range_uses_mirror():
    # on (2, 3) the parity/positivity constraints admit a second candidate
    r = solve_linear_system(5, 2)
    assert r.z_candidates == (0, 4)
    assert r.reduction_used is not None and "(3,2)" in r.reduction_used
    # far range (6, inf) also goes through the mirror
    r = solve_linear_system(13, 2)
    assert r.rank == 3 and r.reduction_used is not None


def test_linear_system_matches_profile_sweep():
    for p, q in odd_sweep(19, 6):
        res = solve_linear_system(p, q)
        prof = seminorm_profile(p, q)
        assert res.a == prof.a and res.s_min == prof.s_min
        assert res.z == 0


def test_detected_slopes():
    assert detected_slopes(1, 1)["detected"] == (False, True, False)   # p = 2q - 1
    assert detected_slopes(5, 1)["detected"] == (True, True, False)    # q = 1
    assert detected_slopes(7, 2)["detected"] == (True, True, True)
    assert detected_slopes(-3, 2)["detected"] == (True, True, True)
