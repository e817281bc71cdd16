from fractions import Fraction

import pytest

from cyclepack.ineq import (
    check_linear_system, check_quadratic_system_k5, feasibility_row, feasible_a_range, linear_holds,
    quadratic_holds, type_vectors,
)


def test_type_vectors_respect_constraints():
    for km1 in range(1, 12):
        vecs = list(type_vectors(km1))
        assert all(sum(v) == km1 and v[0] <= 1 and min(v) >= 0 for v in vecs)
        # theta1 = 0 gives C(km1+2, 2) vectors, theta1 = 1 gives C(km1+1, 2)
        assert len(set(vecs)) == len(vecs) == (km1 + 2) * (km1 + 1) // 2 + (km1 + 1) * km1 // 2
        assert vecs == sorted(vecs)


@pytest.mark.parametrize("km1", [6, 30])
def test_linear_infeasible(km1):
    res = check_linear_system(km1)
    assert not res.feasible and res.witnesses == [] and res.checked > 0


@pytest.mark.parametrize("km1", [1, 2, 3, 4])
def test_linear_feasible_small(km1):
    res = check_linear_system(km1)
    assert res.feasible
    for w in res.witnesses:
        t1, t2, t3, t4 = w.thetas
        bound = Fraction(2 * km1, 3) - Fraction(1, 3)
        assert bound < t1 + t2 + Fraction(t3, 3) + Fraction(t4, 2)
        assert bound < Fraction(t1, 3) + t3 + Fraction(7, 9) * t4


def test_linear_known_witnesses():
    assert [w.thetas for w in check_linear_system(1).witnesses] == [(0, 0, 0, 1)]
    assert (1, 0, 0, 3) in [w.thetas for w in check_linear_system(4).witnesses]


def test_linear_rejects_zero():
    with pytest.raises(ValueError):
        check_linear_system(0)


def test_linear_bounds_are_strict():
    # k-1 = 1: bound 1/3; theta = (0,0,1,0) gives exactly 1/3 on the first side
    assert not linear_holds(1, (0, 0, 1, 0))


def test_quadratic_system_infeasible():
    res = check_quadratic_system_k5()
    assert not res.feasible and res.witnesses == []
    assert res.checked == 36 * 3


def test_quadratic_single_assignments():
    assert feasible_a_range((0, 5, 0, 0), 0) is None
    assert not any(quadratic_holds((0, 5, 0, 0), a, 0) for a in range(1, 200))
    assert feasible_a_range((0, 0, 5, 0), 0) is None
    assert not any(quadratic_holds((0, 0, 5, 0), a, 0) for a in range(1, 200))


def test_sign_analysis_matches_enumeration():
    for theta in type_vectors(5):
        for b in (0, 1, 2):
            rng = feasible_a_range(theta, b)
            found = [a for a in range(1, 10_001) if quadratic_holds(theta, a, b)]
            if rng is None:
                assert found == []
            else:
                lo, hi = rng
                expect = list(range(lo, (hi if hi is not None else 10_000) + 1))
                assert found == [a for a in expect if a <= 10_000]


def test_sign_analysis_closed_form():
    # theta = (0,0,0,5), b = 0: 9a+1 <= 7.5a fails for all a; (0,2,0,3), b = 1 fails on the second
    assert feasible_a_range((0, 0, 0, 5), 0) is None
    # second constraint: 9a+4 <= 3(2a+1), never
    assert feasible_a_range((0, 2, 0, 3), 1) is None


def test_rows_follow_expected_pattern():
    for km1 in range(1, 21):
        row = feasibility_row(km1)
        assert row["feasible"] == (km1 <= 4) == row["expected_feasible"]
    assert feasibility_row(5)["system"] == "quadratic"
    assert feasibility_row(5)["linear_feasible"]


def test_integer_form_matches_rational_form():
    for km1 in range(1, 31):
        bound = Fraction(2 * km1, 3) - Fraction(1, 3)
        for t1, t2, t3, t4 in type_vectors(km1):
            rational = (bound < t1 + t2 + Fraction(t3, 3) + Fraction(t4, 2)
                        and bound < Fraction(t1, 3) + t3 + Fraction(7 * t4, 9))
            assert linear_holds(km1, (t1, t2, t3, t4)) == rational
