import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TA, TB, curves, random_curve, sl2_matrices, twists
from monodromy.sl2 import (
    ALPHA,
    BETA,
    IDENTITY,
    IntMatrix2,
    TorusCurve,
    TwistPower,
    apply_to_curve,
    intersection,
    intersection_growth,
    mat_inv,
    mat_mul,
    recognize_twist,
    sl2_transporter,
    twist_matrix,
)


def M(rows):
    return IntMatrix2.from_rows(rows)


def test_mat_mul_examples():
    assert mat_mul(TA, TB) == M([[0, -1], [1, 1]])
    assert mat_mul(IDENTITY, TA) == TA
    ab = mat_mul(TA, TB)
    assert mat_mul(mat_mul(ab, ab), ab) == M([[-1, 0], [0, -1]])


def test_mat_inv_examples():
    assert mat_inv(TA) == M([[1, 1], [0, 1]])
    assert mat_inv(IDENTITY) == IDENTITY
    assert mat_mul(mat_inv(TB), TB) == IDENTITY


def test_from_rows_rejects_det():
    with pytest.raises(ValueError):
        M([[2, 0], [0, 1]])


def test_twist_matrix_examples():
    assert twist_matrix(TwistPower(ALPHA)) == M([[1, -1], [0, 1]])
    assert twist_matrix(TwistPower(BETA)) == M([[1, 0], [1, 1]])
    assert twist_matrix(TwistPower(ALPHA, -1)) == M([[1, 1], [0, 1]])


def test_twist_matrix_is_the_transvection():
    # v + k<v,c>c with <(a,b),(p,q)> = aq - bp, written out by hand
    for p, q in [(1, 0), (0, 1), (2, 3), (3, -5), (1, 1)]:
        for k in (-2, -1, 1, 3):
            A = twist_matrix(TwistPower(TorusCurve.of(p, q), k))
            for a, b in [(1, 0), (0, 1), (4, -7)]:
                f = a * q - b * p
                assert (A.a * a + A.b * b, A.c * a + A.d * b) == (a + k * f * p, b + k * f * q)


def test_curve_validation():
    with pytest.raises(ValueError):
        TorusCurve(2, 4)
    with pytest.raises(ValueError):
        TorusCurve(-1, 2)
    with pytest.raises(ValueError):
        TorusCurve(0, -1)
    assert TorusCurve.of(-1, 2) == TorusCurve(1, -2)
    with pytest.raises(ValueError):
        TwistPower(ALPHA, 0)


def test_apply_to_curve_examples():
    assert apply_to_curve(TA, BETA) == TorusCurve(1, -1)
    assert apply_to_curve(TB, ALPHA) == TorusCurve(1, 1)
    c = TorusCurve(3, -7)
    assert apply_to_curve(IDENTITY, c) == c


def test_intersection_examples():
    assert intersection(ALPHA, BETA) == 1
    assert intersection(TorusCurve(2, 5), TorusCurve(2, 5)) == 0
    assert intersection(TorusCurve(1, -1), TorusCurve(1, 1)) == 2


def test_intersection_growth_examples():
    assert intersection_growth(ALPHA, BETA, 3) == 3
    assert intersection_growth(TorusCurve(2, 7), TorusCurve(1, 4), 0) == 0
    assert intersection_growth(TorusCurve(1, -1), TorusCurve(1, 1), 2) == 8


def test_recognize_examples():
    assert recognize_twist(M([[1, -1], [0, 1]])) == TwistPower(ALPHA, 1)
    assert recognize_twist(IDENTITY) == "identity"
    assert recognize_twist(M([[0, -1], [1, 1]])) == "not a twist power"
    assert recognize_twist(-IDENTITY) == "not a twist power"
    # trace 2 but not a power of a single twist: [[1,0],[2,1]] is T_b^2
    assert recognize_twist(M([[1, 0], [2, 1]])) == TwistPower(BETA, 2)


def test_transporter():
    rng = random.Random(5)
    for _ in range(200):
        c = random_curve(rng)
        A = sl2_transporter(c)
        assert A.det() == 1
        assert apply_to_curve(A, c) == ALPHA


@given(sl2_matrices(), sl2_matrices())
def test_product_determinant(A, B):
    assert mat_mul(A, B).det() == 1
    assert mat_mul(A, mat_inv(A)) == IDENTITY
    assert mat_mul(mat_inv(A), A) == IDENTITY


@given(twists())
def test_recognize_round_trip(t):
    assert recognize_twist(twist_matrix(t)) == t


@given(sl2_matrices(), curves(), st.integers(-4, 4).filter(bool))
def test_conjugation_covariance(A, c, k):
    lhs = twist_matrix(TwistPower(apply_to_curve(A, c), k))
    rhs = mat_mul(mat_mul(A, twist_matrix(TwistPower(c, k))), mat_inv(A))
    assert lhs == rhs


@given(sl2_matrices(), curves(), curves())
def test_intersection_invariance(A, c, d):
    assert intersection(apply_to_curve(A, c), apply_to_curve(A, d)) == intersection(c, d)
    assert intersection(c, d) == intersection(d, c)


@given(curves(), curves(), st.integers(-20, 20))
def test_growth_formula(c, d, k):
    assert intersection_growth(c, d, k) == abs(k) * intersection(c, d) ** 2


def test_power():
    assert TA**0 == IDENTITY
    assert TA**5 == M([[1, -5], [0, 1]])
    assert TA**-2 == M([[1, 2], [0, 1]])
    # big exponents stay exact
    assert (TA**(10**30)).b == -(10**30)
