from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from fareybary.exact import (
    BASE_TRIANGLE,
    DegenerateError,
    DomainError,
    LatticeVec,
    PlanePoint,
    TriangleState,
    barycentric_coords,
    combine,
    farey_sum,
    minkowski_q,
    normalize,
    point_to_vec,
    shoelace_area,
    triangle_area,
    vec_to_point,
)
from strategies import base_points

F = Fraction


def test_farey_center_of_base_triangle():
    s = farey_sum(LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), LatticeVec(1, 1, 1))
    assert s == LatticeVec(2, 1, 3)
    assert vec_to_point(s) == P(F(2, 3), F(1, 3))


def test_farey_sum_is_not_reduced():
    v = LatticeVec(1, 2, 3)
    assert farey_sum(v, v, v) == LatticeVec(3, 6, 9)
    assert farey_sum(LatticeVec(1, 0, 2), LatticeVec(0, 0, 1), LatticeVec(1, 1, 1)) == LatticeVec(2, 1, 4)


def test_point_vector_conversions():
    assert vec_to_point(LatticeVec(0, 0, 1)) == P(0, 0)
    assert point_to_vec(P(F(3, 5), F(1, 5))) == LatticeVec(3, 1, 5)
    assert normalize(LatticeVec(4, 2, 6)) == LatticeVec(2, 1, 3)
    with pytest.raises(DegenerateError):
        vec_to_point(LatticeVec(1, 1, 0))


def test_plane_point_text():
    assert str(P(F(5, 9), F(1, 9))) == "5/9,1/9"
    assert str(P(1, 0)) == "1,0"


def test_triangle_areas():
    assert triangle_area(BASE_TRIANGLE) == F(1, 2)
    big = TriangleState(LatticeVec(0, 0, 1), LatticeVec(2, 0, 1), LatticeVec(2, 2, 1))
    assert triangle_area(big) == 2
    flat = TriangleState(LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), LatticeVec(2, 0, 1))
    assert flat.is_degenerate and triangle_area(flat) == 0


def test_barycentric_examples():
    assert barycentric_coords(P(0, 0), BASE_TRIANGLE) == (1, 0, 0)
    assert barycentric_coords(P(F(2, 3), F(1, 3)), BASE_TRIANGLE) == (F(1, 3),) * 3
    child = TriangleState(LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), LatticeVec(2, 1, 3))
    assert barycentric_coords(P(F(1, 2), F(1, 6)), child) == (F(1, 3), F(1, 6), F(1, 2))


def test_barycentric_rejects_degenerate():
    flat = TriangleState(LatticeVec(0, 0, 1), LatticeVec(1, 0, 1), LatticeVec(2, 0, 1))
    with pytest.raises(DomainError):
        barycentric_coords(P(0, 0), flat)


def test_minkowski_question_mark():
    assert minkowski_q(F(0), 10) == 0
    assert minkowski_q(F(1), 10) == 1
    assert minkowski_q(F(1, 2), 10) == F(1, 2)
    assert minkowski_q(F(1, 3), 10) == F(1, 4)
    assert minkowski_q(F(2, 5), 10) == F(3, 8)
    with pytest.raises(DomainError):
        minkowski_q(F(3, 2), 5)


def test_minkowski_unreached_point_within_bound():
    # 1/20 is first produced by the 19th mediant, out of reach at depth 12
    exact = minkowski_q(F(1, 20), 40)
    assert exact == F(1, 2 ** 19)
    approx = minkowski_q(F(1, 20), 12)
    assert approx != exact
    assert abs(approx - exact) <= F(1, 2 ** 12)


@given(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=200), min_size=2, max_size=8))
def test_minkowski_monotone(xs):
    xs = sorted(set(xs))
    vals = [minkowski_q(x, 30) for x in xs]
    assert vals == sorted(vals)


@given(base_points())
def test_vec_point_round_trip(p):
    assert vec_to_point(point_to_vec(p)) == p


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 50), st.integers(1, 9))
def test_point_to_vec_of_vec_to_point_normalizes(p, q, r, k):
    v = LatticeVec(k * p, k * q, k * r)
    assert point_to_vec(vec_to_point(v)) == normalize(v)


@given(base_points(), base_points(), base_points(), base_points())
def test_barycentric_sum_and_recombination(p, a, b, c):
    t = TriangleState(point_to_vec(a), point_to_vec(b), point_to_vec(c))
    if t.is_degenerate:
        return
    w = barycentric_coords(p, t)
    assert sum(w) == 1
    assert combine(w, t) == p
    assert triangle_area(t) == shoelace_area(a, b, c)


def test_plane_point_coerces_to_fraction():
    p = PlanePoint(1, 0)
    assert isinstance(p.x, Fraction) and p.in_base_triangle()
    assert not PlanePoint(0, 1).in_base_triangle()
