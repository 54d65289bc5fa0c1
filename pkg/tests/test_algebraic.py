from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from fareybary.algebraic import (
    NotDominant,
    PeriodicSpec,
    char_poly,
    isolate_dominant_root,
    periodic_to_cubic,
    periodic_to_rational,
)
from fareybary.exact import PlanePoint, identity
from fareybary.farey import CaseTag, expand, parse_sequence, step_matrix
from fareybary.numberfield import IntPolynomial, peval
from oracles import column_distances, power_iteration_point

F = Fraction
I, II, III = CaseTag.I, CaseTag.II, CaseTag.III
x = sympy.Symbol("x")

# frozen from the power-iteration oracle at depth 50
TRIBONACCI_POINT = (0.7718445063460382, 0.4196433776070806)
II_III_POINT = (0.7627137804217585, 0.34444609126700904)


def _spec(pre: str, per: str) -> PeriodicSpec:
    return PeriodicSpec(parse_sequence(pre), parse_sequence(per))


def _brackets_zero(a) -> bool:
    lo, hi = a.isolating_interval
    p = a.min_poly.as_poly()
    return peval(p, lo) * peval(p, hi) <= 0


def test_char_poly_examples():
    assert char_poly(identity()) == IntPolynomial((-1, 3, -3, 1))
    assert str(char_poly(step_matrix(II, 1))) == "x^3 - x^2 - x - 1"
    c2 = ((0, 0, 1), (3, 0, 1), (0, 3, 1))
    p = char_poly(c2)
    assert str(p) == "x^3 - x^2 - 3*x - 9" and p(3) == 0


def test_char_poly_matches_sympy():
    for m in (step_matrix(II, 3), step_matrix(III, 2), ((2, 1, 0), (1, 3, 4), (0, 5, 7))):
        ours = sum(c * x ** i for i, c in enumerate(char_poly(m).coeffs))
        assert sympy.expand(ours - sympy.Matrix(m).charpoly(x).as_expr()) == 0


def test_isolate_dominant_root():
    lam = isolate_dominant_root(IntPolynomial((-1, -1, -1, 1)))
    assert abs(float(lam) - 1.839286755214161) < 1e-12
    three = isolate_dominant_root(IntPolynomial((-3, 1)))
    assert three.isolating_interval == (3, 3)
    with pytest.raises(NotDominant):
        isolate_dominant_root(IntPolynomial((-1, 3, -3, 1)))
    # roots 2 and -2 tie in modulus
    with pytest.raises(NotDominant):
        isolate_dominant_root(IntPolynomial((-4, 0, 1)))
    # complex pair 2 +- i is larger than the real root 1
    with pytest.raises(NotDominant):
        isolate_dominant_root(IntPolynomial((-5, 9, -5, 1)))


def test_tribonacci_cubic():
    r = periodic_to_cubic(_spec("", "1(II)"))
    assert str(r.eigenvalue.min_poly) == "x^3 - x^2 - x - 1"
    assert str(r.alpha.min_poly) == "4*x^3 - 4*x^2 + 2*x - 1"
    assert str(r.beta.min_poly) == "4*x^3 + 4*x^2 - 1"
    assert r.field_degree == 3 and r.algebra_dimension == 3
    assert abs(float(r.alpha) - TRIBONACCI_POINT[0]) < 1e-12
    assert abs(float(r.beta) - TRIBONACCI_POINT[1]) < 1e-12
    (xa, xb), (ya, yb) = r.point_interval
    assert xa <= F(TRIBONACCI_POINT[0]) + F(1, 10 ** 14) and F(TRIBONACCI_POINT[0]) - F(1, 10 ** 14) <= xb
    assert xb - xa <= F(1, 2 ** 40) and yb - ya <= F(1, 2 ** 40)


def test_tribonacci_closed_form():
    # alpha = l^2/(1+l^2), beta = l/(1+l^2) with l^3 = l^2 + l + 1
    lam = sympy.CRootOf(x ** 3 - x ** 2 - x - 1, 0)
    alpha = lam ** 2 / (1 + lam ** 2)
    beta = lam / (1 + lam ** 2)
    assert sympy.minimal_polynomial(alpha, x) == 4 * x ** 3 - 4 * x ** 2 + 2 * x - 1
    assert sympy.minimal_polynomial(beta, x) == 4 * x ** 3 + 4 * x ** 2 - 1
    r = periodic_to_cubic(_spec("", "1(II)"))
    assert abs(float(r.alpha) - float(alpha.evalf(30))) < 1e-15


def test_oracle_agrees_with_exact_point():
    ox, oy = power_iteration_point([II])
    assert (float(ox), float(oy)) == pytest.approx(TRIBONACCI_POINT, abs=1e-15)
    r = periodic_to_cubic(_spec("", "1(II)"))
    assert abs(float(r.alpha) - float(ox)) < 1e-13 and abs(float(r.beta) - float(oy)) < 1e-13


def test_columns_converge_monotonically():
    d = column_distances([II], TRIBONACCI_POINT)
    assert d[0] > d[1] > d[2]


@pytest.mark.parametrize("pre,per,copies", [
    ("", "1(II)", 12),
    ("", "1(II),1(III)", 4),
    ("raw:III,II", "2(II),1(III)", 3),
    ("1(I)", "1(III),1(II),1(II)", 3),
])
def test_cubic_point_re_expands(pre, per, copies):
    spec = _spec(pre, per)
    r = periodic_to_cubic(spec)
    want = spec.raw_prefix(copies)
    assert expand(r.point, len(want)).raw() == want
    assert r.alpha.degree <= 3 and r.beta.degree <= 3 and r.algebra_dimension <= 3
    assert _brackets_zero(r.alpha) and _brackets_zero(r.beta)


def test_mixed_period_against_oracle():
    r = periodic_to_cubic(_spec("", "1(II),1(III)"))
    assert (float(r.alpha), float(r.beta)) == pytest.approx(II_III_POINT, abs=1e-13)
    for a in (r.alpha, r.beta):
        assert sympy.Poly(sum(c * x ** i for i, c in enumerate(a.min_poly.coeffs)), x).is_irreducible


def test_pure_case_one_is_not_dominant():
    with pytest.raises(NotDominant):
        periodic_to_cubic(_spec("", "1(I)"))


def test_periodic_to_rational():
    assert periodic_to_rational(_spec("", "1(II)")) == PlanePoint(F(5, 6), F(1, 2))
    assert periodic_to_rational(PeriodicSpec([], [I])) == PlanePoint(F(1, 2), 0)
    q = periodic_to_rational(PeriodicSpec([I], [II]))
    assert q == PlanePoint(F(2, 3), F(1, 6))


def test_empty_period_rejected():
    with pytest.raises(ValueError):
        PeriodicSpec([], [])
