"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from fareybary.exact import PlanePoint
from fareybary.farey import CaseTag

cases = st.sampled_from(list(CaseTag))
raw_sequences = st.lists(cases, max_size=50)


@st.composite
def base_points(draw, max_den: int = 10 ** 6) -> PlanePoint:
    """Rational point of the closed base triangle 0 <= y <= x <= 1."""
    den = draw(st.integers(1, max_den))
    a = draw(st.integers(0, den))
    b = draw(st.integers(0, a))
    return PlanePoint(Fraction(a, den), Fraction(b, den))
