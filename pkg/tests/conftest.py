from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings

from fareybary.exact import PlanePoint

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def P(x, y) -> PlanePoint:
    return PlanePoint(Fraction(x), Fraction(y))


@pytest.fixture
def tribonacci_point():
    from fareybary.algebraic import PeriodicSpec, periodic_to_cubic
    from fareybary.farey import parse_sequence

    return periodic_to_cubic(PeriodicSpec(parse_sequence(""), parse_sequence("1(II)"))).point
