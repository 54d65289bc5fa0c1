"""
The one-dimensional ancestor
============================

Minkowski's question-mark function matches mediants with midpoints.
Rationals reached by the bisection get exact values.
"""

from fractions import Fraction as F

from fareybary import minkowski_q

for x in (F(0), F(1, 3), F(2, 5), F(1, 2), F(3, 5), F(5, 8), F(1)):
    print(f"?({x}) = {minkowski_q(x, 40)}")
