"""
Cubic irrationals go to rationals
=================================

A point whose Farey word repeats 1(II) forever has coordinates in the
cubic field of the tribonacci constant.  The same word in the
barycentric partition names the rational point (5/6, 1/2).
"""

from fractions import Fraction as F

from fareybary import PeriodicSpec, delta, expand, parse_sequence, periodic_to_cubic, periodic_to_rational

spec = PeriodicSpec(parse_sequence(""), parse_sequence("1(II)"))
cubic = periodic_to_cubic(spec)
print("eigenvalue:", cubic.eigenvalue.min_poly, "~", float(cubic.eigenvalue))
print("alpha:", cubic.alpha.min_poly, "~", float(cubic.alpha))
print("beta: ", cubic.beta.min_poly, "~", float(cubic.beta))

# the exact point re-expands to the word we started from
print("re-expansion:", expand(cubic.point, 6))

rational = periodic_to_rational(spec)
image = delta(cubic.point, F(1, 10 ** 12))
print("bary point:", rational)
print("delta of the cubic point ~", [float(v) for v in image.value], "at depth", image.depth_used)

# a mixed period works the same way
mixed = PeriodicSpec(parse_sequence("1(I)"), parse_sequence("1(III),1(II)"))
print("1(I) then (1(III),1(II)) forever:", periodic_to_cubic(mixed).point.approx(), "->",
      periodic_to_rational(mixed))
