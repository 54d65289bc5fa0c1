"""
The map between the partitions
==============================

delta sends every Farey vertex to the barycentric vertex with the same
address and interpolates linearly in between.  As the depth grows these
piecewise-linear maps converge.
"""

from fractions import Fraction as F

from fareybary import PlanePoint, delta, delta_inverse, delta_n

p = PlanePoint(F(3, 5), F(1, 5))
for n in range(5):
    print(f"delta_{n}(3/5,1/5) = {delta_n(p, n)}")

# the limit, with a certified bound; rational points are exact
q = PlanePoint(F(1234, 4567), F(321, 4567))
r = delta(q, F(1, 10 ** 9))
print("delta(1234/4567, 321/4567) =", r.value, "exact" if r.exact else f"+- {float(r.error_bound):.1e}")

back = delta_inverse(r.value, F(1, 10 ** 9))
print("and back again:", back.value)
