"""
Planar continued fractions
==========================

Locating a point in ever finer Farey triangles records a word in the
cases I, II, III.  Runs of case I are folded into the counts a_k, so the
word reads like a continued fraction.
"""

from fractions import Fraction as F

from fareybary import PlanePoint, expand, parse_sequence, replay

# a vertex of the partition: the expansion stops, like a finite continued fraction
print("2/3,1/3    ->", expand(PlanePoint(F(2, 3), F(1, 3)), 40).termination.value)

# a generic rational point
p = PlanePoint(F(31415, 100000), F(2718, 100000))
seq = expand(p, 40)
print("p          ->", seq, f"({seq.termination.value})")

# replaying the word gives back a unimodular triangle around p
t = replay(seq)
print("det of the final vertex matrix:", t.det)
print("radii r1 <= r2 <= r3:", t.radii)

# the compressed text form, and the raw form it stands for
s = parse_sequence("2(III),2(II)")
print("2(III),2(II) is the raw word", ",".join(c.value for c in s.raw()))
