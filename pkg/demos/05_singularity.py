"""
Area ratios shrink almost everywhere
====================================

Compare the barycentric triangle with the Farey triangle of the same
address.  For typical points the ratio of areas collapses, because the
run lengths a_k keep growing.  The tribonacci point is a measure-zero
exception where the ratio grows instead.
"""

from fareybary import lemma_inequality_check, monte_carlo, parse_sequence, ratio_series

for rec in ratio_series(parse_sequence(",".join(["1(II)"] * 8))):
    print(f"n={rec.n}  s_n={rec.s_n}  ratio={float(rec.ratio):.4f}")

# random points, same seed, two depths
for depth in (20, 60):
    s = monte_carlo(300, depth, seed=42)
    print(f"depth {depth}: median s_n/n = {s.median_sn_over_n:.3f}, median log3 ratio = {s.median_log3_ratio:.2f}")

print("corner-triangle bound at (3,5,8), L=4:", lemma_inequality_check(3, 5, 8, 4))
