"""
Two ways to cut a triangle
==========================

The Farey partition splits each triangle at the sum of its vertex
vectors; the barycentric one splits at the centroid.  Both give 3**n
triangles at depth n, but only the barycentric triangles all have the
same area.
"""

import sys
from collections import Counter
from pathlib import Path

from fareybary import bary_partition, partition, render_partition, triangle_area

# depth 1: the two partitions coincide, because the Farey sum of the
# base corners happens to be the centroid
print("Farey, depth 1: ", [str(p) for p in partition(1)[0].points])
print("bary,  depth 1: ", [str(p) for p in bary_partition(1)[0].points])

# depth 3: Farey areas spread out, bary areas are all 1/(2*27)
for name, tris in (("Farey", partition(3)), ("bary", bary_partition(3))):
    areas = Counter(triangle_area(t) for t in tris)
    print(f"{name:5s} depth 3 areas:", ", ".join(f"{a} x{k}" for a, k in sorted(areas.items())))

# SVG pictures, written next to wherever you run this from
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
for kind in ("farey", "bary"):
    path = out / f"{kind}_depth5.svg"
    path.write_text(render_partition(kind, 5))
    print("wrote", path)
