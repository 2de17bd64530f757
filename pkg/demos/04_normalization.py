"""
Making the hull a triangle
==========================

The reduction needs a triangular convex hull. Reorienting a few elements
(the combinatorial version of sending a point through infinity) turns a
convex hexagon into such a configuration, and the result is still drawable.
"""

from sgereduce import chirotope_from_points, convex_hull
from sgereduce.chirotope import normalize_triangular_hull, reorient
from sgereduce.solver import grid_realize

hexagon = [(2, 0), (4, 0), (6, 2), (4, 4), (2, 4), (0, 2)]
chi = chirotope_from_points(hexagon)
print("hull before:", list(convex_hull(chi)))

out, flipped = normalize_triangular_hull(chi)
print("flipped elements:", sorted(flipped))
print("hull after:", list(convex_hull(out)))
assert reorient(chi, flipped) == out

pts = grid_realize(out, 12)
print("grid realization of the normalized order type:")
for i, p in enumerate(pts):
    print(f"  {i}: ({p.x}, {p.y})")
assert chirotope_from_points(pts) == out
