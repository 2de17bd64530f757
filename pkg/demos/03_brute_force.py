"""
Solving a tiny instance from scratch
====================================

For four points (a triangle and one point inside) the reduced instance has
seven vertices. A plain backtracking search over a 7x7 integer grid finds a
simultaneous embedding without ever being told the points, and the order
type falls out of the result.
"""

import time

from sgereduce import chirotope_from_points, reduce_to_sge
from sgereduce.geometry import verify_sge
from sgereduce.solver import brute_force_sge, extract_realization

chi = chirotope_from_points([(0, 0), (3, 0), (0, 3), (1, 1)])
inst = reduce_to_sge(chi)

t0 = time.perf_counter()
placement = brute_force_sge(inst, 6)
print(f"search took {time.perf_counter() - t0:.2f}s")

for label in inst.labels:
    p = placement[label]
    print(f"  {label:>4}: ({p.x}, {p.y})")

assert verify_sge(inst, placement)
_, found = extract_realization(inst, placement)
print("recovered", "chi" if found == chi else "-chi" if found == -chi else "something else")
