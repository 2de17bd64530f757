"""
Order types, hulls and sweeps
=============================

A six-point configuration: a big triangle h1, h2, h3 with three points
a, b, c inside. We compute its chirotope, the clockwise hull, the angular
sweep around every point, and rebuild the chirotope from the sweeps alone.
"""

from sgereduce import chirotope_from_points, convex_hull
from sgereduce.chirotope import all_surrounding_sequences, reconstruct_chirotope, validate_chirotope

names = ["h1", "h2", "h3", "a", "b", "c"]
pts = [(0, 0), (6, 12), (12, 0), (2, 2), (3, 1), (2, 1)]

chi = chirotope_from_points(pts)
print("signs over lexicographic triples:", chi.sign_string())
print("valid:", bool(validate_chirotope(chi)))

hull = convex_hull(chi)
print("clockwise hull:", [names[h] for h in hull])

# hull points sweep from their hull predecessor to their successor;
# interior points get a cyclic order starting at the smallest label
seqs = all_surrounding_sequences(chi)
for v, s in seqs.items():
    print(f"  {names[v]:>2} ({s.kind}):", " ".join(names[u] for u in s.order))

# the sweeps plus the hull pin down every sign
assert reconstruct_chirotope(hull, seqs) == chi
print("rebuilt from sweeps: identical")

# a reflection flips every sign
mirrored = chirotope_from_points([(-x, y) for x, y in pts])
print("mirror gives -chi:", mirrored == -chi)
