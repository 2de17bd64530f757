"""
From a point set to a simultaneous embedding and back
=====================================================

Build the gadget family for the six-point configuration, place it from the
known realization, check the placement, then read the order type back.
Swapping two interior points of one copy breaks the embedding.
"""

from sgereduce import chirotope_from_points, reduce_to_sge
from sgereduce.geometry import mirror, verify_sge
from sgereduce.solver import embed_from_realization, extract_realization

pts = [(0, 0), (6, 12), (12, 0), (2, 2), (3, 1), (2, 1)]
chi = chirotope_from_points(pts)

inst = reduce_to_sge(chi)
print(f"{inst.k} graphs on {len(inst.labels)} shared labels")
for name, g in zip(inst.names, inst.graphs):
    print(f"  {name}: {len(g.edges)} edges")

placement = embed_from_realization(chi, pts, inst)
report = verify_sge(inst, placement)
print(report.describe())

_, back = extract_realization(inst, placement)
print("extracted order type equals the input:", back == chi)

# the mirror image is also a valid embedding; it encodes -chi
flipped = mirror(placement)
print("mirror accepted:", bool(verify_sge(inst, flipped)))
print("mirror extracts -chi:", extract_realization(inst, flipped)[1] == -chi)

# trade places of a and b in copy 1
moved = dict(placement)
moved["3#1"], moved["4#1"] = placement["4#1"], placement["3#1"]
print("after swapping a#1 and b#1:", verify_sge(inst, moved).describe())
