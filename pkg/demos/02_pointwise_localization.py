"""
Adjoining pointwise inverses
============================

Every element of a finite ring can be forced to have a pointwise inverse.
The universal answer collapses nilpotents and leaves units alone.
"""

from finspec.expr import build_ring
from finspec.pointwise import (
    adjoin_pointwise_inverse,
    full_pointwise_ring,
    localization_invariants,
    universal_property_check,
    verify_stalks,
)
from finspec.ring import enumerate_homs, is_absolutely_flat

# one element at a time: 2 in Z/4 is nilpotent, so it dies
loc = adjoin_pointwise_inverse(build_ring("Z/4"), 2)
print("Z/4 with 2 inverted ->", loc.result, "eta =", loc.eta.map.tolist())

# everything at once
r = build_ring("Z/12")
full = full_pointwise_ring(r)
print("R^(-1)R of Z/12 has", full.result.size, "elements; kernel", full.eta.kernel().sorted())
print("result regular:", is_absolutely_flat(full.result))

# any map into a field factors through it, and uniquely
for k in ["GF(2)", "GF(3)", "GF(4)"]:
    for phi in enumerate_homs(r, build_ring(k)):
        psi = universal_property_check(full, phi)
        print(f"  {k}: phi = {phi.map.tolist()} factors via {psi.map.tolist()}")

# stalks of the new ring are the residue fields of the old one
for rec in verify_stalks(full):
    print(f"  stalk over {list(rec.source_prime)[:4]}... has {rec.stalk_size} elements")

for name, ok in localization_invariants(full, full=True).items():
    print(f"  {name:22s} {ok}")
