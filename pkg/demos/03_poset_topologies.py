"""
Zariski, flat and patch topologies on small posets
==================================================

A finite spectral space is the same thing as a finite poset.  The Zariski
opens are down-sets, the flat opens are up-sets and the patch topology is
their join.
"""

from finspec.topology import (
    chain,
    diamond,
    flat_topology,
    is_hausdorff,
    patch_topology,
    points_of,
    specialization_order,
    zariski_topology,
)


def show(name, t):
    opens = ", ".join("{" + ",".join(map(str, points_of(o))) + "}" for o in t.opens)
    print(f"  {name:8s} hausdorff={is_hausdorff(t)!s:5s} opens: {opens}")


# the spectrum of a discrete valuation ring: generic point 0 below closed point 1
dvr = chain(2)
print("DVR model")
for name, build in [("zariski", zariski_topology), ("flat", flat_topology), ("patch", patch_topology)]:
    show(name, build(dvr))

# flat is the Zariski topology of the opposite order
print("flat specialization edges:", specialization_order(flat_topology(dvr)).covers())
print("dual poset edges:         ", dvr.dual().covers())

# a bigger example
print("diamond")
for name, build in [("zariski", zariski_topology), ("flat", flat_topology), ("patch", patch_topology)]:
    t = build(diamond())
    print(f"  {name:8s} {len(t.opens)} opens, hausdorff={is_hausdorff(t)}")
