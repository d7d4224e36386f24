"""
Rings, ideals and prime spectra
===============================

Finite commutative rings are stored as addition and multiplication tables.
"""

from finspec.expr import build_ring
from finspec.ring import idempotents, nilradical, pointwise_inverse, reduced_ring, is_absolutely_flat
from finspec.spectrum import residue_field, spec

# Z/12 splits as Z/4 x Z/3: two primes, one nilpotent direction
r = build_ring("Z/12")
print(r, "idempotents:", idempotents(r), "nilradical:", nilradical(r).sorted())

for p in spec(r):
    k, _ = residue_field(r, p)
    print(f"  prime {p.ideal.sorted()} with residue field of size {k.size}")

# killing the nilradical leaves a product of fields
red, pi = reduced_ring(r)
print("R_red has", red.size, "elements; regular:", is_absolutely_flat(red))

# pointwise inverses exist exactly when a lies in R a^2
for a in range(12):
    print(f"  {a:2d} -> {pointwise_inverse(r, a)}")

# the same questions for rings built from polynomials
for text in ["GF(8)", "Z/2[x]/(x^2)", "Z/4[x]/(x^2+x+1)", "Z/2 x GF(4)"]:
    s = build_ring(text)
    print(f"{text:18s} size {s.size:3d}  primes {len(spec(s))}  regular {is_absolutely_flat(s)}")
