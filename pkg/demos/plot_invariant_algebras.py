"""
Invariant subalgebras of F2[u, v]
=================================

The Dickson algebra three ways, the two generating sets of H_2, the
fiber product M_2, and the norm sequence for the swap.
"""

from steenrod2 import invariants

cap = 12
for route, dims in invariants.dickson_dims(cap).items():
    print(f"{route:14s}{dims}")

# The Milnor-type and Stiefel-Whitney generating sets of H_2 part ways in degree 4
rep = invariants.h2_two_descriptions_report(cap)
print("Milnor generators           ", rep["milnor_dims"])
print("Stiefel-Whitney generators  ", rep["stiefel_whitney_dims"])
print("first degree they differ:    ", rep["first_raw_mismatch"])
# and agree again once square roots are adjoined
print("after square roots:          ", rep["milnor_sqrt_dims"], rep["sqrt_equal"])

print("deg  D(2)  H2  M2")
for row in invariants.m2_table(cap):
    print(f"{row['degree']:3d} {row['dickson']:5d} {row['h2']:3d} {row['m2']:3d}")

norm = invariants.norm_sequence_check(cap)
print("ker/im of 1 + tau:", [r["homology_dim"] for r in norm["degrees"]], norm["ok"])
print("F2[u]/F2[u^2]:", invariants.ext_witness_dims(cap))
