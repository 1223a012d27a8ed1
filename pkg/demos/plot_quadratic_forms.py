"""
Quadratic forms and kernels of operations
=========================================

Forms on F2^n, their GL_n orbits, and which forms a class of H^*(K_2)
sends to zero.
"""

from steenrod2 import qforms
from steenrod2.operations import kernel_set, named, parse_class

# Orbits of quadratic forms, labelled by rank, defect and Arf invariant
for n in range(4):
    print(f"n = {n}:")
    for cls, size in qforms.orbit_census(n):
        print(f"   {size:4d}  {cls.label:22s} {cls.representative}")

# A nondefective form has Arf invariant given by a majority vote of its values
q = qforms.QuadraticForm.parse("u*v + w*x + w^2 + x^2")
print(q, "zeros:", qforms.zero_count(q), "Arf:", qforms.arf(q), qforms.arf_by_reduction(q))

# d2 vanishes exactly on the anisotropic plane and on squares of linear forms
d2 = named("d2")
print("d2 =", d2)
print("kernel of d2 on n = 2:", sorted(str(f) for f in kernel_set(d2, 2)))

# A monomial class has a larger kernel
print("|kernel of i2*q0| on n = 3:", len(kernel_set(parse_class("i2*q0"), 3)))
