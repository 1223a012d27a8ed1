"""
Tor from the reduced bar complex
================================

Tor over truncated H^*(K_p) with coefficients in H^*(K_2) pulled back
along a class psi, and the trivial module as a loop-space check.
"""

from steenrod2 import bar
from steenrod2.lannes import tv_F_dims, tv_HK_degree0
from steenrod2.operations import parse_class

psi = parse_class("i2^2")
table = bar.bar_tor(4, psi, 12, 3)
print(table.render())
print("d^2 = 0 checked on", table.d_squared_checks, "basis chains")

report = bar.structural_report(4, psi, 12, 3)
for key in ("tor0_matches_quotient", "vanishes_below_sp", "tor1p_zero", "euler", "connectivity"):
    print(f"{key:24s}{report[key]}")

# Over the trivial module the totals reproduce the cohomology of the loop space
for p in (2, 3):
    check = bar.loop_collapse_check(p, 8)
    print(f"p = {p}: bar totals {check['bar_totals']}, loop space {check['fiber_dims']}")

# T_V of a free unstable module, and the degree-0 part of T_V H^*(K_p)
print("T_V F(2), dim V = 2:", tv_F_dims(2, 2, 8))
print("dim T_V H^*(K_2) in degree 0, dim V = 2:", tv_HK_degree0(2, 2))
