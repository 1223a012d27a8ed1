"""
Squares, Milnor primitives and Adem relations
=============================================

Steenrod squares acting on polynomials over F2, and a word of squares
brought to admissible form.
"""

from steenrod2.action import milnor_q, sq, total_square
from steenrod2.poly import vector_space_ring
from steenrod2.steenrod import adem_normalize, admissible_words, format_sum, serre_generators

R = vector_space_ring(2)
u, v = R.var("u"), R.var("v")

# Sq^k of a product follows the Cartan formula
f = u ** 3 * v
for k in range(5):
    print(f"Sq^{k}({f}) = {sq(k, f)}")
print("total square:", total_square(f))

# The Milnor primitives kill squares and multiply uv by a sum of powers
for i in range(4):
    print(f"Q_{i}(u^2) = {milnor_q(i, u.square())}   Q_{i}(uv) = {milnor_q(i, u * v).factored_str()}")

# Adem relations rewrite any word as a sum of admissible words
for word in [(1, 1), (2, 2), (2, 3), (3, 5, 2)]:
    print(" ".join(f"Sq^{k}" for k in word), "=", format_sum(adem_normalize(word)) or "0")

print("admissible words of degree 7:", admissible_words(7))

# H^*(K_2) is polynomial on the admissible words of excess < 2
print("generator degrees of H^*(K_2) through 20:", serre_generators(2, 20).degrees)
