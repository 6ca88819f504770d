"""
Root data, Weyl group and shifted characters
============================================

Build the G2 root datum, walk its Weyl group and compute a few shifted
characters and deformed numerators with exact arithmetic.
"""

from g2tokuyama.characters import deformed_denominator, shifted_character, tokuyama_numerator
from g2tokuyama.roots import build_g2_datum, weyl_dimension, weyl_group_elements

G2 = build_g2_datum()

# positive roots in root coordinates: x is the short simple root, y the long one
print("positive roots:", G2.positive_roots)
print("rho:", G2.rho)
print("Gram matrix:\n", G2.gram)

# the Weyl group has 12 elements; the longest one acts as -1
W = weyl_group_elements(G2)
print("order:", len(W), " lengths:", [w.length for w in W])
print("longest element:", W[-1].matrix)

# the 7-dimensional representation, shifted so its lowest weight sits at 1
chi = shifted_character(G2, (1, 0))
print("dim:", weyl_dimension(G2, (1, 0)), " character:", chi.poly)

# the deformed denominator prod (1 - t x^a), and the numerator chi * D
print("D =", deformed_denominator(G2))
N = tokuyama_numerator(G2, (1, 0))
at_one = {tuple(e): c for e, c in N.specialize(1).items()}
print("N has", len(N), "terms; at t = 1 it collapses to", at_one)
