"""
Tokuyama's formula for A2
=========================

The rank two type A case is a proven formula, so it makes a good check
that patterns, decorations and contributions are wired together correctly.
"""

from g2tokuyama.a2patterns import (
    decorate_a2,
    enumerate_a2,
    pattern_monomial_a2,
    standard_contribution_a2,
    verify_tokuyama_a2,
)

# theta = 0 sums over the eight patterns of B(rho)
lam = (1, 1)
for pi in enumerate_a2(lam):
    dec = decorate_a2(pi, lam)
    print(f"{dec.render(pi):16s} {pattern_monomial_a2(pi)}  {standard_contribution_a2(dec)}")

# the identity holds for every dominant theta; try a small grid
for l1 in range(4):
    for l2 in range(4):
        report = verify_tokuyama_a2((l1, l2))
        print((l1, l2), report.counts["patterns"], "patterns, equal:", report.equal)
