"""
A deformation of the G2 Weyl character formula
==============================================

Sum corrected contributions over G2 Littelmann patterns and compare with
the product of the shifted character and the deformed denominator.
"""

from g2tokuyama.characters import deformed_denominator
from g2tokuyama.g2patterns import (
    Census,
    conjecture_rhs,
    decorate,
    enumerate_crystal,
    hat_contribution,
    is_corrected,
    standard_contribution,
    verify_conjecture,
)
from g2tokuyama.roots import build_g2_datum

G2 = build_g2_datum()

# theta = 0: the crystal B(rho) has 64 patterns
census = Census()
rhs = conjecture_rhs((0, 0), census)
print(census.as_dict())
print("sum equals D:", rhs == deformed_denominator(G2))

# the patterns whose corrected value differs from the standard one
lam = (1, 1)
for pi in enumerate_crystal(lam):
    dec = decorate(pi, lam)
    if is_corrected(pi, dec):
        H, Hhat = standard_contribution(pi, dec), hat_contribution(pi, dec)
        if H != Hhat:
            print(f"{dec.render(pi):28s} H = {H}   corrected = {Hhat}")

# a small grid of weights; the CLI runs larger grids in parallel
for theta in [(0, 1), (1, 0), (1, 1), (2, 2)]:
    report = verify_conjecture(theta)
    print(theta, report.counts, "equal:", report.equal)
