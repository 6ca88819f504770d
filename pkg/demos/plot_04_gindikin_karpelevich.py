"""
The Gindikin-Karpelevich limit
==============================

As the highest weight grows, boxing disappears and the identity becomes a
statement about the infinite crystal. Three power series should agree:
the product of root factors, a sum over vector partitions, and a sum over
unboxed patterns.
"""

from g2tokuyama.gk import (
    audit_subcones,
    degree_counts,
    gk_lhs_series,
    gk_pattern_series,
    partition_sum_series,
    pattern_to_partition,
)

N = 10
lhs = gk_lhs_series(N)
print("product == partitions:", lhs == partition_sum_series(N))
print("product == patterns:  ", lhs == gk_pattern_series(N))

# patterns and vector partitions are in bijection, degree by degree
pats, parts = degree_counts(N)
print("patterns per degree:  ", pats)
print("partitions per degree:", parts)

# two patterns on rays where contributions and partition weights disagree
for pi in [(1, 1, 1, 0, 0, 0), (1, 1, 2, 1, 1, 0)]:
    print(pi, "->", pattern_to_partition(pi))

# where on the shared face do the two kinds of discrepancy live?
print(audit_subcones(16).render())
