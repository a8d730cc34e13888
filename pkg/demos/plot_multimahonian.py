"""
Refined multimahonian distributions
===================================

Each product-one k-tuple of permutations contributes the monomial that
records its descent sets as partitions.  The same polynomial comes out of
refined fake degrees weighted by Kronecker coefficients.
"""

from multimahonian.distributions import (
    bimahonian,
    multimahonian_via_kronecker,
    refined_fake_degree,
    refined_multimahonian,
)
from multimahonian.polyring import format_polynomial

# fake degrees: one monomial per standard tableau
print("f^(2,1) =", format_polynomial(refined_fake_degree((2, 1))))
print("f^(3,1) =", format_polynomial(refined_fake_degree((3, 1))))

W = refined_multimahonian(3, 2)
print("W_3^(2) =", format_polynomial(W))

# both sides, term by term
for n, k in [(3, 3), (4, 3), (5, 2)]:
    lhs = refined_multimahonian(n, k)
    rhs = multimahonian_via_kronecker(n, k)
    print(f"n={n} k={k}: {len(lhs)} monomials, identity holds: {lhs == rhs}")

# q_ij -> q_i recovers the bimahonian distribution of (maj, imaj)
coarse = refined_multimahonian(4, 2).specialize_coarse()
print("coarse n=4 k=2 matches bimahonian:", coarse == bimahonian(4))
