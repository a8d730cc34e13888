"""
Diagonal invariants in a bounded window
=======================================

The Hilbert series of diagonal invariants factors as the refined
multimahonian polynomial times the series of product invariants.  Both
series are infinite, so the comparison is made on monomials whose
exponents all stay below a cap.
"""

from multimahonian.distributions import (
    hilb_diagonal_invariants_window,
    hilb_product_invariants_window,
    verify_multipartite_count,
    verify_refined_quotient_identity,
)
from multimahonian.polyring import format_polynomial

print("diag n=2 k=1 cap=2:", format_polynomial(hilb_diagonal_invariants_window(2, 1, 2)))
print("prod n=2 k=1 cap=2:", format_polynomial(hilb_product_invariants_window(2, 1, 2)))

for n, k, cap in [(2, 2, 2), (3, 2, 3), (3, 3, 2)]:
    print(verify_refined_quotient_identity(n, k, cap).text())

# counting k-partite partitions by multidegree
print(verify_multipartite_count(3, 2, 2).text())
