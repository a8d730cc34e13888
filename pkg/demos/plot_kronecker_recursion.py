"""
Kronecker coefficients from descent-class counts
================================================

A coefficient is computed by counting product-one tuples of permutations
with prescribed descent sets and subtracting the contribution of shapes
higher in dominance order.  The character table gives an independent check.
"""

from itertools import combinations_with_replacement

from multimahonian.distributions import count_tuples_with_descents
from multimahonian.kronecker import KroneckerTable, kronecker_character, kronecker_recursive
from multimahonian.tableaux import canonical_descents, format_partition, partitions

# the smallest interesting example lives in S_4
key = [(3, 1), (2, 2), (2, 1, 1)]
profile = [canonical_descents(mu) for mu in key]
print("canonical descent sets:", [sorted(D) for D in profile])
print("tuples with those descent sets:", count_tuples_with_descents(4, profile))

table = KroneckerTable(4)
print("d =", kronecker_recursive(key, table), "(character table says", kronecker_character(key), ")")

# everything the recursion needed along the way is now memoized
for shapes, (value, prov) in sorted(table.entries.items()):
    print(" ", " ".join(format_partition(s) for s in shapes), "->", value, prov)

# a full table of nonzero triples for n = 5
table = KroneckerTable(5)
nonzero = 0
for triple in combinations_with_replacement(partitions(5), 3):
    if kronecker_recursive(triple, table):
        nonzero += 1
print("n=5: nonzero unordered triples:", nonzero, "of", len(table))
