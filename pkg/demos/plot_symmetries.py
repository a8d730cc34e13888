"""
Symmetries of descent-class counts
==================================

Counts of product-one tuples with prescribed descent sets do not depend
on the order of the descent sets, and survive swapping some of the
conditions for reflected descents, ascents or reflected ascents.
"""

from multimahonian.symmetry import StatKind, count_mixed, transform, verify_dcac, verify_sym

print("Codes of {3} in S_4:", sorted(transform(4, {3}, StatKind.CODES)))
print("Asc of {3} in S_4:", sorted(transform(4, {3}, StatKind.ASC)))

D = [{3}, {2}, {2, 3}]
for kinds in [(StatKind.DES,) * 3, (StatKind.DES, StatKind.CODES, StatKind.DES), (StatKind.CODES,) * 3]:
    print([k.value for k in kinds], count_mixed(4, D, kinds))

print(verify_sym(4, 3).text())
report = verify_dcac(4, 2)
print(report.text())
print("first profiles:", report.data[:3])
