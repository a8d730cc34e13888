"""
Standard tableaux, descents and Robinson-Schensted
==================================================

"""

from multimahonian.permstat import descent_set, format_permutation, inverse
from multimahonian.tableaux import (
    canonical_tableau,
    descent_data,
    dimension,
    evacuation,
    format_tableau,
    hook_length_dimension,
    rs_correspondence,
    tableau_descents,
    tableaux_with_descent_set,
)

T = ((1, 3, 5), (2, 6), (4,), (7,))
D, lam = descent_data(T)
print(format_tableau(T), "descents", sorted(D), "lambda", lam)

# the canonical tableau fills rows left to right, top to bottom
for mu in [(3, 1), (2, 2), (2, 1, 1)]:
    Tmu = canonical_tableau(mu)
    print(mu, format_tableau(Tmu), sorted(tableau_descents(Tmu)))

# every tableau with descent set {2}, n = 4
for t in tableaux_with_descent_set(4, {2}):
    print("  ", format_tableau(t))

# corner removal and the hook length formula agree
print("dim (4,3,1):", dimension((4, 3, 1)), hook_length_dimension((4, 3, 1)))

# RS sends descents of sigma to Q and descents of sigma^-1 to P
sigma = (3, 5, 2, 4, 1)
P, Q = rs_correspondence(sigma)
print(format_permutation(sigma), "P =", format_tableau(P), "Q =", format_tableau(Q))
print("Des(Q) == Des(sigma):", tableau_descents(Q) == descent_set(sigma))
print("Des(P) == Des(sigma^-1):", tableau_descents(P) == descent_set(inverse(sigma)))

# evacuation reflects descents
E = evacuation(Q)
print("evac Q =", format_tableau(E), sorted(tableau_descents(E)))
