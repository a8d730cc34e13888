"""Generating functions in the multipartition grading.

Everything here is a polynomial in the variables q[i][j] (block i, position
j) with exponent rows that are partitions of at most n parts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import factorial
from typing import Iterable, Sequence

from .kronecker import KroneckerTable, kronecker_character, kronecker_recursive
from .permstat import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    all_permutations,
    count_product_one,
    descent_set,
    inverse,
    iter_product_one,
    lambda_of_descents,
    lambda_of_permutation,
    major_index,
)
from .polyring import Polynomial, Window, as_window, format_polynomial, from_counts
from .tableaux import descent_data, enumerate_standard_tableaux, partitions


def refined_fake_degree(mu: Sequence[int], block: int = 0, k: int = 1) -> Polynomial:
    """Sum over standard tableaux T of shape mu of Q_block^lambda(T)."""
    n = sum(mu)
    counts: Counter = Counter()
    for t in enumerate_standard_tableaux(mu):
        rows: list[tuple[int, ...]] = [()] * k
        rows[block] = descent_data(t)[1]
        counts[tuple(rows)] += 1
    return from_counts(k, n, counts)


def _check_budget(n: int, k: int, budget: int | None) -> None:
    steps = factorial(n) ** max(k - 1, 0)
    if budget is not None and steps > budget:
        raise BudgetExceeded(f"(n!)^(k-1) = {steps} exceeds budget {budget}")


def refined_multimahonian(n: int, k: int, budget: int | None = DEFAULT_BUDGET) -> Polynomial:
    """Sum over k-tuples with product one of prod_i Q_i^lambda(s_i).

    The first k-1 coordinates are enumerated freely and the last one is
    solved for.
    """
    _check_budget(n, k, budget)
    lam = {p: lambda_of_permutation(p) for p in all_permutations(n)}
    counts: Counter = Counter()
    for tup in iter_product_one(n, [None] * k, budget=None):
        counts[tuple(lam[p] for p in tup)] += 1
    return from_counts(k, n, counts)


def count_tuples_with_descents(
    n: int, profile: Sequence[Iterable[int]], budget: int | None = DEFAULT_BUDGET
) -> int:
    """Number of tuples with product one and Des(s_i) = profile[i] for all i."""
    return count_product_one(n, [frozenset(D) for D in profile], budget)


def coefficient_at_descents(p: Polynomial, profile: Sequence[Iterable[int]]) -> int:
    """Coefficient of the monomial whose rows are lambda(D_i)."""
    return p.coefficient([lambda_of_descents(p.n, D) for D in profile])


def multimahonian_via_kronecker(
    n: int, k: int, oracle: str = "recursion", table: KroneckerTable | None = None
) -> Polynomial:
    """Sum over shape tuples of d(shapes) * prod_i f^{shape_i}(Q_i)."""
    fake = {
        (mu, i): refined_fake_degree(mu, i, k) for mu in partitions(n) for i in range(k)
    }
    if oracle == "recursion":
        table = table or KroneckerTable(n)
        coefficient = lambda key: kronecker_recursive(key, table)  # noqa: E731
    elif oracle == "character":
        coefficient = kronecker_character
    else:
        raise ValueError(f"unknown oracle {oracle!r}")
    total = Polynomial.zero(k, n)
    for key in product(partitions(n), repeat=k):
        d = coefficient(key)
        if not d:
            continue
        term = Polynomial.constant(k, n, d)
        for i, mu in enumerate(key):
            term = term * fake[mu, i]
        total = total + term
    return total


def bimahonian(n: int) -> Polynomial:
    """Sum over S_n of q1^maj(s) q2^maj(s^-1), as a two-block, one-variable polynomial."""
    counts: Counter = Counter()
    for p in all_permutations(n):
        counts[(major_index(p),), (major_index(inverse(p)),)] += 1
    return Polynomial(2, 1, {(a[0], b[0]): c for (a, b), c in counts.items()})


def coarse_multimahonian(n: int, k: int) -> Polynomial:
    """Sum over tuples with product one of prod_i q_i^maj(s_i), by direct enumeration."""
    counts: Counter = Counter()
    for tup in iter_product_one(n, [None] * k, budget=None):
        counts[tuple(major_index(p) for p in tup)] += 1
    return Polynomial(k, 1, dict(counts))


# --- windowed Hilbert series ----------------------------------------------------


def exponent_partition(vectors: Sequence[Sequence[int]], k: int) -> tuple[tuple[int, ...], ...]:
    """Sort each coordinate of a multiset of vectors in N^k decreasingly."""
    return tuple(
        tuple(x for x in sorted((v[i] for v in vectors), reverse=True) if x) for i in range(k)
    )


def diagonal_orbits(n: int, k: int, cap: int):
    """Multisets of n vectors in {0..cap}^k: one representative per diagonal orbit of monomials."""
    cube = list(product(range(cap + 1), repeat=k))
    return combinations_with_replacement(cube, n)


def hilb_diagonal_invariants_window(n: int, k: int, w: Window | int) -> Polynomial:
    cap = as_window(w).cap
    counts = Counter(exponent_partition(orbit, k) for orbit in diagonal_orbits(n, k, cap))
    return from_counts(k, n, counts)


def bounded_partitions(n_parts: int, cap: int) -> list[tuple[int, ...]]:
    """Partitions with at most n_parts parts, each part at most cap."""
    out = []
    for combo in combinations_with_replacement(range(cap, -1, -1), n_parts):
        out.append(tuple(x for x in combo if x))
    return out


def hilb_product_invariants_window(n: int, k: int, w: Window | int) -> Polynomial:
    cap = as_window(w).cap
    parts = bounded_partitions(n, cap)
    return from_counts(k, n, {rows: 1 for rows in product(parts, repeat=k)})


@dataclass
class VerificationReport:
    name: str
    ok: bool
    lines: list[str] = field(default_factory=list)
    data: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def text(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        return "\n".join([head] + ["  " + line for line in self.lines])

    def to_dict(self) -> dict:
        return {"name": self.name, "status": "PASS" if self.ok else "FAIL", "lines": self.lines, "data": self.data}


def _compare(name: str, lhs: Polynomial, rhs: Polynomial, note: str | None = None) -> VerificationReport:
    lines = [note] if note else []
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    bad = 0
    for exp in keys:
        a, b = lhs.coefficient(exp), rhs.coefficient(exp)
        if a != b:
            bad += 1
            mono = format_polynomial(Polynomial(lhs.k, lhs.n, {exp: 1}))
            lines.append(f"mismatch {mono}: lhs={a} rhs={b}")
    lines.append(f"{len(keys)} monomials compared, {bad} mismatches")
    return VerificationReport(name, bad == 0, lines)


def verify_refined_quotient_identity(
    n: int, k: int, w: Window | int, budget: int | None = DEFAULT_BUDGET
) -> VerificationReport:
    """Check Hilb(diagonal invariants) = W(Q) * Hilb(product invariants) on a window.

    Comparing only monomials with every exponent <= cap is exact: each
    monomial of a product is divisible by the monomials of its factors.
    """
    w = as_window(w)
    lhs = hilb_diagonal_invariants_window(n, k, w)
    rhs = refined_multimahonian(n, k, budget).mul_windowed(hilb_product_invariants_window(n, k, w), w)
    note = f"n={n} k={k} cap={w.cap}: series compared on monomials with all exponents <= {w.cap}"
    return _compare(f"hilbert-quotient n={n} k={k} cap={w.cap}", lhs, rhs, note)


def is_multipartite(vectors: Sequence[Sequence[int]]) -> bool:
    """f^(i)_j >= f^(i)_{j+1} whenever f^(h)_j == f^(h)_{j+1} for every h < i."""
    k = len(vectors)
    n = len(vectors[0]) if vectors else 0
    for j in range(n - 1):
        for i in range(k):
            if all(vectors[h][j] == vectors[h][j + 1] for h in range(i)):
                if vectors[i][j] < vectors[i][j + 1]:
                    return False
    return True


def multipartite_counts(n: int, k: int, cap: int) -> Counter:
    """k-partite partitions with entries <= cap, counted by multidegree."""
    counts: Counter = Counter()
    for flat in product(range(cap + 1), repeat=n * k):
        vectors = [flat[i * n:(i + 1) * n] for i in range(k)]
        if is_multipartite(vectors):
            counts[tuple(tuple(x for x in sorted(v, reverse=True) if x) for v in vectors)] += 1
    return counts


def strict_at_descents_counts(n: int, k: int, cap: int, budget: int | None = DEFAULT_BUDGET) -> Counter:
    """Tuples (s, mu) with product one, parts <= cap, strict drops at descents, by multidegree."""
    _check_budget(n, k, budget)
    parts = bounded_partitions(n, cap)
    padded = {mu: mu + (0,) * (n - len(mu)) for mu in parts}

    def compatible(mu, D):
        m = padded[mu]
        return all(m[j - 1] > m[j] for j in D)

    by_descents = {}
    counts: Counter = Counter()
    for tup in iter_product_one(n, [None] * k, budget=None):
        choices = []
        for p in tup:
            D = descent_set(p)
            if D not in by_descents:
                by_descents[D] = [mu for mu in parts if compatible(mu, D)]
            choices.append(by_descents[D])
        for mus in product(*choices):
            counts[mus] += 1
    return counts


def verify_multipartite_count(n: int, k: int, cap: int, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    left = multipartite_counts(n, k, cap)
    right = strict_at_descents_counts(n, k, cap, budget)
    lines = []
    for deg in sorted(set(left) | set(right)):
        if left[deg] != right[deg]:
            lines.append(f"mismatch at {deg}: multipartite={left[deg]} tuples={right[deg]}")
    ok = not lines
    lines.append(
        f"{len(set(left) | set(right))} multidegrees, totals {sum(left.values())} vs {sum(right.values())}"
    )
    return VerificationReport(f"multipartite-count n={n} k={k} cap={cap}", ok, lines)
