"""Descent-set transforms and exhaustive checks of enumeration symmetries.

Every count here reduces to ``count_product_one`` on a descent profile:
Codes, Asc and Coasc each determine Des, so a mixed condition on the
statistics of a tuple is a plain Des condition on a transformed profile.
"""

from __future__ import annotations

import enum
import random
from itertools import combinations_with_replacement, permutations, product
from typing import Iterable, Sequence

from .distributions import VerificationReport
from .permstat import (
    DEFAULT_BUDGET,
    DescentSet,
    all_descent_sets,
    check_descent_set,
    count_product_one,
    descent_set,
    format_descent_set,
)


class StatKind(enum.Enum):
    DES = "Des"
    CODES = "Codes"
    ASC = "Asc"
    COASC = "Coasc"


def transform(n: int, D: Iterable[int], kind: StatKind) -> DescentSet:
    """Given Des(X) = D, return kind(X)."""
    D = check_descent_set(n, D)
    if kind is StatKind.DES:
        return D
    if kind is StatKind.CODES:
        return frozenset(n - i for i in D)
    asc = frozenset(range(1, n)) - D
    if kind is StatKind.ASC:
        return asc
    return frozenset(n - i for i in asc)


def stat(p: Sequence[int], kind: StatKind) -> DescentSet:
    """kind(p) for a permutation or any word of distinct values."""
    return transform(len(p), descent_set(p), kind)


def mixed_profile(
    n: int, D: Sequence[Iterable[int]], kinds: Sequence[StatKind], perm: Sequence[int]
) -> tuple[DescentSet, ...]:
    """Des profile E with E[perm(i)] = the set X whose kind-transform is D[i].

    Each transform is an involution on subsets of [n-1], so it is its own inverse.
    """
    k = len(D)
    if len(kinds) != k or sorted(perm) != list(range(1, k + 1)):
        raise ValueError("kinds and perm must match the number of descent sets")
    E: list[DescentSet | None] = [None] * k
    for i in range(k):
        E[perm[i] - 1] = transform(n, D[i], kinds[i])
    return tuple(E)


def count_mixed(
    n: int,
    D: Sequence[Iterable[int]],
    kinds: Sequence[StatKind],
    perm: Sequence[int] | None = None,
    budget: int | None = DEFAULT_BUDGET,
) -> int:
    """#{(s_1..s_k) with product one : D[i] = kinds[i](s_perm(i))}."""
    perm = tuple(range(1, len(D) + 1)) if perm is None else tuple(perm)
    return count_product_one(n, mixed_profile(n, D, kinds, perm), budget)


def dcac_kinds(k: int, i1: int, i2: int, i3: int) -> tuple[StatKind, ...]:
    if not 0 <= i1 <= i2 <= i3 <= k:
        raise ValueError(f"need 0 <= i1 <= i2 <= i3 <= k, got {(i1, i2, i3, k)}")
    kinds = []
    for i in range(1, k + 1):
        if i <= i1:
            kinds.append(StatKind.DES)
        elif i <= i2:
            kinds.append(StatKind.CODES)
        elif i <= i3:
            kinds.append(StatKind.ASC)
        else:
            kinds.append(StatKind.COASC)
    return tuple(kinds)


def profiles(n: int, k: int, sample: int | None = None, seed: int = 0) -> list[tuple[DescentSet, ...]]:
    """All descent profiles, or a seeded sample of them."""
    subsets = all_descent_sets(n)
    total = len(subsets) ** k
    if sample is None or sample >= total:
        return list(product(subsets, repeat=k))
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(total), sample))
    out = []
    for idx in picks:
        prof = []
        for _ in range(k):
            idx, r = divmod(idx, len(subsets))
            prof.append(subsets[r])
        out.append(tuple(prof))
    return out


def _profile_text(D: Sequence[Iterable[int]]) -> str:
    return ";".join(format_descent_set(d) for d in D)


def verify_sym(
    n: int, k: int, sample: int | None = None, seed: int = 0, budget: int | None = DEFAULT_BUDGET
) -> VerificationReport:
    """Counts with Des(s_i) = D_i are unchanged by permuting the D_i."""
    lines = []
    checked = 0
    for D in profiles(n, k, sample, seed):
        base = count_product_one(n, D, budget)
        for pi in permutations(range(k)):
            other = count_product_one(n, tuple(D[p] for p in pi), budget)
            checked += 1
            if other != base:
                lines.append(f"mismatch {_profile_text(D)} pi={pi}: {base} vs {other}")
    ok = not lines
    lines.append(f"{checked} (profile, permutation) pairs checked")
    return VerificationReport(f"sym n={n} k={k}", ok, lines)


def verify_dcac(
    n: int, k: int, sample: int | None = None, seed: int = 0, budget: int | None = DEFAULT_BUDGET
) -> VerificationReport:
    """C(i1, i2, i3; pi) depends only on the parity of i2.

    Also checks the stronger statement that flipping any set of Des
    conditions to Codes leaves the count unchanged.
    """
    lines: list[str] = []
    summary = []
    triples = list(combinations_with_replacement(range(k + 1), 3))
    perms = list(permutations(range(k)))
    flips = list(product((StatKind.DES, StatKind.CODES), repeat=k))
    kinds_by_triple = [(t[1] % 2, dcac_kinds(k, *t)) for t in triples]
    table = {(S, kind): transform(n, S, kind) for S in all_descent_sets(n) for kind in StatKind}
    memo: dict[tuple, int] = {}

    def count(E: tuple) -> int:
        if E not in memo:
            memo[E] = count_product_one(n, E, budget)
        return memo[E]

    for D in profiles(n, k, sample, seed):
        by_parity: dict[int, set[int]] = {0: set(), 1: set()}
        for parity, kinds in kinds_by_triple:
            moved = [table[D[i], kinds[i]] for i in range(k)]
            for pi in perms:
                # coordinate pi[i] carries the i-th condition
                E = [None] * k
                for i in range(k):
                    E[pi[i]] = moved[i]
                by_parity[parity].add(count(tuple(E)))
        plain = count(tuple(D))
        flip_counts = {count(tuple(table[D[i], kinds[i]] for i in range(k))) for kinds in flips}
        status = all(len(v) <= 1 for v in by_parity.values()) and flip_counts == {plain}
        for parity, values in by_parity.items():
            if len(values) > 1:
                lines.append(f"{_profile_text(D)}: parity {parity} gives several counts {sorted(values)}")
        if flip_counts != {plain}:
            lines.append(f"{_profile_text(D)}: Codes flips give {sorted(flip_counts)}, Des gives {plain}")
        summary.append(
            {
                "profile": [sorted(d) for d in D],
                "even": sorted(by_parity[0]),
                "odd": sorted(by_parity[1]),
                "status": "PASS" if status else "FAIL",
            }
        )
    ok = not lines
    lines.append(f"{len(summary)} profiles x {len(triples)} index triples x {len(perms)} permutations")
    return VerificationReport(f"dcac n={n} k={k}", ok, lines, summary)
