"""Permutations of [n] in one-line notation and their descent statistics.

A permutation is a plain tuple ``(w_1, ..., w_n)`` holding 1..n exactly once.
Descent sets are frozensets of positions in 1..n-1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Permutation = tuple[int, ...]
DescentSet = frozenset[int]


def check_permutation(word: Sequence[int]) -> Permutation:
    word = tuple(word)
    if not word or sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of [n]: {word!r}")
    return word


def check_descent_set(n: int, D: Iterable[int]) -> DescentSet:
    D = frozenset(D)
    bad = [i for i in D if not 1 <= i <= n - 1]
    if bad:
        raise ValueError(f"descent positions {sorted(bad)} outside 1..{n - 1}")
    return D


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation n, n-1, ..., 1."""
    return tuple(range(n, 0, -1))


def descent_set(p: Sequence[int]) -> DescentSet:
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def major_index(p: Sequence[int]) -> int:
    return sum(descent_set(p))


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def statistics(p: Sequence[int]) -> tuple[int, int]:
    """Return ``(maj, inv)``."""
    return major_index(p), inversions(p)


def lambda_of_descents(n: int, D: Iterable[int]) -> tuple[int, ...]:
    """Partition whose i-th part counts the descents that are >= i."""
    D = sorted(D)
    parts = []
    for i in range(1, n + 1):
        c = sum(1 for d in D if d >= i)
        if c == 0:
            break
        parts.append(c)
    return tuple(parts)


def descents_of_lambda(lam: Sequence[int]) -> DescentSet:
    """Inverse of :func:`lambda_of_descents`: i is a descent iff lam_i > lam_{i+1}."""
    lam = list(lam) + [0]
    return frozenset(i + 1 for i in range(len(lam) - 1) if lam[i] > lam[i + 1])


def lambda_of_permutation(p: Sequence[int]) -> tuple[int, ...]:
    return lambda_of_descents(len(p), descent_set(p))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """The product ``p q``: apply ``p`` first, then ``q``.

    With this convention a k-tuple lies in W^(k) iff ``compose`` folded
    left to right over it gives the identity.
    """
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} != {len(q)}")
    return tuple(q[x - 1] for x in p)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p, start=1):
        inv[x - 1] = i
    return tuple(inv)


def product(perms: Sequence[Sequence[int]], n: int | None = None) -> Permutation:
    if not perms:
        if n is None:
            raise ValueError("empty product needs n")
        return identity(n)
    result = tuple(perms[0])
    for q in perms[1:]:
        result = compose(result, q)
    return result


def reverse(p: Sequence[int]) -> Permutation:
    """``p`` followed on the right by the longest element: the reversed word."""
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Permutation:
    """The longest element followed by ``p``: values x -> n+1-x."""
    n = len(p)
    return tuple(n + 1 - x for x in p)


def all_permutations(n: int) -> Iterator[Permutation]:
    return permutations(range(1, n + 1))


def run_lengths(n: int, D: Iterable[int]) -> list[int]:
    """Lengths of the maximal ascending runs forced by descent set ``D``."""
    cuts = [0] + sorted(D) + [n]
    return [b - a for a, b in zip(cuts, cuts[1:])]


def _by_runs(remaining: tuple[int, ...], runs: list[int], prev_last: int) -> Iterator[tuple[int, ...]]:
    if not runs:
        yield ()
        return
    size, rest = runs[0], runs[1:]
    for block in combinations(remaining, size):
        # block is sorted; its first entry must sit below the previous run's end
        if block[0] >= prev_last:
            break
        left = tuple(x for x in remaining if x not in block)
        for tail in _by_runs(left, rest, block[-1]):
            yield block + tail


def iter_descent_class(n: int, D: Iterable[int]) -> Iterator[Permutation]:
    """Permutations of [n] whose descent set is exactly ``D``, generated run by run."""
    D = check_descent_set(n, D)
    yield from _by_runs(tuple(range(1, n + 1)), run_lengths(n, D), n + 1)


@lru_cache(maxsize=4096)
def _descent_class(n: int, D: DescentSet) -> tuple[Permutation, ...]:
    return tuple(iter_descent_class(n, D))


def permutations_with_descent_set(n: int, D: Iterable[int]) -> list[Permutation]:
    return list(_descent_class(n, check_descent_set(n, D)))


def descent_class_filter(n: int, D: Iterable[int]) -> list[Permutation]:
    """Slow reference: scan all n! words."""
    D = frozenset(D)
    return [p for p in all_permutations(n) if descent_set(p) == D]


def all_descent_sets(n: int) -> list[DescentSet]:
    """Every subset of [n-1], ordered by size then lexicographically."""
    ground = range(1, n)
    return [frozenset(c) for r in range(n) for c in combinations(ground, r)]


def mahonian_polynomial(n: int, stat: str = "maj") -> list[int]:
    """Coefficient list of sum over S_n of q^stat."""
    if n < 1:
        raise ValueError("n must be positive")
    fn = {"maj": major_index, "inv": inversions}[stat]
    coeffs = [0] * (n * (n - 1) // 2 + 1)
    for p in all_permutations(n):
        coeffs[fn(p)] += 1
    return coeffs


def q_factorial(n: int) -> list[int]:
    """Coefficients of prod_{i=1}^{n-1} (1 + q + ... + q^i)."""
    coeffs = [1]
    for i in range(1, n):
        nxt = [0] * (len(coeffs) + i)
        for a, c in enumerate(coeffs):
            for b in range(i + 1):
                nxt[a + b] += c
        coeffs = nxt
    return coeffs


def format_permutation(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if "," in text:
        return check_permutation(int(x) for x in text.split(","))
    return check_permutation(int(c) for c in text)


def format_descent_set(D: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(D)) + "}"


def parse_descent_set(text: str) -> DescentSet:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"descent set must be braced, got {text!r}")
    body = text[1:-1].strip()
    return frozenset(int(x) for x in body.split(",")) if body else frozenset()


# --- tuples with product one ------------------------------------------------

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more tuples than the configured budget."""


def _solve_order(n: int, classes: list[Sequence[Permutation] | None]) -> int:
    sizes = [len(c) if c is not None else factorial(n) for c in classes]
    return max(range(len(sizes)), key=lambda i: (sizes[i], -i))


def iter_product_one(
    n: int,
    profile: Sequence[Iterable[int] | None],
    budget: int | None = DEFAULT_BUDGET,
) -> Iterator[tuple[Permutation, ...]]:
    """Tuples (s_1, ..., s_k) with s_1 s_2 ... s_k = identity and Des(s_i) = profile[i].

    ``None`` in the profile leaves that coordinate unconstrained. One
    coordinate is never enumerated: it is solved as the inverse of the
    cyclic product of the others, using the largest class to save work.
    """
    k = len(profile)
    if k == 0:
        raise ValueError("need at least one coordinate")
    classes: list[Sequence[Permutation] | None] = [
        None if D is None else _descent_class(n, check_descent_set(n, D)) for D in profile
    ]
    j = _solve_order(n, classes)
    order = [(j + s) % k for s in range(1, k)]
    pools = [classes[i] if classes[i] is not None else tuple(all_permutations(n)) for i in order]
    steps = prod(len(p) for p in pools)
    if budget is not None and steps > budget:
        raise BudgetExceeded(f"{steps} tuples to enumerate exceeds budget {budget}")
    target = None if profile[j] is None else frozenset(profile[j])
    chosen: list[Permutation] = [()] * k
    ident = identity(n)

    def walk(depth: int, acc: Permutation) -> Iterator[tuple[Permutation, ...]]:
        if depth == len(order):
            last = inverse(acc)
            if target is None or descent_set(last) == target:
                chosen[j] = last
                yield tuple(chosen)
            return
        for p in pools[depth]:
            chosen[order[depth]] = p
            yield from walk(depth + 1, compose(acc, p))

    yield from walk(0, ident)


def count_product_one(
    n: int,
    profile: Sequence[Iterable[int] | None],
    budget: int | None = DEFAULT_BUDGET,
) -> int:
    profile = tuple(None if D is None else check_descent_set(n, D) for D in profile)
    return _count_product_one(n, profile, budget)


@lru_cache(maxsize=1 << 16)
def _count_product_one(n: int, profile: tuple, budget: int | None) -> int:
    return sum(1 for _ in iter_product_one(n, profile, budget))
