"""Partitions, standard Young tableaux and the classical tableau algorithms.

Partitions are tuples of positive integers in weakly decreasing order; the
empty tuple is the empty partition. A standard tableau is a tuple of rows,
each row a tuple of entries, in English notation (first row on top).
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .permstat import DescentSet, check_descent_set, lambda_of_descents

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def check_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is below or equal to ``b`` in dominance order."""
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |{tuple(a)}| != |{tuple(b)}|")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def conjugate(a: Sequence[int]) -> Partition:
    if not a:
        return ()
    return tuple(sum(1 for part in a if part > j) for j in range(a[0]))


# --- tableaux ---------------------------------------------------------------


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def is_standard(t: Sequence[Sequence[int]]) -> bool:
    lengths = [len(row) for row in t]
    if any(length == 0 for length in lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for r, row in enumerate(t):
        for c, x in enumerate(row):
            if c > 0 and row[c - 1] >= x:
                return False
            if r > 0 and t[r - 1][c] >= x:
                return False
    return True


def check_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    t = tuple(tuple(row) for row in rows)
    if not is_standard(t):
        raise ValueError(f"not a standard tableau: {t!r}")
    return t


def _addable_rows(rows: list[list[int]], mu: Sequence[int] | None) -> Iterator[int]:
    for r in range(len(rows) + 1):
        length = len(rows[r]) if r < len(rows) else 0
        if mu is not None and (r >= len(mu) or length >= mu[r]):
            continue
        if r > 0 and len(rows[r - 1]) <= length:
            continue
        yield r


def _freeze(rows: list[list[int]]) -> Tableau:
    return tuple(tuple(row) for row in rows)


def enumerate_standard_tableaux(mu: Sequence[int]) -> list[Tableau]:
    """All standard tableaux of shape ``mu``.

    Entries 1..n are placed one at a time into an addable cell of the
    partial shape, rows tried top to bottom, so the order is deterministic.
    """
    mu = check_partition(mu)
    n = sum(mu)
    out: list[Tableau] = []
    rows: list[list[int]] = []

    def place(i: int) -> None:
        if i > n:
            out.append(_freeze(rows))
            return
        for r in list(_addable_rows(rows, mu)):
            if r == len(rows):
                rows.append([])
            rows[r].append(i)
            place(i + 1)
            rows[r].pop()
            if not rows[r]:
                rows.pop()

    place(1)
    return out


def all_standard_tableaux(n: int) -> Iterator[Tableau]:
    for mu in partitions(n):
        yield from enumerate_standard_tableaux(mu)


def row_index(t: Tableau) -> dict[int, int]:
    return {x: r for r, row in enumerate(t) for x in row}


def tableau_descents(t: Tableau) -> DescentSet:
    """Entries i sitting in a row strictly above the row of i+1."""
    where = row_index(t)
    return frozenset(i for i in range(1, len(where)) if where[i] < where[i + 1])


def descent_data(t: Tableau) -> tuple[DescentSet, Partition]:
    D = tableau_descents(t)
    return D, lambda_of_descents(size(t), D)


def canonical_tableau(mu: Sequence[int]) -> Tableau:
    """Row-by-row filling of ``mu``; its descents are the partial row sums."""
    mu = check_partition(mu)
    rows, start = [], 1
    for part in mu:
        rows.append(tuple(range(start, start + part)))
        start += part
    return tuple(rows)


def canonical_descents(mu: Sequence[int]) -> DescentSet:
    sums, acc = [], 0
    for part in mu[:-1]:
        acc += part
        sums.append(acc)
    return frozenset(sums)


def tableaux_with_descent_set(n: int, D: Iterable[int]) -> list[Tableau]:
    """Standard tableaux with n boxes and descent set exactly ``D``.

    Generated directly: i+1 goes strictly below the row of i when i is a
    descent and weakly above it otherwise.
    """
    D = check_descent_set(n, D)
    out: list[Tableau] = []
    rows: list[list[int]] = []

    def place(i: int, prev_row: int) -> None:
        if i > n:
            out.append(_freeze(rows))
            return
        for r in list(_addable_rows(rows, None)):
            if i > 1 and ((i - 1 in D) != (r > prev_row)):
                continue
            if r == len(rows):
                rows.append([])
            rows[r].append(i)
            place(i + 1, r)
            rows[r].pop()
            if not rows[r]:
                rows.pop()

    place(1, 0)
    return out


@lru_cache(maxsize=None)
def dimension(mu: Partition) -> int:
    """Number of standard tableaux of shape ``mu``, counted by corner removal."""
    mu = check_partition(mu)
    if sum(mu) <= 1:
        return 1
    total = 0
    for r, part in enumerate(mu):
        if r + 1 == len(mu) or mu[r + 1] < part:
            smaller = list(mu)
            smaller[r] -= 1
            total += dimension(tuple(p for p in smaller if p))
    return total


def hook_length_dimension(mu: Sequence[int]) -> int:
    mu = check_partition(mu)
    mu_t = conjugate(mu)
    hooks = prod(mu[r] - c + mu_t[c] - r - 1 for r in range(len(mu)) for c in range(mu[r]))
    return factorial(sum(mu)) // hooks


# --- Robinson-Schensted -------------------------------------------------------


def rs_insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x`` in place; return the index of the row that grew."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r
        row = rows[r]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return r
        row[j], x = x, row[j]
        r += 1


def rs_correspondence(p: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion Robinson-Schensted: returns (insertion P, recording Q)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        r = rs_insert(P, x)
        if r == len(Q):
            Q.append([])
        Q[r].append(step)
    return _freeze(P), _freeze(Q)


def inverse_pair_tableaux(p: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Tableau pair attached to (p, p^-1): (Q(p), P(p)).

    The first tableau carries Des(p) and the second Des(p^-1).
    """
    P, Q = rs_correspondence(p)
    return Q, P


def rs_inverse(P: Tableau, Q: Tableau) -> tuple[int, ...]:
    """Recover the permutation from a same-shape pair by reverse bumping."""
    if shape(P) != shape(Q):
        raise ValueError("P and Q must have the same shape")
    P_rows = [list(row) for row in P]
    where = row_index(Q)
    n = size(P)
    word = [0] * n
    for step in range(n, 0, -1):
        r = where[step]
        x = P_rows[r].pop()
        if not P_rows[r]:
            P_rows.pop()
        for above in range(r - 1, -1, -1):
            row = P_rows[above]
            j = bisect_right(row, x) - 1
            row[j], x = x, row[j]
        word[step - 1] = x
    return tuple(word)


def transpose_tableau(t: Tableau) -> Tableau:
    if not t:
        return ()
    return tuple(tuple(row[c] for row in t if len(row) > c) for c in range(len(t[0])))


# --- evacuation ---------------------------------------------------------------


def _slide_out(rows: list[list[int | None]]) -> tuple[int, int]:
    """Jeu de taquin a hole at (0, 0) to an outer corner; delete and return that cell."""
    r = c = 0
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and below is None:
            rows[r].pop()
            if not rows[r]:
                rows.pop()
            return r, c
        if below is None or (right is not None and right < below):
            rows[r][c] = right
            c += 1
        else:
            rows[r][c] = below
            r += 1


def evacuation(t: Tableau) -> Tableau:
    """Schutzenberger evacuation by repeated deletion of the minimum and sliding.

    The cell vacated at step s (s = 1, 2, ...) receives the label n+1-s.
    """
    n = size(t)
    work: list[list[int | None]] = [list(row) for row in t]
    out = [[0] * len(row) for row in t]
    for s in range(1, n + 1):
        r, c = _slide_out(work)
        out[r][c] = n + 1 - s
    return _freeze(out)


def promotion(t: Tableau) -> Tableau:
    """Schutzenberger promotion: delete 1, slide, decrement, put n in the vacated cell."""
    n = size(t)
    work: list[list[int | None]] = [list(row) for row in t]
    r, c = _slide_out(work)
    rows = [[x - 1 for x in row] for row in work]
    while len(rows) <= r:
        rows.append([])
    rows[r].insert(c, n)
    return _freeze(rows)


def shape_counter(tabs: Iterable[Tableau]) -> Counter:
    return Counter(shape(t) for t in tabs)


def format_tableau(t: Tableau) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in t) + "]"


def parse_tableau(text: str) -> Tableau:
    import json

    return check_tableau(json.loads(text))


def format_partition(mu: Sequence[int]) -> str:
    return ",".join(str(p) for p in mu)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(x) for x in text.split(","))
