"""Kronecker coefficients of the symmetric group, computed two independent ways.

``kronecker_recursive`` never touches characters: it peels off the
descent-class count of tuples with product one and subtracts coefficients
of strictly dominance-larger shape tuples sharing the same descent sets.
``kronecker_character`` is the class-weighted character sum, with
characters from the Murnaghan-Nakayama rule, and serves as the oracle.
"""

from __future__ import annotations

import json
import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .permstat import DEFAULT_BUDGET, DescentSet, count_product_one
from .tableaux import (
    Partition,
    canonical_descents,
    check_partition,
    dominance_leq,
    partitions,
    shape,
    tableaux_with_descent_set,
)

Key = tuple[Partition, ...]
PROVENANCES = ("recursion", "character")


class CharacterTableError(ArithmeticError):
    """A character sum failed to produce a nonnegative integer multiplicity."""


class RecursionCycleError(RuntimeError):
    pass


class CacheValidationError(ValueError):
    pass


def check_key(shapes: Iterable[Sequence[int]]) -> Key:
    key = tuple(check_partition(s) for s in shapes)
    if not key:
        raise ValueError("need at least one shape")
    sizes = {sum(s) for s in key}
    if len(sizes) != 1:
        raise ValueError(f"shapes have different sizes: {sorted(sizes)}")
    return key


def canonical_key(shapes: Iterable[Sequence[int]]) -> Key:
    """Sort the shapes; valid because d is symmetric in its arguments."""
    return tuple(sorted(check_key(shapes), reverse=True))


# --- characters ---------------------------------------------------------------


def _beta(lam: Partition) -> tuple[int, ...]:
    L = len(lam)
    return tuple(lam[i] + L - 1 - i for i in range(L))


def _from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    return tuple(p for p in (beta[i] - (L - 1 - i) for i in range(L)) if p > 0)


def remove_rim_hooks(lam: Partition, r: int) -> list[tuple[Partition, int]]:
    """All (lam minus a rim hook of length r, leg length) pairs."""
    beta = set(_beta(lam))
    out = []
    for b in sorted(beta, reverse=True):
        if b - r >= 0 and b - r not in beta:
            height = sum(1 for x in beta if b - r < x < b)
            out.append((_from_beta((beta - {b}) | {b - r}), height))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    return sum((-1) ** h * _mn(mu, rest) for mu, h in remove_rim_hooks(lam, r))


def character_value(irrep: Sequence[int], cycle_type: Sequence[int]) -> int:
    """Irreducible character of ``irrep`` at a permutation of ``cycle_type``."""
    lam, rho = check_partition(irrep), check_partition(cycle_type)
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(lam, rho)


def centralizer_order(rho: Sequence[int]) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def class_size(rho: Sequence[int]) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: Mapping[Partition, Mapping[Partition, int]]
    class_sizes: Mapping[Partition, int]

    def __call__(self, irrep: Partition, cycle_type: Partition) -> int:
        return self.rows[irrep][cycle_type]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    classes = partitions(n)
    rows = {lam: {rho: _mn(lam, rho) for rho in classes} for lam in classes}
    return CharacterTable(n, rows, {rho: class_size(rho) for rho in classes})


def kronecker_character(shapes: Iterable[Sequence[int]]) -> int:
    """(1/n!) * sum over classes of |class| times the product of characters."""
    key = check_key(shapes)
    n = sum(key[0])
    table = character_table(n)
    total = sum(
        size * prod(table(mu, rho) for mu in key) for rho, size in table.class_sizes.items()
    )
    d, r = divmod(total, factorial(n))
    if r or d < 0:
        raise CharacterTableError(f"character sum {total}/{n}! for {key} is not a multiplicity")
    return d


# --- the descent-set recursion --------------------------------------------------


@lru_cache(maxsize=4096)
def _shapes_with_descents(n: int, D: DescentSet) -> tuple[tuple[Partition, int], ...]:
    counts = Counter(shape(t) for t in tableaux_with_descent_set(n, D))
    return tuple(sorted(counts.items(), reverse=True))


def strictly_dominates(upper: Key, lower: Key) -> bool:
    """Componentwise dominance with at least one strict component."""
    return upper != lower and all(dominance_leq(lo, up) for lo, up in zip(lower, upper))


@dataclass
class KroneckerTable:
    """Memo table of coefficients for a fixed n.

    With ``canonical=True`` keys are stored with the shapes sorted, so all
    argument orders share one entry. Inserts are atomic insert-if-absent.
    """

    n: int
    canonical: bool = True
    entries: dict[Key, tuple[int, str]] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def key(self, shapes: Iterable[Sequence[int]]) -> Key:
        key = canonical_key(shapes) if self.canonical else check_key(shapes)
        if sum(key[0]) != self.n:
            raise ValueError(f"shapes of size {sum(key[0])} in a table for n={self.n}")
        return key

    def get(self, shapes: Iterable[Sequence[int]]) -> int | None:
        hit = self.entries.get(self.key(shapes))
        return None if hit is None else hit[0]

    def insert(self, shapes: Iterable[Sequence[int]], value: int, provenance: str = "recursion") -> int:
        if provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        if value < 0:
            raise ValueError("Kronecker coefficients are nonnegative")
        key = self.key(shapes)
        with self._lock:
            return self.entries.setdefault(key, (value, provenance))[0]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, shapes) -> bool:
        return self.key(shapes) in self.entries

    # --- persistence --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"shapes": [list(s) for s in key], "value": str(v), "provenance": prov}
                for key, (v, prov) in sorted(self.entries.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    def save(self, path: str | os.PathLike) -> None:
        tmp = f"{os.fspath(path)}.tmp"
        with open(tmp, "w") as fh:
            fh.write(self.to_json())
        os.replace(tmp, path)

    @classmethod
    def from_dict(cls, data: Mapping, canonical: bool = True) -> KroneckerTable:
        try:
            n = int(data["n"])
            raw = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CacheValidationError(f"malformed cache header: {exc}") from exc
        if n < 1:
            raise CacheValidationError(f"bad n={n}")
        table = cls(n, canonical=canonical)
        previous = None
        for idx, entry in enumerate(raw):
            try:
                key = check_key(entry["shapes"])
                value = int(entry["value"])
                prov = entry.get("provenance", "recursion")
            except (KeyError, TypeError, ValueError) as exc:
                raise CacheValidationError(f"entry {idx}: malformed ({exc})") from exc
            if sum(key[0]) != n:
                raise CacheValidationError(f"entry {idx}: shapes are not partitions of {n}")
            if canonical and key != canonical_key(key):
                raise CacheValidationError(f"entry {idx}: shapes not in canonical order")
            if value < 0:
                raise CacheValidationError(f"entry {idx}: negative value {value}")
            if prov not in PROVENANCES:
                raise CacheValidationError(f"entry {idx}: unknown provenance {prov!r}")
            if previous is not None and key <= previous:
                raise CacheValidationError(f"entry {idx}: entries not sorted or duplicated")
            previous = key
            table.entries[key] = (value, prov)
        return table

    @classmethod
    def load(cls, path: str | os.PathLike, canonical: bool = True) -> KroneckerTable:
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CacheValidationError(f"not JSON: {exc}") from exc
        return cls.from_dict(data, canonical=canonical)


def kronecker_recursive(
    shapes: Iterable[Sequence[int]],
    table: KroneckerTable | None = None,
    budget: int | None = DEFAULT_BUDGET,
) -> int:
    """Kronecker coefficient from descent-class counts alone.

    d(mu) = #{tuples with product one and Des(s_i) = Des(T_mu_i)}
            - sum of d(shapes) over tableau tuples with the same descent
              sets whose shapes strictly dominate mu componentwise.
    """
    key = check_key(shapes)
    n = sum(key[0])
    if table is None:
        table = KroneckerTable(n)
    elif table.n != n:
        raise ValueError(f"table is for n={table.n}, shapes have size {n}")
    return _evaluate(table.key(key), table, set(), budget)


def _evaluate(key: Key, table: KroneckerTable, active: set, budget: int | None) -> int:
    hit = table.entries.get(key)
    if hit is not None:
        return hit[0]
    if key in active:
        raise RecursionCycleError(f"cycle through {key}")
    active.add(key)
    n = table.n
    profile = [canonical_descents(mu) for mu in key]
    value = count_product_one(n, profile, budget)
    options = [_shapes_with_descents(n, D) for D in profile]
    for mu, opts in zip(key, options):
        # the canonical tableau is the only one of its shape; the rest dominate it
        assert dict(opts).get(mu) == 1, (mu, opts)
        assert all(dominance_leq(mu, s) for s, _ in opts), (mu, opts)
    for combo in product(*options):
        upper = tuple(s for s, _ in combo)
        if not strictly_dominates(upper, key):
            continue
        mult = prod(c for _, c in combo)
        value -= mult * _evaluate(table.key(upper), table, active, budget)
    active.discard(key)
    if value < 0:
        raise ArithmeticError(f"negative coefficient {value} at {key}")
    return table.insert(key, value, "recursion")


def tensor_decompose(
    a: Sequence[int], b: Sequence[int], table: KroneckerTable | None = None
) -> dict[Partition, int]:
    """Irreducible multiplicities in the tensor product a (x) b; zeros omitted."""
    a, b = check_partition(a), check_partition(b)
    n = sum(a)
    if sum(b) != n:
        raise ValueError(f"size mismatch: |{a}| != |{b}|")
    if table is None:
        table = KroneckerTable(n)
    out = {}
    for rho in partitions(n):
        d = kronecker_recursive((a, b, rho), table)
        if d:
            out[rho] = d
    return out


def fill_table(n: int, k: int, table: KroneckerTable | None = None) -> KroneckerTable:
    """Evaluate every canonical key with k shapes of n."""
    from itertools import combinations_with_replacement

    table = table or KroneckerTable(n)
    for key in combinations_with_replacement(partitions(n), k):
        kronecker_recursive(key, table)
    return table
