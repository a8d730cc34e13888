"""Sparse polynomials with exact integer coefficients in variables q[i][j].

A polynomial lives in a fixed (k, n) context: k blocks Q_1..Q_k of n
variables each. A monomial is stored as its flattened row-major exponent
vector of length k*n.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Window:
    """Exponent bound applied to every variable when truncating formal series."""

    cap: int

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError("window cap must be nonnegative")

    def admits(self, exp: Exponent) -> bool:
        return all(e <= self.cap for e in exp)


def as_window(w: Window | int) -> Window:
    return w if isinstance(w, Window) else Window(int(w))


class Polynomial:
    """Immutable sparse polynomial over the integers.

    >>> x = Polynomial.variable(1, 1, 0, 0)
    >>> (1 + x) * (1 + x) == 1 + 2 * x + x * x
    True
    """

    __slots__ = ("k", "n", "_terms")

    def __init__(self, k: int, n: int, terms: Mapping[Exponent, int] | None = None):
        if k < 0 or n < 0:
            raise ValueError("k and n must be nonnegative")
        self.k = k
        self.n = n
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k * n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp!r} for k={k}, n={n}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean

    # --- construction -------------------------------------------------------

    @classmethod
    def zero(cls, k: int, n: int) -> Polynomial:
        return cls(k, n)

    @classmethod
    def one(cls, k: int, n: int) -> Polynomial:
        return cls(k, n, {(0,) * (k * n): 1})

    @classmethod
    def constant(cls, k: int, n: int, c: int) -> Polynomial:
        return cls(k, n, {(0,) * (k * n): c})

    @classmethod
    def variable(cls, k: int, n: int, i: int, j: int) -> Polynomial:
        """The variable q[i][j] (0-based block i, position j)."""
        exp = [0] * (k * n)
        exp[i * n + j] = 1
        return cls(k, n, {tuple(exp): 1})

    @classmethod
    def monomial(cls, k: int, n: int, rows: Sequence[Sequence[int]], coef: int = 1) -> Polynomial:
        return cls(k, n, {flatten_exponent(k, n, rows): coef})

    @classmethod
    def _raw(cls, k: int, n: int, terms: dict[Exponent, int]) -> Polynomial:
        p = object.__new__(cls)
        p.k, p.n, p._terms = k, n, terms
        return p

    # --- access -------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in deterministic (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exp: Sequence[int] | Sequence[Sequence[int]]) -> int:
        exp = tuple(exp)
        if exp and isinstance(exp[0], (tuple, list)):
            exp = flatten_exponent(self.k, self.n, exp)
        return self._terms.get(exp, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # --- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if (other.k, other.n) != (self.k, self.n):
                raise ValueError(f"dimension mismatch: ({self.k},{self.n}) vs ({other.k},{other.n})")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.k, self.n, other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Polynomial._raw(self.k, self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.k, self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def _multiply(self, other: Polynomial, cap: int | None) -> Polynomial:
        terms: dict[Exponent, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                if cap is not None and any(e > cap for e in exp):
                    continue
                s = terms.get(exp, 0) + ca * cb
                if s:
                    terms[exp] = s
                else:
                    del terms[exp]
        return Polynomial._raw(self.k, self.n, terms)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._multiply(other, None)

    __rmul__ = __mul__

    def mul_windowed(self, other: Polynomial, w: Window | int) -> Polynomial:
        """Product keeping only terms whose every exponent is at most the cap."""
        other = self._coerce(other)
        return self._multiply(other, as_window(w).cap)

    def truncate(self, w: Window | int) -> Polynomial:
        w = as_window(w)
        return Polynomial._raw(self.k, self.n, {e: c for e, c in self._terms.items() if w.admits(e)})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.k, self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and self._terms == other._terms

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial(k={self.k}, n={self.n}, {format_polynomial(self)})"

    # --- substitution -------------------------------------------------------

    def specialize_coarse(self) -> Polynomial:
        """Substitute q[i][j] -> q[i]; the result has n = 1."""
        terms: dict[Exponent, int] = {}
        for exp, c in self._terms.items():
            coarse = tuple(sum(exp[i * self.n:(i + 1) * self.n]) for i in range(self.k))
            terms[coarse] = terms.get(coarse, 0) + c
        return Polynomial(self.k, 1, terms)

    def embed(self, k: int, block: int) -> Polynomial:
        """Move a one-block polynomial into block ``block`` of a k-block context."""
        if self.k != 1:
            raise ValueError("embed expects a single-block polynomial")
        pad_l = (0,) * (block * self.n)
        pad_r = (0,) * ((k - block - 1) * self.n)
        return Polynomial._raw(k, self.n, {pad_l + e + pad_r: c for e, c in self._terms.items()})

    # --- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "terms": [
                {"exp": unflatten_exponent(self.k, self.n, exp), "coef": str(c)}
                for exp, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> Polynomial:
        k, n = int(data["k"]), int(data["n"])
        terms: dict[Exponent, int] = {}
        for t in data["terms"]:
            exp = flatten_exponent(k, n, t["exp"])
            if exp in terms:
                raise ValueError(f"duplicate term {t['exp']!r}")
            terms[exp] = int(t["coef"])
        return cls(k, n, terms)

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"q{i + 1}_{j + 1}" for i in range(self.k) for j in range(self.n)] + ["coef"])
        for exp, c in self.items():
            writer.writerow(list(exp) + [c])
        return buf.getvalue()


def flatten_exponent(k: int, n: int, rows: Sequence[Sequence[int]]) -> Exponent:
    """Pad ragged rows (e.g. partitions) with zeros and flatten row-major."""
    if len(rows) != k:
        raise ValueError(f"expected {k} exponent rows, got {len(rows)}")
    out: list[int] = []
    for row in rows:
        if len(row) > n:
            raise ValueError(f"exponent row {tuple(row)!r} longer than n={n}")
        out.extend(row)
        out.extend([0] * (n - len(row)))
    return tuple(out)


def unflatten_exponent(k: int, n: int, exp: Exponent) -> list[list[int]]:
    return [list(exp[i * n:(i + 1) * n]) for i in range(k)]


def from_counts(k: int, n: int, counts: Mapping[tuple, int] | Iterable[tuple[tuple, int]]) -> Polynomial:
    """Build a polynomial from multipartition -> count pairs."""
    items = counts.items() if isinstance(counts, Mapping) else counts
    terms: dict[Exponent, int] = {}
    for rows, c in items:
        exp = flatten_exponent(k, n, rows)
        terms[exp] = terms.get(exp, 0) + c
    return Polynomial(k, n, terms)


def format_polynomial(p: Polynomial) -> str:
    if not p:
        return "0"
    pieces = []
    for exp, c in p.items():
        factors = []
        for idx, e in enumerate(exp):
            if e:
                i, j = divmod(idx, p.n)
                name = f"q{i + 1}_{j + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
        mono = "*".join(factors)
        if not mono:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        else:
            pieces.append(f"{c}*{mono}")
    return " + ".join(pieces).replace("+ -", "- ")
