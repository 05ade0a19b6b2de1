"""Monomial orders.

Every supported order is a matrix order whose rows are nonnegative integer
vectors: ``m1 > m2`` iff the tuple ``rows . m1`` is lexicographically larger
than ``rows . m2``.  Reverse-lexicographic tie breaks are expressed through
partial weighted sums, which keeps every row nonnegative and lets the
Groebner engine pack monomials into machine-friendly integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

KINDS = ("lex", "grlex", "grevlex", "elim")


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 0:
            raise ValueError("elimination block size must be nonnegative")

    @classmethod
    def elim(cls, k: int) -> "MonomialOrder":
        return cls("elim", k)

    def __str__(self) -> str:
        if self.kind == "elim":
            return f"elim({self.block})"
        return self.kind

    def rows(self, weights: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        n = len(weights)
        if self.kind == "lex":
            return tuple(_unit(n, i) for i in range(n))
        if self.kind == "grlex":
            return (tuple(weights),) + tuple(_unit(n, i) for i in range(n))
        if self.kind == "grevlex":
            return _grevlex_rows(weights, 0, n)
        k = min(self.block, n)
        if k == 0 or k == n:
            return _grevlex_rows(weights, 0, n)
        return _grevlex_rows(weights, 0, k) + _grevlex_rows(weights, k, n)

    def key(self, exp: Sequence[int], weights: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(r * e for r, e in zip(row, exp)) for row in self.rows(weights))


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def _grevlex_rows(weights: Sequence[int], lo: int, hi: int) -> tuple[tuple[int, ...], ...]:
    # (wdeg, w.e over vars lo..hi-2, ..., w.e over var lo): comparing the partial
    # sums at equal total degree is the same as comparing -e_last, -e_{last-1}, ...
    n = len(weights)
    rows = []
    for stop in range(hi, lo, -1):
        rows.append(tuple(weights[j] if lo <= j < stop else 0 for j in range(n)))
    return tuple(rows)


def compare(order: MonomialOrder, weights: Sequence[int], m1: Sequence[int], m2: Sequence[int]) -> Ordering:
    if len(m1) != len(m2) or len(m1) != len(weights):
        raise ValueError("exponent vectors must have the same length as the weights")
    k1, k2 = order.key(m1, weights), order.key(m2, weights)
    if k1 == k2:
        # the rows are nonsingular, so equal keys mean equal monomials
        return Ordering.EQ
    return Ordering.GT if k1 > k2 else Ordering.LT
