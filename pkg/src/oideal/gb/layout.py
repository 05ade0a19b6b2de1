"""Packed monomials.

A module monomial ``x^e * e_pos`` is packed into a single Python int made of
fixed-width fields (most significant first)::

    [pos if POT] [order-key fields] [pos if TOP] [exponent fields] [weighted degree]

Every field keeps its top bit clear as a guard, so

* the int order is the term order (keys are nonnegative linear forms),
* multiplying by a ring monomial is integer addition,
* divisibility is one subtraction and a mask test.
"""

from __future__ import annotations

from typing import Sequence

from .limits import ResourceLimitError

WIDTH = 24


class Layout:
    def __init__(self, rows: Sequence[Sequence[int]], weights: Sequence[int], rank: int = 1,
                 position: str = "pot", width: int = WIDTH):
        if position not in ("pot", "top"):
            raise ValueError("position rule must be 'pot' or 'top'")
        self.nvars = len(weights)
        self.rows = [tuple(r) for r in rows]
        self.weights = tuple(weights)
        self.rank = rank
        self.position = position
        self.width = width
        self.fmask = (1 << width) - 1
        self.cap = 1 << (width - 1)

        nfields = 1 + self.nvars + len(self.rows) + (1 if rank > 1 else 0)
        shift = (nfields - 1) * width
        self.pos_shift = None
        if rank > 1 and position == "pot":
            self.pos_shift, shift = shift, shift - width
        self.key_shifts = []
        for _ in self.rows:
            self.key_shifts.append(shift)
            shift -= width
        if rank > 1 and position == "top":
            self.pos_shift, shift = shift, shift - width
        self.exp_shifts = []
        for _ in range(self.nvars):
            self.exp_shifts.append(shift)
            shift -= width
        assert shift == 0
        self.guard = sum(1 << (s + width - 1) for s in self._all_shifts())
        self.pos_guard = (1 << (self.pos_shift + width - 1)) if self.pos_shift is not None else 0
        self.pos_field = (self.fmask << self.pos_shift) if self.pos_shift is not None else 0

    def _all_shifts(self):
        shifts = list(self.key_shifts) + list(self.exp_shifts) + [0]
        if self.pos_shift is not None:
            shifts.append(self.pos_shift)
        return shifts

    # -- packing ------------------------------------------------------------
    def pack(self, exp: Sequence[int], pos: int = 0) -> int:
        cap = self.cap
        m = 0
        deg = 0
        for w, s, a in zip(self.weights, self.exp_shifts, exp):
            if a >= cap:
                raise ResourceLimitError("max_degree", a)
            m |= a << s
            deg += w * a
        if deg >= cap:
            raise ResourceLimitError("max_degree", deg)
        m |= deg
        for row, s in zip(self.rows, self.key_shifts):
            m |= sum(r * a for r, a in zip(row, exp)) << s
        if self.pos_shift is not None:
            m |= (self.rank - 1 - pos) << self.pos_shift
        return m

    def unpack(self, m: int) -> tuple[tuple[int, ...], int]:
        fm = self.fmask
        exp = tuple((m >> s) & fm for s in self.exp_shifts)
        return exp, self.position_of(m)

    def position_of(self, m: int) -> int:
        if self.pos_shift is None:
            return 0
        return self.rank - 1 - ((m >> self.pos_shift) & self.fmask)

    def exponents(self, m: int) -> tuple[int, ...]:
        fm = self.fmask
        return tuple((m >> s) & fm for s in self.exp_shifts)

    def degree(self, m: int) -> int:
        return m & self.fmask

    # -- arithmetic ---------------------------------------------------------
    def divides(self, a: int, b: int) -> bool:
        d = (b | self.guard) - a
        if d & self.guard != self.guard:
            return False
        return self.pos_shift is None or d & self.pos_field == self.pos_guard

    def same_position(self, a: int, b: int) -> bool:
        return self.pos_shift is None or (a & self.pos_field) == (b & self.pos_field)

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.exponents(a), self.exponents(b)
        return self.pack([x if x > y else y for x, y in zip(ea, eb)], self.position_of(a))

    def coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.exponents(a), self.exponents(b)))
