"""Ideals: arithmetic, colon and saturation, radical membership, dimension and
height, reductions, and order ideals of generic elements."""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gb import GroebnerBasis, contains, eliminate, groebner, syzygies
from .poly import FreeElement, MonomialOrder, Polynomial, Ring, RingError

UNIT = math.inf


class Ideal:
    """An ideal of ``ring`` (taken modulo ``ring.quotient``) with a lazily cached reduced GB."""

    def __init__(self, ring: Ring, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            if not g.ring.same_free_ring(ring):
                raise RingError("generator from a different ring")
            if g.ring is not ring:
                g = g.change_ring(ring)
            if not g.is_zero() and g not in gens:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: GroebnerBasis | None = None

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "Ideal":
        from .poly import parse_poly_list

        return cls(ring, parse_poly_list(ring, text) if text.strip() else [])

    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner(self.ring, list(self.generators), 1)
        return self._gb

    def __contains__(self, f) -> bool:
        if isinstance(f, str):
            f = self.ring(f)
        elif not isinstance(f, Polynomial):
            f = self.ring.constant(f)
        return contains(self.gb(), f)

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_zero(self) -> bool:
        return not self.gb().elements

    def issubset(self, other: "Ideal") -> bool:
        return all(g in other for g in self.generators)

    def equals(self, other: "Ideal") -> bool:
        """Equality of ideals by mutual membership."""
        return self.issubset(other) and other.issubset(self)

    def reduced_generators(self) -> list[Polynomial]:
        """The reduced GB, without the quotient relations themselves."""
        gens = self.gb().polys()
        if self.ring.quotient:
            q = Ideal(self.ring.free(), [p.change_ring(self.ring.free()) for p in self.ring.quotient_polys()])
            gens = [g for g in gens if g.change_ring(q.ring) not in q]
        return gens

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_ops("sum", self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_ops("product", self, other)

    def __pow__(self, k: int) -> "Ideal":
        return ideal_ops("power", self, k)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"


def _same_ring(a: Ideal, b: Ideal):
    if a.ring != b.ring:
        raise RingError("ideals live in different rings")


def _as_ideal(a: Ideal, b) -> Ideal:
    if isinstance(b, Ideal):
        _same_ring(a, b)
        return b
    if isinstance(b, (Polynomial, str)):
        return Ideal(a.ring, [b])
    raise TypeError("expected an ideal or a polynomial")


def ideal_ops(op: str, a: Ideal, b) -> Ideal:
    """``sum``, ``product``, ``power``, ``intersect``, ``quotient`` (colon) or ``saturate``."""
    if op == "power":
        if not isinstance(b, int) or b < 0:
            raise ValueError("power must be a nonnegative integer")
        return power(a, b)
    b = _as_ideal(a, b)
    if op == "sum":
        return Ideal(a.ring, a.generators + b.generators)
    if op == "product":
        return Ideal(a.ring, [f * g for f in a.generators for g in b.generators])
    if op == "intersect":
        return intersect(a, b)
    if op == "quotient":
        return colon(a, b)
    if op == "saturate":
        return saturate(a, b)
    raise ValueError(f"unknown operation {op!r}")


def power(a: Ideal, k: int) -> Ideal:
    gens = [a.ring.one()]
    for _ in range(k):
        gens = list(dict.fromkeys(f * g for f in gens for g in a.generators))
    return Ideal(a.ring, gens)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a ∩ b`` as ``(t a + (1 - t) b) ∩ R``."""
    _same_ring(a, b)
    ring = a.ring
    if not a.generators or not b.generators:
        return Ideal(ring, [])
    t_name = ring.fresh_names("t", 1)
    big = ring.extend(t_name, [1], front=True, order=MonomialOrder.elim(1))
    t = big.var(t_name[0])
    shift = list(range(1, ring.nvars + 1))
    gens = [t * f.embed(big, shift) for f in a.generators]
    gens += [(1 - t) * g.embed(big, shift) for g in b.generators]
    gb = groebner(big, gens, 1)
    out = [Polynomial(ring, {e[1:]: c for e, c in v.coords[0].terms.items()}) for v in eliminate(gb, 1)]
    return Ideal(ring, out)


def colon_element(a: Ideal, f: Polynomial) -> Ideal:
    """``a : f``, read off the first coordinates of the syzygies of ``(f, a_1, ..., a_k)``."""
    ring = a.ring
    if f.is_zero():
        return Ideal(ring, [ring.one()])
    syz = syzygies(ring, [f] + list(a.generators))
    return Ideal(ring, [v.coords[0] for v in syz])


def colon(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    result = None
    for g in b.generators:
        if g in a:
            continue
        part = colon_element(a, g)
        result = part if result is None else intersect(result, part)
        if result.is_zero():
            break
    return result if result is not None else Ideal(a.ring, [a.ring.one()])


def saturate(a: Ideal, b: Ideal) -> Ideal:
    cur = a
    while True:
        nxt = colon(cur, b)
        if nxt.issubset(cur):
            return cur
        cur = nxt


def radical_member(f, ideal: Ideal) -> bool:
    """``f`` in the radical of ``ideal``: is ``1 in ideal + (1 - w f)`` over ``R[w]``?"""
    ring = ideal.ring
    if isinstance(f, str):
        f = ring(f)
    if f.is_zero():
        return True
    w_name = ring.fresh_names("w", 1)
    big = ring.extend(w_name, [1])
    pos = list(range(ring.nvars))
    w = big.var(w_name[0])
    gens = [g.embed(big, pos) for g in ideal.generators] + [1 - w * f.embed(big, pos)]
    return groebner(big, gens, 1).is_unit()


# -- dimension --------------------------------------------------------------

def min_hitting_set(supports: Iterable[int]) -> int:
    """Size of the smallest variable set meeting every support (bitmasks)."""
    sets = sorted(set(supports), key=lambda s: bin(s).count("1"))
    minimal = []
    for s in sets:
        if not any(m & s == m for m in minimal):
            minimal.append(s)
    if any(s == 0 for s in minimal):
        return UNIT
    best = [len(minimal)]

    def search(chosen: int, size: int):
        if size >= best[0]:
            return
        for s in minimal:
            if not s & chosen:
                break
        else:
            best[0] = size
            return
        bits = s
        while bits:
            low = bits & -bits
            search(chosen | low, size + 1)
            bits ^= low

    search(0, 0)
    return best[0]


def dim_from_leading(lms: Sequence[Sequence[int]], nvars: int) -> int:
    """Krull dimension of ``k[x]/in(I)`` from leading exponents; -1 for the unit ideal."""
    supports = [sum(1 << i for i, a in enumerate(e) if a) for e in lms]
    h = min_hitting_set(supports)
    return -1 if h == UNIT else nvars - h


@functools.lru_cache(maxsize=64)
def quotient_height(ring: Ring) -> int:
    """Height of the quotient ideal of ``ring`` inside the free polynomial ring."""
    if not ring.quotient:
        return 0
    free = ring.free()
    gb = groebner(free, [p.change_ring(free) for p in ring.quotient_polys()], 1)
    d = dim_from_leading([e for e, _ in gb.leading_monomials()], free.nvars)
    return free.nvars - d


@dataclass(frozen=True)
class HeightReport:
    dim_quotient: int
    height: float | int
    method: str = "exact"
    trials: int | None = None
    p: int | None = None
    heights: tuple = field(default=())

    @property
    def is_unit(self) -> bool:
        return self.height == UNIT

    def to_json(self) -> dict:
        out = {"height": "unit" if self.is_unit else self.height, "dim": self.dim_quotient,
               "method": self.method}
        if self.trials is not None:
            out["trials"] = self.trials
        return out


def dimension(ideal: Ideal) -> HeightReport:
    ring = ideal.ring
    gb = ideal.gb()
    if gb.is_unit():
        return HeightReport(-1, UNIT)
    d = dim_from_leading([e for e, _ in gb.leading_monomials()], ring.nvars)
    return HeightReport(d, ring.nvars - quotient_height(ring) - d)


def height(ideal: Ideal) -> float | int:
    return dimension(ideal).height


# -- reductions ---------------------------------------------------------------

@dataclass(frozen=True)
class ReductionResult:
    confirmed: bool
    n: int | None
    n_max: int

    def to_json(self) -> dict:
        out = {"confirmed": self.confirmed}
        if self.confirmed:
            out["n"] = self.n
        return {"reduction": out}


def is_reduction(J: Ideal, I: Ideal, n_max: int = 6) -> ReductionResult:
    """Least ``n <= n_max`` with ``J I^n = I^(n+1)``; a semidecision."""
    _same_ring(J, I)
    if not J.issubset(I):
        raise ValueError("J is not contained in I")
    In = Ideal(I.ring, [I.ring.one()])
    for n in range(n_max + 1):
        JIn = J * In
        In1 = In * I
        if In1.issubset(JIn):
            return ReductionResult(True, n, n_max)
        In = In1
    return ReductionResult(False, None, n_max)


# -- generic elements -------------------------------------------------------------

@dataclass(frozen=True)
class GenericOrderIdeal:
    ideal: Ideal
    height: float | int
    mode: str
    heights: tuple = ()
    trials: int = 0


def _combination(ring: Ring, duals: Sequence[FreeElement], coeffs: Sequence) -> list[Polynomial]:
    out = []
    for phi in duals:
        f = ring.zero()
        for c, v in zip(coeffs, phi.coords):
            if v:
                f = f + v * c
        out.append(f)
    return out


def generic_combination_ideal(duals: Sequence[FreeElement], ring: Ring, mode: str = "random",
                              trials: int = 7, seed: int = 0, box: int = 10 ** 4) -> GenericOrderIdeal:
    """Order ideal of ``y = sum Z_i x_i`` given the generators of ``N*`` as coordinate vectors.

    ``duals[k][i]`` is the value of the k-th dual generator on the i-th generator of N.
    ``symbolic`` works over ``R[Z_1..Z_n]``; ``random`` substitutes scalars for the ``Z_i``
    (uniform in ``[-box, box]`` over QQ, uniform in the field over GF(p)) and keeps the
    run of largest height.
    """
    n = duals[0].rank if duals else 0
    if mode == "symbolic":
        names = ring.fresh_names("Z", n)
        big = ring.extend(names, [1] * n)
        pos = list(range(ring.nvars))
        zs = [big.var(z) for z in names]
        lifted = [FreeElement(big, [c.embed(big, pos) for c in phi.coords]) for phi in duals]
        ideal = Ideal(big, _combination(big, lifted, zs))
        h = height(ideal)
        return GenericOrderIdeal(ideal, h, "symbolic", (h,), 0)
    if mode != "random":
        raise ValueError("mode must be 'symbolic' or 'random'")
    rng = random.Random(seed)
    best = None
    heights = []
    for _ in range(trials):
        if hasattr(ring.field, "p"):
            coeffs = [rng.randrange(ring.field.p) for _ in range(n)]
        else:
            coeffs = [rng.randint(-box, box) for _ in range(n)]
        ideal = Ideal(ring, _combination(ring, duals, [ring.constant(c) for c in coeffs]))
        h = height(ideal)
        heights.append(h)
        if best is None or h > best[1]:
            best = (ideal, h)
    return GenericOrderIdeal(best[0], best[1], "random", tuple(heights), trials)
