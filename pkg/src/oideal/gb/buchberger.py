"""Buchberger's algorithm on packed sparse vectors.

A vector is a dict ``{packed monomial: coefficient}``.  Coefficients are
``mpq`` over QQ (``p is None``) or ints reduced mod ``p``.  Pairs are chosen
by smallest sugar, then smallest lcm; Gebauer-Moeller bookkeeping applies the
chain criterion everywhere and the coprime criterion only for ideals (it is
false for submodules of free modules of rank > 1).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .layout import Layout
from .limits import Limits, ResourceLimitError


@dataclass
class Elt:
    lm: int
    terms: dict
    tail: list
    sugar: int


def make_elt(terms: dict, sugar: int, p: int | None) -> Elt:
    lm = max(terms)
    lc = terms[lm]
    if lc != 1:
        if p is None:
            inv = 1 / lc
            terms = {m: c * inv for m, c in terms.items()}
        else:
            inv = pow(lc, -1, p)
            terms = {m: c * inv % p for m, c in terms.items()}
    tail = sorted(((m, c) for m, c in terms.items() if m != lm), reverse=True)
    return Elt(lm, terms, tail, sugar)


def sugar_of(terms: dict, layout: Layout) -> int:
    fm = layout.fmask
    return max(m & fm for m in terms)


def reduce(f: dict, sugar: int, reducers: list[Elt], layout: Layout, p: int | None,
           full: bool = True, limits: Limits | None = None) -> tuple[dict, int]:
    """Divide ``f`` (consumed) by ``reducers``; returns the remainder and its sugar."""
    guard = layout.guard
    pos_field = layout.pos_field
    pos_guard = layout.pos_guard
    fm = layout.fmask
    max_deg = limits.max_degree if limits else None
    rem: dict = {}
    steps = 0
    while f:
        m = max(f)
        c = f.pop(m)
        red = None
        mg = m | guard
        for g in reducers:
            d = mg - g.lm
            if d & guard == guard and (not pos_field or d & pos_field == pos_guard):
                red = g
                break
        if red is None:
            rem[m] = c
            if not full:
                rem.update(f)
                break
            continue
        t = m - red.lm
        s = red.sugar + (t & fm)
        if s > sugar:
            sugar = s
            if max_deg is not None and sugar > max_deg:
                raise ResourceLimitError("max_degree", sugar)
        get = f.get
        if p is None:
            for gm, gc in red.tail:
                k = gm + t
                v = get(k)
                if v is None:
                    f[k] = -c * gc
                else:
                    v -= c * gc
                    if v:
                        f[k] = v
                    else:
                        del f[k]
        else:
            for gm, gc in red.tail:
                k = gm + t
                v = get(k)
                if v is None:
                    f[k] = (-c * gc) % p
                else:
                    v = (v - c * gc) % p
                    if v:
                        f[k] = v
                    else:
                        del f[k]
        steps += 1
        if limits is not None and steps % 512 == 0:
            limits.check_time()
    return rem, sugar


def s_vector(a: Elt, b: Elt, lcm: int, p: int | None) -> dict:
    ta = lcm - a.lm
    tb = lcm - b.lm
    out = {m + ta: c for m, c in a.tail}
    get = out.get
    for m, c in b.tail:
        k = m + tb
        v = get(k)
        if v is None:
            out[k] = -c if p is None else (-c) % p
        else:
            v = v - c if p is None else (v - c) % p
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def _check_bits(elt: Elt, limits: Limits, p: int | None):
    if p is not None:
        return
    bits = max(max(c.numerator.bit_length(), c.denominator.bit_length()) for c in elt.terms.values())
    if bits > limits.max_bits:
        raise ResourceLimitError("max_bits", bits)


def buchberger(gens: list[dict], layout: Layout, p: int | None, limits: Limits) -> list[Elt]:
    """Reduced Groebner basis of the submodule generated by ``gens`` (dicts are not modified)."""
    ideal = layout.pos_shift is None
    fm = layout.fmask
    divides = layout.divides
    lcm_of = layout.lcm
    basis: list[Elt] = []
    active: list[int] = []
    pairs: dict[tuple[int, int], int] = {}
    heap: list = []

    def update(h: int):
        nonlocal active
        mh = basis[h].lm
        cands = [g for g in active if layout.same_position(basis[g].lm, mh)]
        lcms = {g: lcm_of(mh, basis[g].lm) for g in cands}
        coprime = {g: ideal and lcms[g] == mh + basis[g].lm for g in cands}
        kept: list[int] = []
        rest = list(cands)
        while rest:
            g = rest.pop()
            lg = lcms[g]
            if coprime[g] or (not any(divides(lcms[x], lg) for x in rest)
                              and not any(divides(lcms[x], lg) for x in kept)):
                kept.append(g)
        new_pairs = [g for g in kept if not coprime[g]]
        for key in list(pairs):
            lij = pairs[key]
            if divides(mh, lij):
                i, j = key
                if lcm_of(basis[i].lm, mh) != lij and lcm_of(basis[j].lm, mh) != lij:
                    del pairs[key]
        sh = basis[h].sugar
        dh = mh & fm
        for g in sorted(new_pairs):
            lg = lcms[g]
            dl = lg & fm
            sug = max(basis[g].sugar + dl - (basis[g].lm & fm), sh + dl - dh)
            if sug > limits.max_degree:
                raise ResourceLimitError("max_degree", sug)
            pairs[(g, h)] = lg
            heapq.heappush(heap, (sug, lg, g, h))
        if len(pairs) > limits.max_pairs:
            raise ResourceLimitError("max_pairs", len(pairs))
        active = [g for g in active if not divides(mh, basis[g].lm)] + [h]

    def add(terms: dict, sugar: int):
        elt = make_elt(terms, sugar, p)
        _check_bits(elt, limits, p)
        basis.append(elt)
        if len(basis) > limits.max_basis:
            raise ResourceLimitError("max_basis", len(basis))
        update(len(basis) - 1)

    for f in sorted((g for g in gens if g), key=lambda g: (sugar_of(g, layout), max(g))):
        h, s = reduce(dict(f), sugar_of(f, layout), [basis[i] for i in active], layout, p, True, limits)
        if h:
            add(h, s)

    while heap:
        sug, lij, i, j = heapq.heappop(heap)
        if pairs.get((i, j)) != lij:
            continue
        del pairs[(i, j)]
        limits.check_time()
        sv = s_vector(basis[i], basis[j], lij, p)
        if not sv:
            continue
        h, s = reduce(sv, sug, [basis[k] for k in active], layout, p, True, limits)
        if h:
            add(h, s)

    return interreduce([basis[i] for i in active], layout, p, limits)


def interreduce(elts: list[Elt], layout: Layout, p: int | None, limits: Limits | None = None) -> list[Elt]:
    """Tail-reduce a minimal basis into the reduced basis, sorted by leading monomial."""
    out = []
    for k, g in enumerate(elts):
        others = elts[:k] + elts[k + 1:]
        rem, _ = reduce(dict(g.terms), g.sugar, others, layout, p, True, limits)
        out.append(make_elt(rem, g.sugar, p))
    out.sort(key=lambda e: e.lm)
    return out


def minimal_leading(elts: list[Elt], layout: Layout) -> list[Elt]:
    """Drop elements whose leading monomial is divisible by another's."""
    keep = []
    for i, g in enumerate(elts):
        if any(layout.divides(h.lm, g.lm) and (h.lm != g.lm or j < i) for j, h in enumerate(elts) if j != i):
            continue
        keep.append(g)
    return keep
