"""Groebner bases of ideals and submodules, with normal forms, elimination,
syzygies, lifting and kernels of ring maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..poly import FreeElement, MonomialOrder, Polynomial, PrimeField, Ring, RingError
from . import buchberger as bb
from .layout import Layout
from .limits import current_limits


def _char(ring: Ring) -> int | None:
    return ring.field.p if isinstance(ring.field, PrimeField) else None


def _layout(ring: Ring, rank: int, position: str) -> Layout:
    return Layout(ring.order.rows(ring.weights), ring.weights, rank, position)


def _as_vectors(ring: Ring, items) -> tuple[list[FreeElement], int | None]:
    out = []
    rank = None
    for v in items:
        if isinstance(v, Polynomial):
            v = FreeElement(ring, [v])
        elif not isinstance(v, FreeElement):
            v = FreeElement(ring, v)
        if not v.ring.same_free_ring(ring):
            raise RingError("vector from a different ring")
        if rank is not None and v.rank != rank:
            raise RingError("vectors live in free modules of different ranks")
        rank = v.rank
        out.append(v)
    return out, rank


def _pack(layout: Layout, v: FreeElement, offset: int = 0) -> dict:
    out = {}
    for pos, c in enumerate(v.coords):
        for exp, a in c.terms.items():
            out[layout.pack(exp, pos + offset)] = a
    return out


def _unpack(layout: Layout, ring: Ring, terms: dict, rank: int, offset: int = 0) -> FreeElement:
    coords: list[dict] = [{} for _ in range(rank)]
    for m, c in terms.items():
        exp, pos = layout.unpack(m)
        pos -= offset
        if 0 <= pos < rank:
            coords[pos][exp] = c
    return FreeElement(ring, [Polynomial._raw(ring, d) for d in coords])


def _quotient_dicts(ring: Ring, layout: Layout, rank: int) -> list[dict]:
    out = []
    for q in ring.quotient_polys():
        for j in range(rank):
            out.append({layout.pack(e, j): c for e, c in q.terms.items()})
    return out


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """A reduced, monic Groebner basis, sorted by increasing leading monomial."""

    ring: Ring
    ambient_rank: int
    elements: tuple[FreeElement, ...]
    position: str = "pot"
    _layout: Layout = field(repr=False, default=None)
    _elts: tuple = field(repr=False, default=())

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def polys(self) -> list[Polynomial]:
        if self.ambient_rank != 1:
            raise RingError("basis of a submodule, not an ideal")
        return [e.coords[0] for e in self.elements]

    def is_unit(self) -> bool:
        """True when the basis spans the whole free module."""
        lms = {self._layout.unpack(e.lm) for e in self._elts}
        zero = (0,) * self.ring.nvars
        return all((zero, j) in lms for j in range(self.ambient_rank))

    def leading_monomials(self) -> list[tuple[tuple[int, ...], int]]:
        """(exponent, position) of each leading monomial."""
        return [self._layout.unpack(e.lm) for e in self._elts]

    def reduce_packed(self, terms: dict) -> dict:
        p = _char(self.ring)
        rem, _ = bb.reduce(terms, bb.sugar_of(terms, self._layout) if terms else 0, list(self._elts),
                           self._layout, p, True, current_limits())
        return rem


def groebner(ring: Ring, vectors: Sequence, ambient_rank: int | None = None,
             position: str = "pot") -> GroebnerBasis:
    """Reduced Groebner basis of the submodule spanned by ``vectors`` (plus quotient relations)."""
    vecs, rank = _as_vectors(ring, vectors)
    rank = ambient_rank if ambient_rank is not None else (rank or 1)
    for v in vecs:
        if v.rank != rank:
            raise RingError("vector rank differs from the ambient rank")
    layout = _layout(ring, rank, position)
    gens = [_pack(layout, v) for v in vecs] + _quotient_dicts(ring, layout, rank)
    elts = bb.buchberger(gens, layout, _char(ring), current_limits())
    elements = tuple(_unpack(layout, ring, e.terms, rank) for e in elts)
    return GroebnerBasis(ring, rank, elements, position, layout, tuple(elts))


def normal_form(gb: GroebnerBasis, v) -> FreeElement | Polynomial:
    """Full remainder of ``v`` modulo ``gb``; a polynomial in, a polynomial out."""
    scalar = isinstance(v, Polynomial)
    vec = FreeElement(gb.ring, [v]) if scalar else v
    if vec.rank != gb.ambient_rank:
        raise RingError("rank mismatch with the Groebner basis")
    if not vec.ring.same_free_ring(gb.ring):
        raise RingError("ring mismatch with the Groebner basis")
    rem = gb.reduce_packed(_pack(gb._layout, vec))
    out = _unpack(gb._layout, gb.ring, rem, gb.ambient_rank)
    return out.coords[0] if scalar else out


def contains(gb: GroebnerBasis, v) -> bool:
    nf = normal_form(gb, v)
    return nf.is_zero()


def s_vector_residues(gb: GroebnerBasis) -> list[FreeElement]:
    """Normal forms of all S-vectors of the basis; empty for a genuine Groebner basis."""
    layout = gb._layout
    p = _char(gb.ring)
    out = []
    elts = list(gb._elts)
    # quotient generators were adjoined as input, their S-vectors are covered by the basis
    for i in range(len(elts)):
        for j in range(i + 1, len(elts)):
            a, b = elts[i], elts[j]
            if not layout.same_position(a.lm, b.lm):
                continue
            lcm = layout.lcm(a.lm, b.lm)
            sv = bb.s_vector(a, b, lcm, p)
            rem = gb.reduce_packed(sv) if sv else {}
            if rem:
                out.append(_unpack(layout, gb.ring, rem, gb.ambient_rank))
    return out


def eliminate(gb: GroebnerBasis, k: int) -> list[FreeElement]:
    """Basis elements free of the first ``k`` variables."""
    if k < 0 or k > gb.ring.nvars:
        raise ValueError("block size out of range")
    if k and not (gb.ring.order.kind == "elim" and gb.ring.order.block == k) and \
            not (gb.ring.order.kind == "lex"):
        raise ValueError(f"basis was computed under order {gb.ring.order}, not elim({k})")
    out = []
    for e in gb.elements:
        if all(not any(exp[:k]) for c in e.coords for exp in c.terms):
            out.append(e)
    return out


@dataclass(frozen=True)
class SyzygyResult:
    """Generators of the kernel of ``R^s -> R^m``, e_i -> v_i."""

    generators: tuple[FreeElement, ...]
    nvectors: int

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _augmented(ring: Ring, vecs: list[FreeElement], rank: int):
    s = len(vecs)
    layout = _layout(ring, rank + s, "pot")
    gens = []
    for i, v in enumerate(vecs):
        d = _pack(layout, v)
        d[layout.pack((0,) * ring.nvars, rank + i)] = ring.field.one
        gens.append(d)
    gens += _quotient_dicts(ring, layout, rank + s)
    return layout, gens


def syzygies(ring: Ring, vectors: Sequence) -> SyzygyResult:
    """Relations among ``vectors``, computed over ``ring`` modulo its quotient."""
    vecs, rank = _as_vectors(ring, vectors)
    s = len(vecs)
    if s == 0:
        return SyzygyResult((), 0)
    layout, gens = _augmented(ring, vecs, rank)
    elts = bb.buchberger(gens, layout, _char(ring), current_limits())
    qgb = None
    if ring.quotient:
        qgb = groebner(ring, ring.quotient_polys(), 1)
    out = []
    for e in elts:
        if layout.position_of(e.lm) < rank:
            continue
        v = _unpack(layout, ring, e.terms, s, offset=rank)
        if qgb is not None and all(contains(qgb, c) for c in v.coords):
            continue
        out.append(v)
    return SyzygyResult(tuple(out), s)


def lift(ring: Ring, vectors: Sequence, target) -> list[Polynomial] | None:
    """Cofactors ``c`` with ``target = sum c_i v_i`` (modulo the quotient), or None."""
    vecs, rank = _as_vectors(ring, vectors)
    if isinstance(target, Polynomial):
        target = FreeElement(ring, [target])
    if not vecs:
        return [] if target.is_zero() else None
    if target.rank != rank:
        raise RingError("target rank differs from the vectors")
    s = len(vecs)
    layout, gens = _augmented(ring, vecs, rank)
    p = _char(ring)
    limits = current_limits()
    elts = bb.buchberger(gens, layout, p, limits)
    start = _pack(layout, target)
    if not start:
        return [ring.zero()] * s
    rem, _ = bb.reduce(start, bb.sugar_of(start, layout), elts, layout, p, True, limits)
    if any(layout.position_of(m) < rank for m in rem):
        return None
    v = _unpack(layout, ring, rem, s, offset=rank)
    return [-c for c in v.coords]


def kernel_of_map(source: Ring, target: Ring, images: Sequence[Polynomial]) -> list[Polynomial]:
    """Generators of the kernel of ``source -> target``, x_i -> images[i]."""
    if len(images) != source.nvars:
        raise ValueError(f"need {source.nvars} images, got {len(images)}")
    k = target.nvars
    clash = set(source.variables) & set(target.variables)
    src_names = [f"{v}_" if v in clash else v for v in source.variables]
    while set(src_names) & set(target.variables):
        src_names = [n + "_" for n in src_names]
    homogeneous = all(not f.is_zero() and f.is_homogeneous() and f.degree() > 0 for f in images)
    src_weights = [f.degree() for f in images] if homogeneous else list(source.weights)
    combined = target.extend(src_names, src_weights, order=MonomialOrder.elim(k))
    gens = []
    n = source.nvars
    for i, f in enumerate(images):
        t = combined.monomial(tuple(1 if j == k + i else 0 for j in range(k + n)))
        gens.append(t - f.embed(combined, list(range(k))))
    gb = groebner(combined, gens, 1)
    out = []
    for e in eliminate(gb, k):
        f = e.coords[0]
        out.append(Polynomial(source, {exp[k:]: c for exp, c in f.terms.items()}))
    return out
