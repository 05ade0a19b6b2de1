"""Finitely presented modules: perpendicular modules, order ideals, Fitting and
trace ideals, colons, rank, the G_s condition, Koszul matrices and Ext vanishing."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .gb import ResourceLimitError, syzygies
from .ideals import UNIT, Ideal, height, intersect
from .poly import QQ, FreeElement, PolyMatrix, Polynomial, Ring, RingError


@dataclass(frozen=True)
class FPModule:
    """``coker(relations)``: ``n_generators`` generators, one relation per column."""

    ring: Ring
    n_generators: int
    relations: PolyMatrix
    labels: tuple = ()

    def __post_init__(self):
        if self.relations.nrows != self.n_generators:
            raise RingError("relation matrix needs one row per generator")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"g{i + 1}" for i in range(self.n_generators)))

    @classmethod
    def from_columns(cls, ring: Ring, n: int, columns: Sequence, labels=()) -> "FPModule":
        return cls(ring, n, PolyMatrix.from_columns(ring, [tuple(c) for c in columns], n), tuple(labels))

    @classmethod
    def free(cls, ring: Ring, n: int) -> "FPModule":
        return cls(ring, n, PolyMatrix(ring, [], n, 0))

    @classmethod
    def from_submodule(cls, ring: Ring, vectors: Sequence) -> "FPModule":
        """The submodule of a free module spanned by ``vectors``, presented by its syzygies."""
        syz = syzygies(ring, list(vectors))
        return cls.from_columns(ring, len(vectors), [tuple(v.coords) for v in syz])

    @property
    def columns(self) -> list[FreeElement]:
        return self.relations.columns()

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "generators": self.n_generators,
                "relations": self.relations.to_lists()}

    @classmethod
    def from_json(cls, data: dict, ring: Ring | None = None) -> "FPModule":
        from .poly import parse_poly, parse_ring

        ring = ring or parse_ring(data["ring"])
        n = int(data["generators"])
        rows = data.get("relations") or []
        if rows and len(rows) != n:
            raise RingError("relations need one row per generator")
        ncols = len(rows[0]) if rows else 0
        rows = [[parse_poly(ring, str(c)) for c in r] for r in rows] if rows else []
        return cls(ring, n, PolyMatrix(ring, rows, n, ncols))


def _vector(ring: Ring, x) -> FreeElement:
    if isinstance(x, FreeElement):
        return x
    return FreeElement(ring, [ring(c) if isinstance(c, str) else c for c in x])


# -- minimal presentations ---------------------------------------------------

def minimalize(N: FPModule) -> FPModule:
    """Split off relations with a unit entry until every entry lies in the maximal ideal."""
    ring = N.ring
    rows = [list(r) for r in N.relations.rows]
    labels = list(N.labels)
    ncols = N.relations.ncols
    while True:
        pivot = None
        for i, r in enumerate(rows):
            for j, a in enumerate(r):
                if a.is_zero():
                    continue
                c = a.constant_term()
                if c == 0:
                    continue
                if not a.is_constant():
                    raise ValueError("entry with a unit constant term and higher terms: "
                                     "presentation is not graded")
                pivot = (i, j, c)
                break
            if pivot:
                break
        if pivot is None:
            break
        i, j, c = pivot
        inv = ring.field.inv(c)
        col_j = [r[j] for r in rows]
        for k in range(ncols):
            if k == j:
                continue
            a = rows[i][k]
            if a.is_zero():
                continue
            factor = a * inv
            for r_idx, r in enumerate(rows):
                if col_j[r_idx]:
                    r[k] = r[k] - col_j[r_idx] * factor
        del rows[i]
        del labels[i]
        for r in rows:
            del r[j]
        ncols -= 1
    keep = [k for k in range(ncols) if any(not r[k].is_zero() for r in rows)]
    rows = [[r[k] for k in keep] for r in rows]
    return FPModule(ring, len(rows), PolyMatrix(ring, rows, len(rows), len(keep)), tuple(labels))


# -- duals and perpendicular modules -------------------------------------------------

def dual_generators(N: FPModule) -> list[FreeElement]:
    """Generators of ``N* = ker(psi^T)`` inside ``(R^n)*`` (coordinates = values on the generators)."""
    n = N.n_generators
    if N.relations.ncols == 0:
        return [FreeElement.unit(N.ring, n, i) for i in range(n)]
    return list(syzygies(N.ring, N.relations.row_vectors()))


@dataclass(frozen=True)
class PerpResult:
    perp: FPModule
    embedding: tuple[FreeElement, ...]
    source: FPModule

    def to_json(self) -> dict:
        return {"perp": self.perp.to_json(), "embedding": [[str(c) for c in v] for v in self.embedding]}


def perpendicular(N: FPModule, minimal: bool = True) -> PerpResult:
    """``N^perp``: generators ``x_i^perp``, relations the generators of ``N*`` as columns.

    The embedding vectors are the rows of the presentation matrix, spanning the
    image of ``psi^T`` isomorphic to the perpendicular module.
    """
    if minimal:
        N = minimalize(N)
    n = N.n_generators
    duals = dual_generators(N)
    if N.relations.ncols == 0:
        rel = PolyMatrix.identity(N.ring, n)
    else:
        rel = PolyMatrix.from_columns(N.ring, [tuple(v.coords) for v in duals], n)
    labels = tuple(f"{lab}^perp" for lab in N.labels)
    perp = FPModule(N.ring, n, rel, labels)
    return PerpResult(perp, tuple(N.relations.row_vectors()), N)


def double_perp_matches(N: FPModule) -> bool:
    """``[x_1^perp, ..., x_n^perp]^perp`` equals ``N`` when ``N`` is torsionless (same generators)."""
    P = perpendicular(N, minimal=False).perp
    back = perpendicular(P, minimal=False).perp
    return _same_column_span(N.ring, N.relations.columns(), back.relations.columns(), N.n_generators)


def _same_column_span(ring: Ring, a: Sequence[FreeElement], b: Sequence[FreeElement], rank: int) -> bool:
    from .gb import contains, groebner

    ga = groebner(ring, list(a), rank) if a else None
    gb_ = groebner(ring, list(b), rank) if b else None

    def inside(vs, g):
        return all(v.is_zero() or (g is not None and contains(g, v)) for v in vs)

    return inside(a, gb_) and inside(b, ga)


# -- order ideals -----------------------------------------------------------------

@dataclass(frozen=True)
class OrderIdealResult:
    ideal: Ideal
    route: str
    element: tuple
    other: Ideal | None = None

    @property
    def agree(self) -> bool | None:
        return None if self.other is None else self.ideal.equals(self.other)

    def to_json(self) -> dict:
        out = {"route": self.route, "element": [str(c) for c in self.element],
               "ideal": [str(g) for g in self.ideal.reduced_generators()]}
        if self.other is not None:
            out["row_ideal"] = [str(g) for g in self.other.reduced_generators()]
            out["agree"] = self.agree
        return out


def _dual_kernel_route(N: FPModule, x: FreeElement) -> Ideal:
    return Ideal(N.ring, [phi.dot(x) for phi in dual_generators(N)])


def _row_ideal_route(N: FPModule, x: FreeElement) -> Ideal:
    # present N on (x_1, ..., x_n, x) with the extra relation x - sum x_i g_i = 0
    ring = N.ring
    n = N.n_generators
    z = ring.zero()
    cols = [tuple(c.coords) + (z,) for c in N.relations.columns()]
    cols.append(tuple(-c for c in x.coords) + (ring.one(),))
    extended = FPModule.from_columns(ring, n + 1, cols)
    perp = perpendicular(extended, minimal=False).perp
    return Ideal(ring, list(perp.relations.rows[n]))


def order_ideal(N: FPModule, x, route: str = "dual_kernel") -> OrderIdealResult:
    """``N*(x)`` for ``x`` given by its coefficients in the generators of ``N``.

    ``dual_kernel`` evaluates the generators of ``N*`` on ``x``; ``row_ideal`` adds ``x``
    as a new generator and reads the last row ideal of the new perpendicular
    presentation; ``both`` runs the two and keeps the second in ``other``.
    """
    x = _vector(N.ring, x)
    if x.rank != N.n_generators:
        raise RingError("element needs one coefficient per generator")
    if route == "dual_kernel":
        return OrderIdealResult(_dual_kernel_route(N, x), route, tuple(x.coords))
    if route == "row_ideal":
        return OrderIdealResult(_row_ideal_route(N, x), route, tuple(x.coords))
    if route == "both":
        return OrderIdealResult(_dual_kernel_route(N, x), route, tuple(x.coords), _row_ideal_route(N, x))
    raise ValueError("route must be row_ideal, dual_kernel or both")


def trace_ideal(N: FPModule) -> Ideal:
    """All coordinates of the generators of ``N*``."""
    return Ideal(N.ring, [c for phi in dual_generators(N) for c in phi.coords])


# -- Fitting ideals ---------------------------------------------------------------

def bareiss_det(rows: Sequence[Sequence[Polynomial]], ring: Ring) -> Polynomial:
    """Fraction-free elimination; every division is exact."""
    a = [list(r) for r in rows]
    k = len(a)
    if k == 0:
        return ring.one()
    sign = 1
    prev = ring.one()
    for p in range(k - 1):
        if a[p][p].is_zero():
            swap = next((r for r in range(p + 1, k) if not a[r][p].is_zero()), None)
            if swap is None:
                return ring.zero()
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]).divide_exact(prev)
        prev = a[p][p]
    det = a[k - 1][k - 1]
    return det if sign == 1 else -det


def minors(A: PolyMatrix, k: int) -> list[Polynomial]:
    """All nonzero ``k x k`` minors of ``A``."""
    ring = A.ring
    if k == 0:
        return [ring.one()]
    if k > A.nrows or k > A.ncols:
        return []
    out = []
    if k <= 4:
        memo: dict = {}

        def det(rs: tuple, cs: tuple) -> Polynomial:
            # Laplace expansion along the first row, shared across row/column subsets
            if len(rs) == 1:
                return A.rows[rs[0]][cs[0]]
            key = (rs, cs)
            hit = memo.get(key)
            if hit is not None:
                return hit
            total = ring.zero()
            r0 = A.rows[rs[0]]
            for idx, c in enumerate(cs):
                a = r0[c]
                if a.is_zero():
                    continue
                sub = det(rs[1:], cs[:idx] + cs[idx + 1:])
                if sub.is_zero():
                    continue
                term = a * sub
                total = total + term if idx % 2 == 0 else total - term
            memo[key] = total
            return total

        for rs in itertools.combinations(range(A.nrows), k):
            for cs in itertools.combinations(range(A.ncols), k):
                d = det(rs, cs)
                if not d.is_zero():
                    out.append(d)
    else:
        for rs in itertools.combinations(range(A.nrows), k):
            for cs in itertools.combinations(range(A.ncols), k):
                d = bareiss_det([[A.rows[i][j] for j in cs] for i in rs], ring)
                if not d.is_zero():
                    out.append(d)
    return list(dict.fromkeys(out))


def fitting_ideal(A: PolyMatrix, j: int) -> Ideal:
    """``Fitt_j`` of ``coker(A)``: the ideal of ``(n - j)``-minors, ``n = A.nrows``."""
    if j < 0:
        raise ValueError("Fitting index must be nonnegative")
    k = A.nrows - j
    if k <= 0:
        return Ideal(A.ring, [A.ring.one()])
    return Ideal(A.ring, minors(A, k))


# -- colon ideals ------------------------------------------------------------------

def module_colon(U: Sequence, M: FPModule) -> Ideal:
    """``U :_R M = ann(M/U)`` with ``U`` given by coefficient vectors in the generators of ``M``."""
    ring = M.ring
    n = M.n_generators
    span = [_vector(ring, u) for u in U] + M.relations.columns()
    span = [v for v in span if not v.is_zero()]
    result = None
    for i in range(n):
        e = FreeElement.unit(ring, n, i)
        syz = syzygies(ring, [e] + span)
        part = Ideal(ring, [v.coords[0] for v in syz])
        result = part if result is None else intersect(result, part)
        if result.is_zero():
            break
    return result if result is not None else Ideal(ring, [ring.one()])


def submodule_colon(U: Sequence[FreeElement], M: Sequence[FreeElement]) -> Ideal:
    """``U : M`` for submodules of a common free module."""
    ring = M[0].ring
    result = None
    for m in M:
        if m.is_zero():
            continue
        syz = syzygies(ring, [m] + [u for u in U if not u.is_zero()])
        part = Ideal(ring, [v.coords[0] for v in syz])
        result = part if result is None else intersect(result, part)
        if result.is_zero():
            break
    return result if result is not None else Ideal(ring, [ring.one()])


# -- rank --------------------------------------------------------------------------

def _numeric_rank(rows: list[list], field) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][c])
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [field(a - f * b) for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def matrix_rank(A: PolyMatrix, trials: int = 3, seed: int = 0) -> int:
    """Rank over the fraction field.

    Over a polynomial ring this evaluates at random points (a lower bound that is
    exact with high probability, the maximum over ``trials`` is kept).  Over a
    quotient ring minors are tested modulo the quotient ideal.
    """
    ring = A.ring
    if A.nrows == 0 or A.ncols == 0:
        return 0
    if ring.quotient:
        for k in range(min(A.nrows, A.ncols), 0, -1):
            q = Ideal(ring, [])
            if any(m not in q for m in minors(A, k)):
                return k
        return 0
    rng = random.Random(seed)
    field_ = ring.field
    best = 0
    for _ in range(trials):
        point = [field_.random_element(rng) for _ in range(ring.nvars)]
        rows = [[field_(c.evaluate(point)) for c in r] for r in A.rows]
        best = max(best, _numeric_rank(rows, field_))
    return best


def rank(N: FPModule) -> int:
    return N.n_generators - matrix_rank(N.relations)


# -- Koszul complexes ------------------------------------------------------------------

def koszul_ring(d: int, field_=QQ) -> Ring:
    return Ring(field_, tuple(f"z{i + 1}" for i in range(d)))


def wedge_basis(d: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(d), k))


def koszul_matrix(d: int, i: int, ring: Ring | None = None) -> PolyMatrix:
    """The map ``wedge^(i+2) R^d -> wedge^(i+1) R^d``,
    ``e_J -> sum_k (-1)^k z_(j_k) e_(J - j_k)``; for ``d = 2, i = 0`` the column is ``(-z2, z1)``."""
    if d < 2 or not 0 <= i <= d - 2:
        raise ValueError("need 0 <= i <= d - 2")
    ring = ring or koszul_ring(d)
    if ring.nvars < d:
        raise RingError("ring has fewer than d variables")
    zs = ring.gens()
    rows_basis = wedge_basis(d, i + 1)
    index = {J: r for r, J in enumerate(rows_basis)}
    cols = []
    for J in wedge_basis(d, i + 2):
        col = [ring.zero()] * len(rows_basis)
        for k, j in enumerate(J):
            sub = J[:k] + J[k + 1:]
            col[index[sub]] = zs[j] if k % 2 == 0 else -zs[j]
        cols.append(col)
    return PolyMatrix.from_columns(ring, cols, len(rows_basis))


def omega(d: int, i: int, ring: Ring | None = None) -> FPModule:
    """``Omega^i = coker(wedge^(i+2) -> wedge^(i+1))`` with generators labelled by index sets."""
    A = koszul_matrix(d, i, ring)
    labels = tuple("e" + "^".join(str(j + 1) for j in J) for J in wedge_basis(d, i + 1))
    return FPModule(A.ring, A.nrows, A, labels)


def wedge_element(d: int, pairs: Sequence[tuple[int, int]], ring: Ring, k: int = 2) -> FreeElement:
    """Coefficient vector of ``sum e_a ^ e_b`` (1-based index pairs) in ``wedge^k``."""
    basis = wedge_basis(d, k)
    index = {J: r for r, J in enumerate(basis)}
    coords = [ring.zero()] * len(basis)
    for pair in pairs:
        J = tuple(sorted(a - 1 for a in pair))
        coords[index[J]] = coords[index[J]] + ring.one()
    return FreeElement(ring, coords)


def koszul_perp_check(d: int, i: int) -> bool:
    """``(Omega^i)^perp`` and ``Omega^(d-i-2)`` have the same relation module once
    ``e_J`` is matched with ``+-e_(complement of J)``."""
    ring = koszul_ring(d)
    P = perpendicular(omega(d, i, ring), minimal=True).perp
    target = koszul_matrix(d, d - i - 2, ring) if d - i - 2 >= 0 and d - i - 2 <= d - 2 else None
    src_basis = wedge_basis(d, i + 1)
    tgt_basis = wedge_basis(d, d - i - 1)
    tindex = {J: r for r, J in enumerate(tgt_basis)}
    perm = []
    for J in src_basis:
        comp = tuple(j for j in range(d) if j not in J)
        inversions = sum(1 for a in J for b in comp if a > b)
        perm.append((tindex[comp], -1 if inversions % 2 else 1))
    mapped = []
    for col in P.relations.columns():
        coords = [ring.zero()] * len(tgt_basis)
        for r, c in enumerate(col.coords):
            t, s = perm[r]
            coords[t] = c if s == 1 else -c
        mapped.append(FreeElement(ring, coords))
    cols = target.columns() if target is not None else [FreeElement.unit(ring, len(tgt_basis), r)
                                                         for r in range(len(tgt_basis))]
    return _same_column_span(ring, mapped, cols, len(tgt_basis))


# -- G_s ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class GsReport:
    rank: int
    s: float | int
    heights: dict = field(default_factory=dict)  # j -> ht Fitt_(j+r-1)
    holds: bool = True
    max_s: float | int = 0

    def to_json(self) -> dict:
        inf = lambda v: "inf" if v == float("inf") else v  # noqa: E731
        return {"rank": self.rank, "s": inf(self.s), "holds": self.holds, "max_s": inf(self.max_s),
                "heights": {str(j): "unit" if h == UNIT else h for j, h in self.heights.items()}}


def check_Gs(N: FPModule, s: float | int = float("inf")) -> GsReport:
    """``G_s`` via ``ht Fitt_(j+r-1)(N) >= j + 1`` for ``1 <= j <= s - 1``.

    Fitting ideals with index at least the generator count are the unit ideal, so
    for ``s = inf`` only ``j < mu - r + 1`` needs checking.
    """
    N = minimalize(N)
    r = rank(N)
    mu = N.n_generators
    last = mu - r  # largest j with a proper Fitting ideal
    limit = last if s == float("inf") else min(int(s) - 1, last)
    heights = {}
    max_s = None
    for j in range(1, limit + 1):
        h = height(fitting_ideal(N.relations, j + r - 1))
        heights[j] = h
        if h < j + 1 and max_s is None:
            max_s = j
    holds = max_s is None
    if max_s is None:
        max_s = float("inf") if limit == last else s
    return GsReport(r, s, heights, holds, max_s)


# -- Ext vanishing ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtReport:
    vanishes: dict  # i -> bool
    resolution_ranks: tuple

    def to_json(self) -> dict:
        return {"ext_vanishes": {str(i): v for i, v in self.vanishes.items()},
                "resolution_ranks": list(self.resolution_ranks)}


def free_resolution(M: FPModule, length: int) -> list[PolyMatrix]:
    """``[psi_1, psi_2, ...]`` by iterated syzygies, not necessarily minimal."""
    ring = M.ring
    maps = [M.relations]
    while len(maps) < length:
        last = maps[-1]
        if last.ncols == 0:
            break
        syz = syzygies(ring, last.columns())
        if not syz.generators:
            break
        maps.append(PolyMatrix.from_columns(ring, [tuple(v.coords) for v in syz], last.ncols))
    return maps


def ext_vanishes(M: FPModule, i_range: Sequence[int], max_length: int = 12) -> ExtReport:
    """``Ext^i(M, R) = 0`` iff ``ker(psi_(i+1)^T) = im(psi_i^T)`` inside ``F_i*``."""
    from .gb import contains, groebner

    ring = M.ring
    if ring.quotient:
        raise RingError("Ext vanishing is implemented over polynomial rings only")
    i_range = list(i_range)
    if any(i < 1 for i in i_range):
        raise ValueError("Ext index must be at least 1")
    need = max(i_range) + 1
    if need > max_length:
        raise ResourceLimitError("resolution_length", need)
    maps = free_resolution(M, need)
    ranks = [M.n_generators] + [m.ncols for m in maps]
    out = {}
    for i in i_range:
        if i >= len(ranks) or ranks[i] == 0:
            out[i] = True
            continue
        psi_i = maps[i - 1]
        rank_i = ranks[i]
        if i < len(maps) and maps[i].ncols:
            kernel = list(syzygies(ring, maps[i].row_vectors()))
        else:
            kernel = [FreeElement.unit(ring, rank_i, k) for k in range(rank_i)]
        image = [v for v in psi_i.transpose().columns() if not v.is_zero()]
        if not kernel:
            out[i] = True
            continue
        if not image:
            out[i] = False
            continue
        g = groebner(ring, image, rank_i)
        out[i] = all(contains(g, v) for v in kernel)
    return ExtReport(out, tuple(ranks))
