"""Sparse multivariate polynomials, free-module elements and matrices."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .ring import Ring, RingError


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple, object]):
        n = ring.nvars
        conv = ring.field
        clean = {}
        for exp, c in terms.items():
            c = conv(c)
            if c == 0:
                continue
            exp = tuple(exp)
            if len(exp) != n:
                raise RingError(f"exponent vector {exp} does not match {n} variables")
            if any(e < 0 for e in exp):
                raise RingError("negative exponent")
            clean[exp] = c
        self.ring = ring
        self.terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        self = object.__new__(cls)
        self.ring = ring
        self.terms = terms
        self._sorted = None
        self._hash = None
        return self

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in decreasing order for the ring's monomial order."""
        if self._sorted is None:
            rows = self.ring.order.rows(self.ring.weights)
            key = lambda item: (tuple(sum(r * e for r, e in zip(row, item[0])) for row in rows), item[0])  # noqa: E731
            self._sorted = sorted(self.terms.items(), key=key, reverse=True)
        return self._sorted

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def leading_monomial(self) -> tuple:
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def degree(self) -> int:
        """Weighted total degree; -1 for zero."""
        w = self.ring.weights
        return max((sum(a * b for a, b in zip(w, e)) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        w = self.ring.weights
        degs = {sum(a * b for a, b in zip(w, e)) for e in self.terms}
        return len(degs) <= 1

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    # -- conversions --------------------------------------------------------
    def change_ring(self, ring: Ring) -> "Polynomial":
        if ring.nvars != self.ring.nvars:
            raise RingError("variable count mismatch")
        if ring.field == self.ring.field:
            return Polynomial._raw(ring, self.terms)
        return Polynomial(ring, self.terms)

    def embed(self, ring: Ring, positions: Sequence[int]) -> "Polynomial":
        """Move into ``ring`` sending variable i to variable ``positions[i]``."""
        n = ring.nvars
        out = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for i, a in enumerate(exp):
                if a:
                    new[positions[i]] += a
            out[tuple(new)] = c
        return Polynomial(ring, out)

    def substitute(self, values: Mapping[int, "Polynomial"], ring: Ring | None = None) -> "Polynomial":
        """Replace variable i by ``values[i]`` (polynomials in ``ring``); others map identically if ``ring`` is ours."""
        ring = ring or self.ring
        result = ring.zero()
        cache: dict[tuple[int, int], Polynomial] = {}
        for exp, c in self.terms.items():
            term = ring.constant(c)
            for i, a in enumerate(exp):
                if not a:
                    continue
                if i in values:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = values[i] ** a
                    term = term * cache[key]
                else:
                    term = term * ring.monomial(tuple(a if j == i else 0 for j in range(ring.nvars)))
            result = result + term
        return result

    def evaluate(self, point: Sequence) -> object:
        field = self.ring.field
        total = field.zero
        for exp, c in self.terms.items():
            v = c
            for x, a in zip(point, exp):
                if a:
                    v = v * field(x) ** a
            total = total + v
        return field(total)

    def truncate(self, degree: int) -> "Polynomial":
        """Drop every term of weighted degree >= ``degree``."""
        w = self.ring.weights
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items()
                                           if sum(a * b for a, b in zip(w, e)) < degree})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self * self.ring.field.inv(self.leading_coefficient())

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                if not other.ring.same_free_ring(self.ring):
                    raise RingError("ring mismatch")
                return other.change_ring(self.ring)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = self.ring.field(v + c)
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial._raw(self.ring, {e: f(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if c == 0:
                return self.ring.zero()
            f = self.ring.field
            return Polynomial._raw(self.ring, {e: f(v * c) for e, v in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        f = self.ring.field
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.ring, {e: f(c) for e, c in out.items() if f(c) != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient; raises ``ArithmeticError`` when ``divisor`` does not divide."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lm, lc = divisor.leading_term()
        inv = self.ring.field.inv(lc)
        rem = self
        quotient = self.ring.zero()
        while not rem.is_zero():
            m, c = rem.leading_term()
            shift = tuple(a - b for a, b in zip(m, lm))
            if any(s < 0 for s in shift):
                raise ArithmeticError("polynomial division is not exact")
            t = self.ring.monomial(shift, c * inv)
            quotient = quotient + t
            rem = rem - t * divisor
        return quotient

    # -- comparison and printing -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.same_free_ring(other.ring) and self.terms == other.terms
        if other == 0:
            return not self.terms
        try:
            return self.terms == self.ring.constant(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def format_monomial(names: Sequence[str], exp: Sequence[int]) -> str:
    parts = []
    for name, a in zip(names, exp):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    field = f.ring.field
    out = []
    for exp, c in f.sorted_terms():
        text = field.format(c)
        neg = text.startswith("-")
        mag = text[1:] if neg else text
        mono = format_monomial(f.ring.variables, exp)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class FreeElement:
    """An element of the free module ``R^rank``, stored as a tuple of coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: Ring, coords: Iterable):
        coords = tuple(c if isinstance(c, Polynomial) else ring(c) for c in coords)
        for c in coords:
            if not c.ring.same_free_ring(ring):
                raise RingError("coordinate from a different ring")
        self.ring = ring
        self.coords = tuple(c if c.ring is ring else c.change_ring(ring) for c in coords)

    @classmethod
    def zero(cls, ring: Ring, rank: int) -> "FreeElement":
        return cls(ring, [ring.zero()] * rank)

    @classmethod
    def unit(cls, ring: Ring, rank: int, i: int) -> "FreeElement":
        return cls(ring, [ring.one() if j == i else ring.zero() for j in range(rank)])

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def _check(self, other: "FreeElement"):
        if len(other.coords) != len(self.coords):
            raise RingError("free-module rank mismatch")

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._check(other)
        return FreeElement(self.ring, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        self._check(other)
        return FreeElement(self.ring, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FreeElement(self.ring, [-a for a in self.coords])

    def __mul__(self, scalar) -> "FreeElement":
        return FreeElement(self.ring, [a * scalar for a in self.coords])

    __rmul__ = __mul__

    def dot(self, other: "FreeElement") -> Polynomial:
        self._check(other)
        total = self.ring.zero()
        for a, b in zip(self.coords, other.coords):
            if a and b:
                total = total + a * b
        return total

    def change_ring(self, ring: Ring) -> "FreeElement":
        return FreeElement(ring, [c.change_ring(ring) for c in self.coords])

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"

    __repr__ = __str__


class PolyMatrix:
    """A rectangular matrix of polynomials; ``nrows``/``ncols`` are explicit so empty shapes survive."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring: Ring, rows: Iterable[Iterable], nrows: int | None = None,
                 ncols: int | None = None):
        rows = [tuple(c if isinstance(c, Polynomial) else ring(c) for c in r) for r in rows]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows:
            if rows or ncols:
                raise RingError("row count mismatch")
            rows = [()] * nrows
        for r in rows:
            if len(r) != ncols:
                raise RingError("matrix is not rectangular")
        self.ring = ring
        self.rows = tuple(tuple(c if c.ring is ring else c.change_ring(ring) for c in r) for r in rows)
        self.nrows = nrows
        self.ncols = ncols

    @classmethod
    def from_columns(cls, ring: Ring, columns: Sequence, nrows: int) -> "PolyMatrix":
        cols = [tuple(c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise RingError("column length mismatch")
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(ring, rows, nrows, len(cols))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "PolyMatrix":
        return cls(ring, [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)], n, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> FreeElement:
        return FreeElement(self.ring, [r[j] for r in self.rows])

    def columns(self) -> list[FreeElement]:
        return [self.column(j) for j in range(self.ncols)]

    def row(self, i: int) -> FreeElement:
        return FreeElement(self.ring, self.rows[i])

    def row_vectors(self) -> list[FreeElement]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                          self.ncols, self.nrows)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise RingError("matrix shapes do not match")
        z = self.ring.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out, self.nrows, other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.nrows != other.nrows:
            raise RingError("row count mismatch")
        return PolyMatrix(self.ring, [a + b for a, b in zip(self.rows, other.rows)], self.nrows,
                          self.ncols + other.ncols)

    def is_zero(self) -> bool:
        return all(c.is_zero() for r in self.rows for c in r)

    def change_ring(self, ring: Ring) -> "PolyMatrix":
        return PolyMatrix(ring, [[c.change_ring(ring) for c in r] for r in self.rows], self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def to_lists(self) -> list[list[str]]:
        return [[str(c) for c in r] for r in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(c) for c in r) + "]" for r in self.rows) + "]"

    __repr__ = __str__
