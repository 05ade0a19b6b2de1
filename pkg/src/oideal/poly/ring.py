"""Polynomial rings over exact fields, optionally modulo a (prime) ideal."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import Field
from .order import MonomialOrder


class RingError(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """``field[variables]`` with weights, a term order and optional quotient generators.

    Quotient generators are kept as frozen term tuples of the free ring; the
    arithmetic of :class:`Polynomial` is always free-ring arithmetic, and
    reduction modulo the quotient happens in the Groebner engine only.
    """

    field: Field
    variables: tuple[str, ...]
    weights: tuple[int, ...] = ()
    order: MonomialOrder = dc_field(default_factory=MonomialOrder)
    quotient: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise RingError("duplicate variable name")
        weights = tuple(int(w) for w in self.weights) or (1,) * len(self.variables)
        if len(weights) != len(self.variables):
            raise RingError("need exactly one weight per variable")
        if any(w <= 0 for w in weights):
            raise RingError("weights must be positive")
        object.__setattr__(self, "weights", weights)

    # -- basic data -------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def __str__(self) -> str:
        text = f"{self.field.name}[{','.join(self.variables)}]"
        if any(w != 1 for w in self.weights):
            text += " weights=(" + ",".join(map(str, self.weights)) + ")"
        if self.order != MonomialOrder():
            text += f" order={self.order}"
        if self.quotient:
            text += " mod=(" + ", ".join(str(q) for q in self.quotient_polys()) + ")"
        return text

    # -- element constructors --------------------------------------------
    def poly(self, terms) -> "Polynomial":
        from .polynomial import Polynomial

        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return self.poly({})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return self.poly({(0,) * self.nvars: self.field(c)})

    def gens(self) -> list["Polynomial"]:
        return [self.monomial(_unit(self.nvars, i)) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise RingError(f"unknown variable {name!r}") from None
        return self.monomial(_unit(self.nvars, i))

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        return self.poly({tuple(exp): self.field(coeff)})

    def __call__(self, text) -> "Polynomial":
        if isinstance(text, str):
            from .parse import parse_poly

            return parse_poly(self, text)
        return self.constant(text)

    # -- derived rings ----------------------------------------------------
    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.field, self.variables, self.weights, order, self.quotient)

    def with_weights(self, weights: Sequence[int]) -> "Ring":
        return Ring(self.field, self.variables, tuple(weights), self.order, self.quotient)

    def free(self) -> "Ring":
        """The same ring without quotient generators."""
        if not self.quotient:
            return self
        return Ring(self.field, self.variables, self.weights, self.order, ())

    def with_quotient(self, polys: Iterable["Polynomial"]) -> "Ring":
        frozen = []
        for q in polys:
            if q.is_zero():
                raise RingError("quotient generators must be nonzero")
            frozen.append(tuple(sorted(q.terms.items())))
        return Ring(self.field, self.variables, self.weights, self.order, tuple(frozen))

    def quotient_polys(self) -> list["Polynomial"]:
        free = self.free()
        return [free.poly(dict(t)).change_ring(self) for t in self.quotient]

    def extend(self, names: Sequence[str], weights: Sequence[int] | None = None, *,
               front: bool = False, order: MonomialOrder | None = None) -> "Ring":
        """Adjoin new variables at the front or the back; quotient generators are carried over."""
        names = tuple(names)
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        k = len(names)
        if front:
            variables = names + self.variables
            all_weights = weights + self.weights
            shift = lambda e: (0,) * k + e  # noqa: E731
        else:
            variables = self.variables + names
            all_weights = self.weights + weights
            shift = lambda e: e + (0,) * k  # noqa: E731
        quotient = tuple(tuple((shift(e), c) for e, c in q) for q in self.quotient)
        return Ring(self.field, variables, all_weights, order or self.order, quotient)

    def fresh_names(self, stem: str, count: int) -> list[str]:
        taken = set(self.variables)
        names, i = [], 0
        while len(names) < count:
            name = f"{stem}{i + 1}"
            if name not in taken:
                names.append(name)
            i += 1
        return names

    def same_free_ring(self, other: "Ring") -> bool:
        return (self.field == other.field and self.variables == other.variables)


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))
