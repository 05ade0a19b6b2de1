"""Top Chern class parity of the twisted cotangent bundle on projective space."""

from __future__ import annotations

from math import comb

from ..poly import QQ, Ring


def chern_parity(n: int) -> int:
    """Coefficient of ``t^(n-1)`` in ``(1+t)^n / (1+2t)`` computed mod ``t^n``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    ring = Ring(QQ, ("t",))
    t = ring.var("t")
    inverse = ring.zero()
    for k in range(n):
        inverse = inverse + ring.constant((-2) ** k) * t ** k
    series = ((1 + t) ** n * inverse).truncate(n)
    return int(series.coefficient((n - 1,)))


def chern_closed_form(n: int) -> int:
    return sum((-1) ** i * comb(n, n - 1 - i) * 2 ** i for i in range(n))
