"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

import random

import gmpy2
from gmpy2 import mpq

MAX_MODULUS = 2**31


class Field:
    """Common interface; elements are ``mpq`` for QQ and ``int`` in ``[0, p)`` for GF(p)."""

    characteristic: int
    name: str

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, a):
        raise NotImplementedError

    def format(self, c) -> str:
        raise NotImplementedError

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class RationalField(Field):
    characteristic = 0
    name = "QQ"
    box = 10**4

    def __call__(self, value):
        if isinstance(value, str):
            return mpq(value.strip())
        return mpq(value)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(a)

    def format(self, c) -> str:
        c = mpq(c)
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"

    def random_element(self, rng: random.Random):
        return mpq(rng.randint(-self.box, self.box))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if p < 2 or p >= MAX_MODULUS or not gmpy2.is_prime(p):
            raise ValueError(f"modulus {p} is not a prime below 2^31")
        self.characteristic = p
        self.name = f"GF({p})"

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, str):
            value = value.strip()
            if "/" in value:
                num, den = value.split("/")
                return int(num) * pow(int(den), -1, p) % p
            return int(value) % p
        if isinstance(value, type(mpq(0))):
            return int(value.numerator) * pow(int(value.denominator), -1, p) % p
        return int(value) % p

    def inv(self, a):
        a = int(a) % self.characteristic
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def format(self, c) -> str:
        p = self.characteristic
        c = int(c) % p
        # symmetric representative reads better and round-trips
        return str(c - p if c > p // 2 else c)

    def random_element(self, rng: random.Random):
        return rng.randrange(self.characteristic)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
