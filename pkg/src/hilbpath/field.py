"""Exact coefficient domains: prime fields, the rationals and the integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

PRIME = "prime"
RATIONAL = "rational"
INTEGER = "integer"

_MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient domain of a polynomial ring.

    Prime field elements are ints in ``[0, p)``, rationals are ``Fraction``
    and integers are plain ``int``.  The integer kind is only a ring; its
    ``div`` is exact division and raises when the quotient is not integral.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"not a prime: {self.p}")
            if self.p >= _MAX_PRIME:
                raise ValueError("prime fields are limited to p < 2^31")
        elif self.kind in (RATIONAL, INTEGER):
            if self.p is not None:
                raise ValueError(f"{self.kind} domain takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(PRIME, p)

    @classmethod
    def qq(cls) -> FieldSpec:
        return cls(RATIONAL)

    @classmethod
    def zz(cls) -> FieldSpec:
        return cls(INTEGER)

    @classmethod
    def from_char(cls, char: int) -> FieldSpec:
        return cls.qq() if char == 0 else cls.gf(char)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGER

    def __str__(self):
        if self.kind == PRIME:
            return f"GF({self.p})"
        return "QQ" if self.kind == RATIONAL else "ZZ"

    def __call__(self, c):
        """Coerce an int or Fraction into this domain."""
        if self.kind == PRIME:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        if self.kind == RATIONAL:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return c.numerator
        return int(c)

    def inv(self, c):
        if self.kind == PRIME:
            if c % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(c, -1, self.p)
        if self.kind == RATIONAL:
            return 1 / Fraction(c)
        if c in (1, -1):
            return c
        raise ZeroDivisionError(f"{c} is not a unit in ZZ")

    def div(self, a, b):
        if self.kind == INTEGER:
            q, r = divmod(a, b)
            if r:
                raise ArithmeticError(f"{a} is not divisible by {b}")
            return q
        return self(a * self.inv(b))

    def normalize(self, c):
        return c % self.p if self.kind == PRIME else c
