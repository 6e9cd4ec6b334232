"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Scalars are plain Python values: `fractions.Fraction` over the rationals
(always normalized: lowest terms, positive denominator) and `int` residues
in [0, p) over GF(p).  A `FieldSpec` carries the operations; values from
different field specs must never be mixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import FieldMismatchError

Scalar = Union[Fraction, int]

RATIONALS = "rationals"
PRIME = "gf"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _inv_mod(a: int, p: int) -> int:
    """Inverse of a mod p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(%d)" % p)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@dataclass(frozen=True)
class FieldSpec:
    """An exact base field: the rationals, or GF(p) for a prime p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("rationals take no modulus")
        elif self.kind == PRIME:
            if self.p is None or not is_prime(self.p):
                raise ValueError("composite or missing modulus: %r" % (self.p,))
        else:
            raise ValueError("unknown field kind %r" % (self.kind,))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(RATIONALS)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(PRIME, p)

    # -- basic queries -----------------------------------------------------

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.p  # type: ignore[return-value]

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    def __repr__(self):
        return "QQ" if self.kind == RATIONALS else "GF(%d)" % self.p

    # -- element construction ---------------------------------------------

    def of(self, x) -> Scalar:
        """Coerce an int, Fraction, or scalar string into this field."""
        if self.kind == RATIONALS:
            if isinstance(x, bool):
                raise TypeError("bool is not a scalar")
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise TypeError("cannot coerce %r into QQ" % (x,))
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return int(x, 10) % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return (x.numerator * _inv_mod(x.denominator, self.p)) % self.p
        raise TypeError("cannot coerce %r into GF(%d)" % (x, self.p))

    __call__ = of

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.kind == RATIONALS else 1

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.kind == RATIONALS else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.kind == RATIONALS else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.kind == RATIONALS else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.kind == RATIONALS else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.kind == RATIONALS:
            if a == 0:
                raise ZeroDivisionError("inverse of zero in QQ")
            return Fraction(1) / a
        return _inv_mod(a, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def is_square(self, a: Scalar) -> bool:
        """Exact squareness test (used for quadratic irreducibility over QQ)."""
        if self.kind == PRIME:
            return any((s * s) % self.p == a % self.p for s in range(self.p))
        if a < 0:
            return False
        num, den = a.numerator, a.denominator
        import math

        return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den

    # -- enumeration (prime fields only) ------------------------------------

    def elements(self) -> Iterator[Scalar]:
        if self.kind != PRIME:
            raise ValueError("cannot enumerate the rationals")
        return iter(range(self.p))

    # -- formatting ----------------------------------------------------------

    def format(self, a: Scalar) -> str:
        if self.kind == PRIME:
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)


def check_same_field(f1: FieldSpec, f2: FieldSpec) -> None:
    if f1 != f2:
        raise FieldMismatchError("field mismatch: %r vs %r" % (f1, f2))
