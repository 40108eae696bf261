"""Exact scalars: the rationals and prime fields of odd characteristic.

Rational values are plain ``fractions.Fraction`` objects. Prime-field values
are ``Residue`` objects. Both support the usual arithmetic operators, so the
linear algebra above this module never branches on the field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch

RATIONALS = "Rationals"
PRIME_FIELD = "PrimeField"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Residue:
    """An element of Z/p for an odd prime p, stored reduced into [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatch(f"F_{self.p} vs Q")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def inverse(self) -> Residue:
        if self.v == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return Residue(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        # builtin three-argument pow is square-and-multiply
        return Residue(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Residue]


@dataclass(frozen=True)
class FieldSpec:
    kind: str = RATIONALS
    p: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p != 0:
                raise ValueError("the rationals carry no modulus")
        elif self.kind == PRIME_FIELD:
            if self.p == 2:
                raise ValueError("characteristic 2 is not supported")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not a prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(PRIME_FIELD, p)

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, Residue or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.is_rational:
            if isinstance(x, Residue):
                raise FieldMismatch(f"F_{x.p} value used over Q")
            return Fraction(x)
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} value used over F_{self.p}")
            return x
        if isinstance(x, Fraction):
            return Residue(x.numerator, self.p) / Residue(x.denominator, self.p)
        return Residue(int(x), self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def contains(self, x) -> bool:
        if self.is_rational:
            return isinstance(x, (Fraction, int)) and not isinstance(x, bool)
        return isinstance(x, Residue) and x.p == self.p

    def parse(self, s: str) -> Scalar:
        s = s.strip()
        if self.is_rational:
            num, _, den = s.partition("/")
            if den and int(den) <= 0:
                raise ValueError(f"bad rational {s!r}")
            return Fraction(int(num), int(den) if den else 1)
        r = int(s)
        if not 0 <= r < self.p:
            raise ValueError(f"residue {s!r} outside [0, {self.p})")
        return Residue(r, self.p)

    def format(self, x) -> str:
        x = self(x)
        if self.is_rational:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(x.v)

    def label(self) -> str:
        return "Q" if self.is_rational else f"F_{self.p}"

    def to_json(self):
        if self.is_rational:
            return {"kind": RATIONALS}
        return {"kind": PRIME_FIELD, "p": self.p}

    @classmethod
    def from_json(cls, data) -> FieldSpec:
        if isinstance(data, str):
            if data in ("Q", RATIONALS):
                return cls.rationals()
            if data.startswith("F_"):
                return cls.prime(int(data[2:]))
            raise ValueError(f"unknown field {data!r}")
        return cls(data["kind"], data.get("p", 0))


def field_of(x) -> FieldSpec:
    if isinstance(x, Residue):
        return FieldSpec.prime(x.p)
    if isinstance(x, Fraction):
        return FieldSpec.rationals()
    raise TypeError(f"not a scalar: {x!r}")


def arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    if field_of(a) != field_of(b):
        raise FieldMismatch(f"{field_of(a).label()} vs {field_of(b).label()}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def power(a: Scalar, n: int) -> Scalar:
    if n < 0 and a == 0:
        raise DivisionByZero("negative power of zero")
    if isinstance(a, Residue):
        return a ** n
    # square-and-multiply, inverting first for negative exponents
    if n < 0:
        a, n = 1 / a, -n
    result = Fraction(1)
    while n:
        if n & 1:
            result *= a
        a *= a
        n >>= 1
    return result


def nth_roots_of_unity_exist(field: FieldSpec, n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    if field.is_rational:
        return n in (1, 2)
    return (field.p - 1) % n == 0


def multiplicative_order(a: Scalar) -> int | None:
    """Order of a nonzero scalar, or None when it has infinite order."""
    if a == 0:
        raise DivisionByZero("zero has no multiplicative order")
    if isinstance(a, Residue):
        k, x = 1, a
        while x != 1:
            x = x * a
            k += 1
        return k
    if a == 1:
        return 1
    if a == -1:
        return 2
    return None
