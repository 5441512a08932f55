"""Exact scalar fields: the rationals and odd prime fields.

A field object knows how to canonicalize, combine and print raw values
(``Fraction`` for the rationals, ``int`` in ``[0, p)`` for F_p).  Matrices and
algebra elements elsewhere in the package store raw canonical values and go
through the field for arithmetic; :class:`FieldElement` is the tagged scalar
used at API boundaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "FieldSpec",
    "RationalField",
    "PrimeField",
    "QQ",
    "FieldElement",
    "FieldMismatchError",
    "add",
    "mul",
    "neg",
    "inv",
    "is_prime",
    "parse_field",
]

Raw = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class FieldMismatchError(ValueError):
    """Operands live in different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldSpec:
    """Common interface of the two supported fields."""

    def reduce(self, x) -> Raw:
        raise NotImplementedError

    @property
    def zero(self) -> Raw:
        return self.reduce(0)

    @property
    def one(self) -> Raw:
        return self.reduce(1)

    @property
    def minus_one(self) -> Raw:
        return self.reduce(-1)

    def add(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a + b)

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a - b)

    def mul(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a * b)

    def neg(self, a: Raw) -> Raw:
        return self.reduce(-a)

    def inv(self, a: Raw) -> Raw:
        raise NotImplementedError

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    def coerce(self, x) -> Raw:
        """Canonical raw value of an int, Fraction, FieldElement or scalar string."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"{x!r} does not belong to {self!r}")
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not field scalars")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            return self.reduce(x)
        if isinstance(x, Fraction):
            return self.div(self.reduce(x.numerator), self.reduce(x.denominator))
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")

    def parse(self, text: str) -> Raw:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ValueError(f"malformed scalar {text!r}; expected an integer or 'a/b'")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.reduce(num)
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"malformed scalar {text!r}: zero denominator")
        return self.div(self.reduce(num), self.reduce(den))

    def format(self, a: Raw) -> Union[int, str]:
        """JSON-ready form: plain int when integral, otherwise an 'a/b' string."""
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


@dataclass(frozen=True)
class RationalField(FieldSpec):
    def __repr__(self) -> str:
        return "QQ"

    def reduce(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, a: Raw) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def format(self, a: Raw) -> Union[int, str]:
        a = Fraction(a)
        if a.denominator == 1:
            return a.numerator
        return f"{a.numerator}/{a.denominator}"

    def to_json(self):
        return "rational"


@dataclass(frozen=True)
class PrimeField(FieldSpec):
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError("characteristic must be an int")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported (the classification divides by 2)")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def reduce(self, x) -> int:
        return x % self.p

    def inv(self, a: Raw) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def format(self, a: Raw) -> int:
        return a % self.p

    def to_json(self):
        return {"prime": self.p}


QQ = RationalField()


def parse_field(obj) -> FieldSpec:
    """Field from its JSON form ("rational" or {"prime": p}) or a CLI string.

    CLI strings accepted: "rational", "Q", "QQ", "7", "prime:7", "GF7", "F7".
    """
    if isinstance(obj, FieldSpec):
        return obj
    if isinstance(obj, dict):
        if set(obj) != {"prime"}:
            raise ValueError(f"field object must be {{'prime': p}}, got {obj!r}")
        p = obj["prime"]
        if isinstance(p, str) and p.strip().isdigit():
            p = int(p)
        return PrimeField(p)
    if isinstance(obj, bool):
        raise ValueError(f"unrecognized field {obj!r}")
    if isinstance(obj, int):
        return PrimeField(obj)
    if isinstance(obj, str):
        s = obj.strip().lower()
        if s in ("rational", "rationals", "q", "qq"):
            return QQ
        for prefix in ("prime:", "gf", "f_", "f"):
            if s.startswith(prefix) and s[len(prefix):].isdigit():
                return PrimeField(int(s[len(prefix):]))
        if s.isdigit():
            return PrimeField(int(s))
    raise ValueError(f"unrecognized field {obj!r}")


@dataclass(frozen=True)
class FieldElement:
    """An exact scalar tagged with its field; value is always canonical."""

    field: FieldSpec
    value: Raw

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.reduce(self.value))

    def _other(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.field.format(self.value))

    def __repr__(self) -> str:
        return f"FieldElement({self.field!r}, {self})"


def _check_same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    return a.field


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    f = _check_same(a, b)
    return FieldElement(f, f.add(a.value, b.value))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    f = _check_same(a, b)
    return FieldElement(f, f.mul(a.value, b.value))


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
