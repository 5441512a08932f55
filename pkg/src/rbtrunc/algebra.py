"""The algebra R = K[x_1..x_n]/m^2 = K + V with V*V = 0.

Elements are stored as coordinates in the basis (1, x_1, ..., x_n), unit first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .fields import FieldElement, FieldSpec, Raw, parse_field


class AlgebraMismatchError(ValueError):
    """Operands belong to different truncated algebras."""


@dataclass(frozen=True)
class AlgebraSpec:
    n: int
    field: FieldSpec

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError("n must be an int")
        if self.n < 1:
            raise ValueError(f"need n >= 1 variables, got {self.n}")
        object.__setattr__(self, "field", parse_field(self.field))

    @property
    def dim(self) -> int:
        return self.n + 1

    def element(self, scalar, vec: Sequence) -> "TruncElement":
        F = self.field
        return TruncElement(self, F.coerce(scalar), tuple(F.coerce(b) for b in vec))

    def from_coords(self, coords: Sequence) -> "TruncElement":
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return self.element(coords[0], coords[1:])

    def zero(self) -> "TruncElement":
        return self.from_coords([0] * self.dim)

    def one(self) -> "TruncElement":
        return one(self)

    def basis(self) -> list["TruncElement"]:
        return basis(self)


@dataclass(frozen=True)
class TruncElement:
    """a + sum b_i x_i; ``scalar`` is a, ``vec`` is (b_1, ..., b_n), raw canonical values."""

    spec: AlgebraSpec
    scalar: Raw
    vec: Tuple[Raw, ...]

    def __post_init__(self):
        if len(self.vec) != self.spec.n:
            raise ValueError(f"vector part has length {len(self.vec)}, expected {self.spec.n}")

    @property
    def coords(self) -> Tuple[Raw, ...]:
        return (self.scalar,) + self.vec

    def scalar_part(self) -> FieldElement:
        return FieldElement(self.spec.field, self.scalar)

    def in_V(self) -> bool:
        return self.scalar == 0

    def is_zero(self) -> bool:
        return self.scalar == 0 and all(b == 0 for b in self.vec)

    def __add__(self, other):
        if not isinstance(other, TruncElement):
            return NotImplemented
        return alg_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TruncElement):
            return NotImplemented
        return alg_add(self, -other)

    def __neg__(self):
        return scalar_mul(self.spec.field.minus_one, self)

    def __mul__(self, other):
        if isinstance(other, TruncElement):
            return alg_mul(self, other)
        try:
            c = self.spec.field.coerce(other)
        except TypeError:
            return NotImplemented
        return scalar_mul(c, self)

    def __rmul__(self, other):
        try:
            c = self.spec.field.coerce(other)
        except TypeError:
            return NotImplemented
        return scalar_mul(c, self)

    def __str__(self) -> str:
        F = self.spec.field
        terms = []
        if self.scalar != 0:
            terms.append(str(F.format(self.scalar)))
        for i, b in enumerate(self.vec, 1):
            if b == 0:
                continue
            c = F.format(b)
            terms.append(f"x{i}" if c == 1 else f"{c}*x{i}")
        return " + ".join(terms) if terms else "0"


def _same(x: TruncElement, y: TruncElement) -> AlgebraSpec:
    if x.spec != y.spec:
        raise AlgebraMismatchError(f"{x.spec} vs {y.spec}")
    return x.spec


def alg_mul(x: TruncElement, y: TruncElement) -> TruncElement:
    """(a+u)(b+v) = ab + av + bu; the u*v term vanishes."""
    spec = _same(x, y)
    F = spec.field
    a, b = x.scalar, y.scalar
    vec = tuple(F.reduce(a * v + b * u) for u, v in zip(x.vec, y.vec))
    return TruncElement(spec, F.mul(a, b), vec)


def alg_add(x: TruncElement, y: TruncElement) -> TruncElement:
    spec = _same(x, y)
    F = spec.field
    return TruncElement(spec, F.add(x.scalar, y.scalar), tuple(F.add(u, v) for u, v in zip(x.vec, y.vec)))


def scalar_mul(c, x: TruncElement) -> TruncElement:
    F = x.spec.field
    c = F.coerce(c)
    return TruncElement(x.spec, F.mul(c, x.scalar), tuple(F.mul(c, b) for b in x.vec))


def one(spec: AlgebraSpec) -> TruncElement:
    F = spec.field
    return TruncElement(spec, F.one, (F.zero,) * spec.n)


def basis(spec: AlgebraSpec) -> list[TruncElement]:
    """[1, x_1, ..., x_n]."""
    F = spec.field
    out = [one(spec)]
    for i in range(spec.n):
        vec = tuple(F.one if j == i else F.zero for j in range(spec.n))
        out.append(TruncElement(spec, F.zero, vec))
    return out
