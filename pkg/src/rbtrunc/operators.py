"""Linear maps on R as (n+1)x(n+1) matrices, and the Rota-Baxter identity check.

Column j of the matrix holds the coordinates of P(e_j), where
(e_0, e_1, ..., e_n) = (1, x_1, ..., x_n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import linalg
from .algebra import AlgebraMismatchError, AlgebraSpec, TruncElement, alg_add, alg_mul, scalar_mul
from .fields import FieldSpec, RationalField, Raw


@dataclass(frozen=True)
class LinearOperator:
    spec: AlgebraSpec
    matrix: linalg.Matrix

    def __post_init__(self):
        d = self.spec.dim
        if len(self.matrix) != d or any(len(row) != d for row in self.matrix):
            raise ValueError(f"operator matrix must be {d}x{d}")
        F = self.spec.field
        object.__setattr__(self, "matrix", linalg.as_matrix(F, self.matrix))

    @classmethod
    def from_rows(cls, spec: AlgebraSpec, rows: Sequence[Sequence]) -> "LinearOperator":
        return cls(spec, linalg.as_matrix(spec.field, rows))

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> "LinearOperator":
        return cls(spec, linalg.zeros(spec.field, spec.dim))

    @classmethod
    def identity(cls, spec: AlgebraSpec) -> "LinearOperator":
        return cls(spec, linalg.identity(spec.field, spec.dim))

    @property
    def field(self) -> FieldSpec:
        return self.spec.field

    def column(self, j: int) -> TruncElement:
        return self.spec.from_coords([row[j] for row in self.matrix])

    def __call__(self, x: TruncElement) -> TruncElement:
        return apply(self, x)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return compose(self, other)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return op_add(self, other)

    def __neg__(self) -> "LinearOperator":
        return op_scale(self.field.minus_one, self)

    def __rmul__(self, c) -> "LinearOperator":
        return op_scale(c, self)

    def __str__(self) -> str:
        F = self.field
        cells = [[str(F.format(a)) for a in row] for row in self.matrix]
        w = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(w) for c in row) + "]" for row in cells)


def _same(P: LinearOperator, Q: LinearOperator) -> AlgebraSpec:
    if P.spec != Q.spec:
        raise AlgebraMismatchError(f"{P.spec} vs {Q.spec}")
    return P.spec


def apply(P: LinearOperator, x: TruncElement) -> TruncElement:
    if P.spec != x.spec:
        raise AlgebraMismatchError(f"{P.spec} vs {x.spec}")
    return P.spec.from_coords(linalg.matvec(P.field, P.matrix, x.coords))


def compose(P: LinearOperator, Q: LinearOperator) -> LinearOperator:
    """P after Q, i.e. the matrix product P*Q."""
    spec = _same(P, Q)
    return LinearOperator(spec, linalg.matmul(spec.field, P.matrix, Q.matrix))


def op_add(P: LinearOperator, Q: LinearOperator) -> LinearOperator:
    spec = _same(P, Q)
    return LinearOperator(spec, linalg.matadd(spec.field, P.matrix, Q.matrix))


def op_scale(c, P: LinearOperator) -> LinearOperator:
    F = P.field
    return LinearOperator(P.spec, linalg.matscale(F, F.coerce(c), P.matrix))


@dataclass(frozen=True)
class RBWitness:
    """A basis pair (i, j) where P(e_i)P(e_j) != P(e_i P(e_j) + P(e_i) e_j + lam e_i e_j)."""

    pair: Tuple[int, int]
    lhs: TruncElement
    rhs: TruncElement


@dataclass(frozen=True)
class RBCheck:
    holds: bool
    witness: Optional[RBWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def _pair_sides(M, cols, i: int, j: int, lam_num, lam_den):
    """lam_den * (both sides of the identity at (e_i, e_j)), unreduced, with lam = lam_num / lam_den."""
    d = len(M)
    ci, cj = cols[i], cols[j]
    # lhs = P(e_i) * P(e_j) in R
    a, b = ci[0], cj[0]
    lhs = [lam_den * a * b] + [lam_den * (a * cj[k] + b * ci[k]) for k in range(1, d)]
    # arg = e_i P(e_j) + P(e_i) e_j + lam e_i e_j, scaled by lam_den
    arg = [0] * d
    if i == 0:
        for k in range(d):
            arg[k] += lam_den * cj[k]
    else:
        arg[i] += lam_den * b
    if j == 0:
        for k in range(d):
            arg[k] += lam_den * ci[k]
    else:
        arg[j] += lam_den * a
    if i == 0:
        arg[j] += lam_num
    elif j == 0:
        arg[i] += lam_num
    rhs = [sum(M[r][k] * arg[k] for k in range(d)) for r in range(d)]
    return lhs, rhs


def _failing_pair(F: FieldSpec, M, lam: Raw):
    """First (i, j, lhs, rhs) in row-major order violating the identity, or None.

    ``M`` is a square sequence of rows of raw values.  Over the rationals the
    search runs on the integer matrix D*M (D the common denominator), where the
    identity scaled by D^2 reads the same with weight lam*D; the witness is then
    recomputed exactly for the failing pair.
    """
    d = len(M)
    if isinstance(F, RationalField):
        D = 1
        for row in M:
            for a in row:
                D = math.lcm(D, Fraction(a).denominator)
        work = [[int(Fraction(a) * D) for a in row] for row in M]
        w = Fraction(lam) * D
        lam_num, lam_den = w.numerator, w.denominator
    else:
        work, lam_num, lam_den = M, lam, 1
    cols = [tuple(work[r][c] for r in range(d)) for c in range(d)]
    for i in range(d):
        for j in range(d):
            lhs, rhs = _pair_sides(work, cols, i, j, lam_num, lam_den)
            if any(F.reduce(u - v) != 0 for u, v in zip(lhs, rhs)):
                exact_cols = [tuple(M[r][c] for r in range(d)) for c in range(d)]
                lhs, rhs = _pair_sides(M, exact_cols, i, j, lam, 1)
                return i, j, [F.reduce(u) for u in lhs], [F.reduce(v) for v in rhs]
    return None


def rb_check(P: LinearOperator, lam) -> RBCheck:
    """Check P(x)P(y) = P(xP(y) + P(x)y + lam*xy) on every ordered basis pair.

    Both sides are bilinear in (x, y), so the basis pairs decide the identity on
    all of R x R.  On failure the witness is the first failing pair with i as the
    outer index.
    """
    F = P.field
    found = _failing_pair(F, P.matrix, F.coerce(lam))
    if found is None:
        return RBCheck(True)
    i, j, lhs, rhs = found
    return RBCheck(False, RBWitness((i, j), P.spec.from_coords(lhs), P.spec.from_coords(rhs)))


def is_rb(P: LinearOperator, lam) -> bool:
    return rb_check(P, lam).holds


def rb_sides(P: LinearOperator, lam, x: TruncElement, y: TruncElement) -> Tuple[TruncElement, TruncElement]:
    """Both sides of the identity evaluated directly at (x, y)."""
    F = P.field
    lam = F.coerce(lam)
    lhs = alg_mul(apply(P, x), apply(P, y))
    arg = alg_add(alg_add(alg_mul(x, apply(P, y)), alg_mul(apply(P, x), y)), scalar_mul(lam, alg_mul(x, y)))
    return lhs, apply(P, arg)
