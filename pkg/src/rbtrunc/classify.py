"""Parametrizations of weight-0 and weight-1 Rota-Baxter operators on R.

Weight 0:  P = [[0, 0], [v0, L]]  with  L^2 = 0  and  L v0 = 0.
Weight 1:  P = [[alpha, 0], [0, -Q]]  with  alpha in {0, -1}  and  Q^2 = Q.
Any nonzero weight lam reduces to weight 1 through P -> P / lam.

The deciders read these shapes off the matrix; they never call ``rb_check``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from . import linalg
from .algebra import AlgebraSpec
from .fields import FieldElement, FieldSpec
from .operators import LinearOperator, op_scale


class Reason(str, Enum):
    """Why a decider rejected an operator, in checking priority order."""

    NONZERO_FIRST_ROW = "nonzero-first-row"
    L_SQUARED_NONZERO = "L-squared-nonzero"
    LV0_NONZERO = "Lv0-nonzero"
    ALPHA_NOT_ALLOWED = "alpha-not-in-{0,-1}"
    OFF_DIAGONAL_BLOCK_NONZERO = "off-diagonal-block-nonzero"
    Q_NOT_IDEMPOTENT = "Q-not-idempotent"

    def __str__(self) -> str:
        return self.value


class InvalidDataError(ValueError):
    def __init__(self, reason: Reason, message: str = ""):
        self.reason = reason
        super().__init__(f"{reason.value}: {message}" if message else reason.value)


@dataclass(frozen=True)
class NotRB:
    reason: Reason

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Weight0Data:
    field: FieldSpec
    v0: linalg.Vector
    L: linalg.Matrix

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "v0", linalg.as_vector(F, self.v0))
        object.__setattr__(self, "L", linalg.as_matrix(F, self.L))
        n = len(self.v0)
        if linalg.shape(self.L) != (n, n):
            raise ValueError(f"L must be {n}x{n} to match v0")

    @property
    def n(self) -> int:
        return len(self.v0)

    def violation(self):
        F = self.field
        if not linalg.is_zero_matrix(linalg.matmul(F, self.L, self.L)):
            return Reason.L_SQUARED_NONZERO
        if not linalg.is_zero_vector(linalg.matvec(F, self.L, self.v0)):
            return Reason.LV0_NONZERO
        return None


@dataclass(frozen=True)
class Weight1Data:
    field: FieldSpec
    alpha: object
    Q: linalg.Matrix

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "alpha", F.coerce(self.alpha))
        object.__setattr__(self, "Q", linalg.as_matrix(F, self.Q))
        n = len(self.Q)
        if linalg.shape(self.Q) != (n, n):
            raise ValueError("Q must be square")

    @property
    def n(self) -> int:
        return len(self.Q)

    @property
    def alpha_element(self) -> FieldElement:
        return FieldElement(self.field, self.alpha)

    def violation(self):
        F = self.field
        if self.alpha not in (F.zero, F.minus_one):
            return Reason.ALPHA_NOT_ALLOWED
        if linalg.matmul(F, self.Q, self.Q) != self.Q:
            return Reason.Q_NOT_IDEMPOTENT
        return None


Weight0Verdict = Union[Weight0Data, NotRB]
Weight1Verdict = Union[Weight1Data, NotRB]


def _check_spec(spec: AlgebraSpec, field: FieldSpec, n: int):
    if spec.field != field:
        raise ValueError(f"data over {field!r} but algebra over {spec.field!r}")
    if spec.n != n:
        raise ValueError(f"data has n={n} but algebra has n={spec.n}")


def construct_weight0(d: Weight0Data, spec: AlgebraSpec | None = None) -> LinearOperator:
    spec = spec or AlgebraSpec(d.n, d.field)
    _check_spec(spec, d.field, d.n)
    bad = d.violation()
    if bad is not None:
        raise InvalidDataError(bad)
    F = d.field
    rows = [(F.zero,) * spec.dim]
    rows += [(d.v0[i],) + d.L[i] for i in range(d.n)]
    return LinearOperator(spec, tuple(rows))


def construct_weight1(d: Weight1Data, spec: AlgebraSpec | None = None) -> LinearOperator:
    spec = spec or AlgebraSpec(d.n, d.field)
    _check_spec(spec, d.field, d.n)
    bad = d.violation()
    if bad is not None:
        raise InvalidDataError(bad)
    F = d.field
    rows = [(d.alpha,) + (F.zero,) * d.n]
    rows += [(F.zero,) + tuple(F.neg(q) for q in d.Q[i]) for i in range(d.n)]
    return LinearOperator(spec, tuple(rows))


def _weight0_raw(F: FieldSpec, M):
    """Reason code or None for a raw square matrix (shared with the enumerator)."""
    if any(a != 0 for a in M[0]):
        return Reason.NONZERO_FIRST_ROW
    d = len(M)
    L = [row[1:] for row in M[1:]]
    for i in range(d - 1):
        for j in range(d - 1):
            if F.reduce(sum(L[i][k] * L[k][j] for k in range(d - 1))) != 0:
                return Reason.L_SQUARED_NONZERO
    for i in range(d - 1):
        if F.reduce(sum(L[i][k] * M[k + 1][0] for k in range(d - 1))) != 0:
            return Reason.LV0_NONZERO
    return None


def _weight1_raw(F: FieldSpec, M):
    alpha = M[0][0]
    if alpha != F.zero and alpha != F.minus_one:
        return Reason.ALPHA_NOT_ALLOWED
    d = len(M)
    if any(M[0][k] != 0 for k in range(1, d)) or any(M[k][0] != 0 for k in range(1, d)):
        return Reason.OFF_DIAGONAL_BLOCK_NONZERO
    # Q = -L, and Q^2 = Q  <=>  L^2 + L = 0
    for i in range(1, d):
        for j in range(1, d):
            if F.reduce(sum(M[i][k] * M[k][j] for k in range(1, d)) + M[i][j]) != 0:
                return Reason.Q_NOT_IDEMPOTENT
    return None


def classify_weight0(P: LinearOperator) -> Weight0Verdict:
    """(v0, L) if P is a weight-0 Rota-Baxter operator, else NotRB."""
    F = P.field
    bad = _weight0_raw(F, P.matrix)
    if bad is not None:
        return NotRB(bad)
    M = P.matrix
    return Weight0Data(F, tuple(row[0] for row in M[1:]), tuple(row[1:] for row in M[1:]))


def classify_weight1(P: LinearOperator) -> Weight1Verdict:
    """(alpha, Q) if P is a weight-1 Rota-Baxter operator, else NotRB."""
    F = P.field
    bad = _weight1_raw(F, P.matrix)
    if bad is not None:
        return NotRB(bad)
    M = P.matrix
    Q = tuple(tuple(F.neg(a) for a in row[1:]) for row in M[1:])
    return Weight1Data(F, M[0][0], Q)


def rescale_to_weight1(P: LinearOperator, lam) -> LinearOperator:
    F = P.field
    lam = F.coerce(lam)
    if lam == 0:
        raise ValueError("weight must be nonzero to rescale; use classify_weight0 for weight 0")
    return op_scale(F.inv(lam), P)


def classify_weight_lambda(P: LinearOperator, lam) -> Weight1Verdict:
    """Classification at a nonzero weight via the weight-1 parametrization of P / lam."""
    return classify_weight1(rescale_to_weight1(P, lam))


def classify(P: LinearOperator, lam) -> Union[Weight0Data, Weight1Data, NotRB]:
    """Dispatch on the weight: 0 goes to the weight-0 decider, anything else is rescaled."""
    if P.field.coerce(lam) == 0:
        return classify_weight0(P)
    return classify_weight_lambda(P, lam)


def construct(d: Union[Weight0Data, Weight1Data], lam=None, spec: AlgebraSpec | None = None) -> LinearOperator:
    """Inverse of :func:`classify`; weight-1 data is scaled back up by ``lam`` when given."""
    if isinstance(d, Weight0Data):
        return construct_weight0(d, spec)
    P = construct_weight1(d, spec)
    if lam is None:
        return P
    return op_scale(lam, P)
