"""Seeded random generation of square-zero matrices, idempotents and kernel vectors.

Every generator draws from a ``random.Random`` seeded by :class:`GenConfig`, so
the same config always yields the same matrices.  Composite generators thread a
single stream through their parts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .classify import Weight0Data, Weight1Data
from .fields import QQ, FieldSpec, PrimeField, Raw

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    entry_bound: int = 10

    def __post_init__(self):
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.entry_bound < 1:
            raise ValueError("entry_bound must be positive")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _stream(config: GenConfig, rng: random.Random | None) -> random.Random:
    return rng if rng is not None else config.rng()


def random_scalar(F: FieldSpec, config: GenConfig, rng: random.Random) -> Raw:
    """Uniform residue over F_p; over Q a fraction with |num|, den <= entry_bound."""
    if isinstance(F, PrimeField):
        return rng.randrange(F.p)
    b = config.entry_bound
    return Fraction(rng.randint(-b, b), rng.randint(1, b))


def random_invertible(n: int, config: GenConfig, field: FieldSpec = QQ, rng=None) -> linalg.Matrix:
    """Random S with det(S) != 0.

    F_p: uniform matrices by rejection.  Q: (unit lower) * (unit upper), so det = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _stream(config, rng)
    F = field
    if isinstance(F, PrimeField):
        while True:
            S = tuple(tuple(rng.randrange(F.p) for _ in range(n)) for _ in range(n))
            if linalg.det(F, S) != 0:
                return S
    lower = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    upper = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = random_scalar(F, config, rng)
            upper[j][i] = random_scalar(F, config, rng)
    return linalg.matmul(F, linalg.as_matrix(F, lower), linalg.as_matrix(F, upper))


def _conjugate(F: FieldSpec, S: linalg.Matrix, N: linalg.Matrix) -> linalg.Matrix:
    return linalg.matmul(F, linalg.matmul(F, S, N), linalg.inverse(F, S))


def random_square_zero(n: int, r: int, config: GenConfig, field: FieldSpec = QQ, rng=None) -> linalg.Matrix:
    """S N_r S^-1 where N_r has ones at (i, r+i) for i < r; square-zero of rank r."""
    if not 0 <= r <= n // 2:
        raise ValueError(f"a square-zero {n}x{n} matrix has rank at most {n // 2}, asked for {r}")
    rng = _stream(config, rng)
    F = field
    N = [[F.zero] * n for _ in range(n)]
    for i in range(r):
        N[i][r + i] = F.one
    S = random_invertible(n, config, F, rng)
    return _conjugate(F, S, linalg.as_matrix(F, N))


def random_idempotent(n: int, r: int, config: GenConfig, field: FieldSpec = QQ, rng=None) -> linalg.Matrix:
    """S diag(I_r, 0) S^-1; idempotent of rank r."""
    if not 0 <= r <= n:
        raise ValueError(f"rank of an {n}x{n} idempotent is at most {n}, asked for {r}")
    rng = _stream(config, rng)
    F = field
    D = linalg.diag(F, [1] * r + [0] * (n - r))
    S = random_invertible(n, config, F, rng)
    return _conjugate(F, S, D)


def random_kernel_vector(L: linalg.Matrix, config: GenConfig, field: FieldSpec = QQ, rng=None) -> linalg.Vector:
    """Random combination of a kernel basis of L; the zero vector if ker L = 0."""
    rng = _stream(config, rng)
    F = field
    n = len(L)
    v = [F.zero] * n
    for b in linalg.kernel_basis(F, L):
        c = random_scalar(F, config, rng)
        v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
    return tuple(v)


def random_weight0_data(n: int, r: int, config: GenConfig, field: FieldSpec = QQ, rng=None) -> Weight0Data:
    rng = _stream(config, rng)
    L = random_square_zero(n, r, config, field, rng)
    v0 = random_kernel_vector(L, config, field, rng)
    return Weight0Data(field, v0, L)


def random_weight1_data(n: int, r: int, config: GenConfig, field: FieldSpec = QQ, alpha=None, rng=None) -> Weight1Data:
    """alpha defaults to a random choice from {0, -1}."""
    rng = _stream(config, rng)
    Q = random_idempotent(n, r, config, field, rng)
    if alpha is None:
        alpha = rng.choice((0, -1))
    return Weight1Data(field, alpha, Q)
