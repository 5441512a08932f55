"""Exhaustive enumeration of all linear maps on R over a small prime field.

For every (n+1)x(n+1) matrix the raw identity check and the shape predicate
are evaluated independently and any disagreement is recorded.  Matrices are
visited in mixed-radix order: row-major entries read as base-p digits, the last
entry least significant, so matrix index k decodes uniquely.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .classify import _weight0_raw, _weight1_raw
from .fields import FieldSpec, PrimeField, Raw, parse_field
from .operators import _failing_pair

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "RB_ENUM_BUDGET"


class EnumerationBudgetError(RuntimeError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} matrix checks but the budget is {budget}; "
            f"raise it with {BUDGET_ENV}=<count>"
        )


@dataclass(frozen=True)
class Mismatch:
    index: int
    matrix: tuple
    rb: bool
    classified: bool


@dataclass
class EnumerationReport:
    field: PrimeField
    n: int
    weight: Raw
    total_maps: int
    rb_count: int = 0
    classified_count: int = 0
    mismatches: list = field(default_factory=list)
    mismatch_count: int = 0
    # weight != 0 only: number of classified maps with P(1)/lam = 0 and = -1
    families: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0


def resolve_budget(budget: Optional[int] = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    if env is None or not env.strip():
        return DEFAULT_BUDGET
    try:
        return int(env.strip())
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be a decimal integer, got {env!r}") from None


def decode_index(p: int, n: int, index: int) -> tuple:
    d = n + 1
    digits = []
    for _ in range(d * d):
        index, r = divmod(index, p)
        digits.append(r)
    digits.reverse()
    return tuple(tuple(digits[i * d:(i + 1) * d]) for i in range(d))


def _scan(p: int, n: int, lam: int, prefix: tuple, record: bool):
    """Counts over all matrices whose leading entries equal ``prefix``."""
    F = PrimeField(p)
    d = n + 1
    m = d * d
    rest = m - len(prefix)
    base = 0
    for digit in prefix:
        base = base * p + digit
    base *= p**rest
    lam_inv = F.inv(lam) if lam else None
    zero, minus_one = F.zero, F.minus_one
    rb_count = classified_count = mismatch_count = 0
    fam_zero = fam_minus_one = 0
    mismatches = []
    for offset, tail in enumerate(itertools.product(range(p), repeat=rest)):
        entries = prefix + tail
        M = [entries[i * d:(i + 1) * d] for i in range(d)]
        rb = _failing_pair(F, M, lam) is None
        if lam == 0:
            classified = _weight0_raw(F, M) is None
        else:
            S = M if lam == 1 else [tuple(x * lam_inv % p for x in row) for row in M]
            classified = _weight1_raw(F, S) is None
            if classified:
                if S[0][0] == zero:
                    fam_zero += 1
                elif S[0][0] == minus_one:
                    fam_minus_one += 1
        rb_count += rb
        classified_count += classified
        if rb != classified:
            mismatch_count += 1
            if record:
                mismatches.append(Mismatch(base + offset, tuple(M), rb, classified))
    return rb_count, classified_count, mismatch_count, mismatches, fam_zero, fam_minus_one


def enumerate_rb(
    field: FieldSpec | int,
    n: int,
    weight=0,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
    record_mismatches: bool = True,
) -> EnumerationReport:
    """Check every linear map on R over F_p against both routes.

    ``workers > 1`` splits the index range by leading entries across processes;
    the merged report does not depend on the worker count.
    """
    F = parse_field(field)
    if not isinstance(F, PrimeField):
        raise ValueError("enumeration needs a prime field")
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = F.coerce(weight)
    p = F.p
    m = (n + 1) ** 2
    total = p**m
    limit = resolve_budget(budget)
    if total > limit:
        raise EnumerationBudgetError(total, limit)

    # enough prefix digits to give every worker several chunks
    k = 0
    while workers > 1 and k < m and p**k < 4 * workers:
        k += 1
    prefixes = list(itertools.product(range(p), repeat=k))
    args = [(p, n, lam, pre, record_mismatches) for pre in prefixes]
    if workers > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan, *zip(*args)))
    else:
        parts = [_scan(*a) for a in args]

    report = EnumerationReport(F, n, lam, total)
    fam = [0, 0]
    for rb, cl, mc, mm, f0, f1 in parts:
        report.rb_count += rb
        report.classified_count += cl
        report.mismatch_count += mc
        report.mismatches.extend(mm)
        fam[0] += f0
        fam[1] += f1
    report.mismatches.sort(key=lambda x: x.index)
    if lam != 0:
        report.families = {0: fam[0], -1: fam[1]}
    return report


def count_idempotents(field: FieldSpec | int, n: int, *, budget: Optional[int] = None) -> int:
    """Number of n x n matrices Q over F_p with Q^2 = Q, by brute force."""
    F = parse_field(field)
    p = F.p
    total = p ** (n * n)
    limit = resolve_budget(budget)
    if total > limit:
        raise EnumerationBudgetError(total, limit)
    count = 0
    for entries in itertools.product(range(p), repeat=n * n):
        Q = [entries[i * n:(i + 1) * n] for i in range(n)]
        if all(
            sum(Q[i][k] * Q[k][j] for k in range(n)) % p == Q[i][j]
            for i in range(n)
            for j in range(n)
        ):
            count += 1
    return count


def count_square_zero_pairs(field: FieldSpec | int, n: int, *, budget: Optional[int] = None) -> int:
    """Number of pairs (v0, L) over F_p with L^2 = 0 and L v0 = 0, by brute force."""
    F = parse_field(field)
    p = F.p
    total = p ** (n * n + n)
    limit = resolve_budget(budget)
    if total > limit:
        raise EnumerationBudgetError(total, limit)
    count = 0
    for entries in itertools.product(range(p), repeat=n * n):
        L = [entries[i * n:(i + 1) * n] for i in range(n)]
        if any(sum(L[i][k] * L[k][j] for k in range(n)) % p for i in range(n) for j in range(n)):
            continue
        for v in itertools.product(range(p), repeat=n):
            if not any(sum(L[i][k] * v[k] for k in range(n)) % p for i in range(n)):
                count += 1
    return count
