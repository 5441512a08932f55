"""Dense exact matrix helpers over a :class:`~rbtrunc.fields.FieldSpec`.

Matrices are tuples of row tuples holding raw canonical field values;
vectors are plain tuples.  Every function takes the field first.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .fields import FieldSpec, Raw

Matrix = Tuple[Tuple[Raw, ...], ...]
Vector = Tuple[Raw, ...]


def as_matrix(F: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(F.coerce(x) for x in row) for row in rows)


def as_vector(F: FieldSpec, entries: Sequence) -> Vector:
    return tuple(F.coerce(x) for x in entries)


def zeros(F: FieldSpec, rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    z = F.zero
    return tuple((z,) * cols for _ in range(rows))


def identity(F: FieldSpec, n: int) -> Matrix:
    z, o = F.zero, F.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def diag(F: FieldSpec, entries: Sequence) -> Matrix:
    d = [F.coerce(x) for x in entries]
    n = len(d)
    return tuple(tuple(d[i] if i == j else F.zero for j in range(n)) for i in range(n))


def shape(A: Matrix) -> Tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def matmul(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    if shape(A)[1] != len(B):
        raise ValueError(f"shape mismatch {shape(A)} x {shape(B)}")
    cols = list(zip(*B)) if B else []
    return tuple(
        tuple(F.reduce(sum(a * b for a, b in zip(row, col))) for col in cols)
        for row in A
    )


def matvec(F: FieldSpec, A: Matrix, v: Sequence[Raw]) -> Vector:
    if shape(A)[1] != len(v):
        raise ValueError(f"shape mismatch {shape(A)} x {len(v)}")
    return tuple(F.reduce(sum(a * x for a, x in zip(row, v))) for row in A)


def matadd(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    if shape(A) != shape(B):
        raise ValueError(f"shape mismatch {shape(A)} + {shape(B)}")
    return tuple(tuple(F.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matscale(F: FieldSpec, c: Raw, A: Matrix) -> Matrix:
    return tuple(tuple(F.mul(c, a) for a in row) for row in A)


def matneg(F: FieldSpec, A: Matrix) -> Matrix:
    return tuple(tuple(F.neg(a) for a in row) for row in A)


def is_zero_matrix(A: Matrix) -> bool:
    return all(a == 0 for row in A for a in row)


def is_zero_vector(v: Sequence[Raw]) -> bool:
    return all(a == 0 for a in v)


def rref(F: FieldSpec, A: Matrix):
    """Reduced row echelon form and the list of pivot columns."""
    M = [list(row) for row in A]
    rows, cols = shape(A)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        piv_inv = F.inv(M[r][c])
        M[r] = [F.mul(piv_inv, x) for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in M), pivots


def rank(F: FieldSpec, A: Matrix) -> int:
    return len(rref(F, A)[1])


def kernel_basis(F: FieldSpec, A: Matrix) -> list[Vector]:
    """Basis of {v : A v = 0}, one vector per free column of the RREF."""
    R, pivots = rref(F, A)
    cols = shape(A)[1]
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * cols
        v[f] = F.one
        for r, c in enumerate(pivots):
            v[c] = F.neg(R[r][f])
        basis.append(tuple(v))
    return basis


def inverse(F: FieldSpec, A: Matrix) -> Matrix:
    n = len(A)
    aug = tuple(tuple(row) + identity(F, n)[i] for i, row in enumerate(A))
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(row[n:] for row in R)


def det(F: FieldSpec, A: Matrix) -> Raw:
    M = [list(row) for row in A]
    n = len(M)
    d = F.one
    for c in range(n):
        sel = next((i for i in range(c, n) if M[i][c] != 0), None)
        if sel is None:
            return F.zero
        if sel != c:
            M[c], M[sel] = M[sel], M[c]
            d = F.neg(d)
        d = F.mul(d, M[c][c])
        piv_inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = F.mul(M[i][c], piv_inv)
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[c])]
    return d


def trace(F: FieldSpec, A: Matrix) -> Raw:
    return F.reduce(sum(A[i][i] for i in range(len(A))))
