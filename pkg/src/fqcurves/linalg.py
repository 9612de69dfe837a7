"""Exact Gauss-Jordan elimination over F_q."""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch
from .gf import FieldSpec


class FqMatrix:
    """Dense row-major matrix of element indices."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, data: Sequence[Sequence[int]], cols: int | None = None):
        self.field = field
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        self.cols = cols
        for r in self.data:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix")

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> FqMatrix:
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> FqMatrix:
        return cls(field, [[0] * cols for _ in range(rows)], cols)

    def T(self) -> FqMatrix:
        return FqMatrix(self.field, [list(c) for c in zip(*self.data)] if self.rows else [], self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqMatrix)
            and other.field is self.field
            and other.cols == self.cols
            and other.data == self.data
        )

    def __repr__(self) -> str:
        return f"FqMatrix({self.rows}x{self.cols} over F_{self.field.q})"

    def matvec(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.cols:
            raise DimensionMismatch("vector length != cols")
        add, mul = self.field._add, self.field._mul
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, x):
                if a and b:
                    acc = add[acc][mul[a][b]]
            out.append(acc)
        return out


def rref(M: FqMatrix) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of a copy of M, with its pivot columns."""
    F = M.field
    add, mul, neg = F._add, F._mul, F._neg
    A = [list(r) for r in M.data]
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        if r == len(A):
            break
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        if inv != 1:
            row_inv = mul[inv]
            A[r] = [row_inv[x] for x in A[r]]
        pr = A[r]
        nz = [j for j in range(c, M.cols) if pr[j]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = neg[A[i][c]]
                Ai = A[i]
                mf = mul[f]
                for j in nz:
                    Ai[j] = add[Ai[j]][mf[pr[j]]]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: FqMatrix) -> int:
    return len(rref(M)[1])


def nullity(M: FqMatrix) -> int:
    return M.cols - rank(M)


def nullspace(M: FqMatrix) -> list[list[int]]:
    """A basis of {x : Mx = 0}."""
    F = M.field
    A, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * M.cols
        x[f] = 1
        for r, c in enumerate(pivots):
            x[c] = F.neg(A[r][f])
        basis.append(x)
    return basis


def solve(M: FqMatrix, b: Sequence[int]) -> list[int] | None:
    """Some x with Mx = b, or None when the system is inconsistent."""
    if len(b) != M.rows:
        raise DimensionMismatch(f"right-hand side has {len(b)} entries, matrix has {M.rows} rows")
    aug = FqMatrix(M.field, [list(r) + [bi] for r, bi in zip(M.data, b)], M.cols + 1)
    A, pivots = rref(aug)
    if M.cols in pivots:
        return None
    x = [0] * M.cols
    for r, c in enumerate(pivots):
        x[c] = A[r][M.cols]
    return x
