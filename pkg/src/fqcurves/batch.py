"""Batched evaluation of F_q-linear maps on many coefficient vectors.

Every hot loop in this package has the same shape: a family of
polynomials whose coefficient vector ``c`` ranges over a large set, and a
fixed collection of linear functionals (values at points, coefficients of
restrictions to lines) that must be tested for zero.  Over F_q = F_p^e a
functional ``c -> sum_j c_j a_j`` is F_p-linear in the base-p digits of
the ``c_j``, so a batch of candidates becomes one float matrix product
mod p.  Entries stay far below 2^53, so the float path is exact.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .gf import FieldSpec


def expand_map(field: FieldSpec, A: Sequence[Sequence[int]]) -> np.ndarray:
    """F_p-matrix of the F_q-linear map ``c -> c @ A``.

    ``A`` has shape (N, M) over F_q.  The result has shape (N*e, M*e): row
    ``(j, u)`` holds the digits of ``t^u * A[j][k]`` for each output k.
    """
    p, e = field.p, field.e
    A = np.asarray(A, dtype=np.int64).reshape(len(A), -1)
    N, M = A.shape
    W = np.zeros((N, e, M, e), dtype=np.int64)
    t_pows = [field.pow(p, u) if e > 1 else 1 for u in range(e)]  # index p is t
    for u, tu in enumerate(t_pows):
        prod = field.mul_table[tu][A]  # (N, M)
        W[:, u, :, :] = field._digits[prod]
    return W.reshape(N * e, M * e).astype(np.float64)


def digits_of(field: FieldSpec, values: np.ndarray) -> np.ndarray:
    """Base-p digits of element indices, flattened per row: (B, N) -> (B, N*e)."""
    B = values.shape[0]
    return field._digits[values].reshape(B, -1).astype(np.float64)


def index_from_digits(field: FieldSpec, digits: np.ndarray, M: int) -> np.ndarray:
    """Inverse of :func:`digits_of` for an output block of M elements."""
    B = digits.shape[0]
    return digits.reshape(B, M, field.e).astype(np.int64) @ field._weights


class LinearBatch:
    """Apply a fixed F_q-linear (affine) map to batches of coefficient rows."""

    def __init__(self, field: FieldSpec, A: Sequence[Sequence[int]], offset: Sequence[int] | None = None):
        self.field = field
        A = np.asarray(A, dtype=np.int64)
        self.N, self.M = A.shape
        self.W = expand_map(field, A)
        if offset is None:
            self.offset = None
        else:
            off = np.asarray(offset, dtype=np.int64)
            self.offset = field._digits[off].reshape(-1).astype(np.float64)

    def digits(self, coeffs: np.ndarray) -> np.ndarray:
        """Output digits, shape (B, M, e), entries in [0, p)."""
        X = digits_of(self.field, coeffs)
        Y = X @ self.W
        if self.offset is not None:
            Y += self.offset
        Y = np.mod(Y, self.field.p)
        return Y.reshape(coeffs.shape[0], self.M, self.field.e)

    def nonzero(self, coeffs: np.ndarray) -> np.ndarray:
        """Boolean (B, M): output k nonzero."""
        return self.digits(coeffs).any(axis=2)

    def values(self, coeffs: np.ndarray) -> np.ndarray:
        """Output element indices, shape (B, M)."""
        return self.digits(coeffs).astype(np.int64) @ self.field._weights


def monomial_matrix(field: FieldSpec, monos: Sequence[Sequence[int]], points: np.ndarray) -> np.ndarray:
    """Values of each monomial at each point: shape (npts, nmonos)."""
    pts = np.asarray(points, dtype=np.int64)
    out = np.ones((pts.shape[0], len(monos)), dtype=np.int64)
    for k, exps in enumerate(monos):
        col = np.ones(pts.shape[0], dtype=np.int64)
        for i, a in enumerate(exps):
            if a:
                col = field.mul_table[col, field.pow_array(pts[:, i], a)]
        out[:, k] = col
    return out


def base_q_digits(values: np.ndarray, q: int, width: int) -> np.ndarray:
    """Base-q digits, most significant first: (B,) -> (B, width)."""
    out = np.empty((values.shape[0], width), dtype=np.int64)
    v = values.astype(np.int64).copy()
    for k in range(width - 1, -1, -1):
        out[:, k] = v % q
        v //= q
    return out


# -- projective coefficient classes -----------------------------------------
#
# Nonzero vectors in F_q^N with first nonzero entry 1, ranked in
# lexicographic order: the leading position j runs from N-1 down to 0 and,
# within one j, the tail (entries j+1..N-1, read as a base-q number with
# entry j+1 most significant) counts upward.


def class_count(q: int, N: int) -> int:
    return (q**N - 1) // (q - 1)


def class_block(q: int, N: int, start: int, stop: int) -> np.ndarray:
    """Coefficient rows for class ranks ``start <= r < stop``."""
    rows = []
    offset = 0
    for j in range(N - 1, -1, -1):
        width = N - 1 - j
        size = q**width
        lo, hi = max(start, offset), min(stop, offset + size)
        if lo < hi:
            tails = np.arange(lo - offset, hi - offset, dtype=np.int64)
            block = np.zeros((hi - lo, N), dtype=np.int64)
            block[:, j] = 1
            if width:
                block[:, j + 1 :] = base_q_digits(tails, q, width)
            rows.append(block)
        offset += size
        if offset >= stop:
            break
    if not rows:
        return np.zeros((0, N), dtype=np.int64)
    return np.concatenate(rows, axis=0)


def class_rank(coeffs: Sequence[int], q: int) -> int:
    """Inverse of :func:`class_block` for one normalised vector."""
    N = len(coeffs)
    j = next(i for i, c in enumerate(coeffs) if c)
    if coeffs[j] != 1:
        raise ValueError("vector is not normalised")
    offset = sum(q ** (N - 1 - jj) for jj in range(N - 1, j, -1))
    tail = 0
    for c in coeffs[j + 1 :]:
        tail = tail * q + c
    return offset + tail


def vector_block(q: int, N: int, start: int, stop: int) -> np.ndarray:
    """All of F_q^N in lexicographic order (first entry most significant)."""
    return base_q_digits(np.arange(start, stop, dtype=np.int64), q, N)
