"""Dense matrices over F_q.

Entries are field indices held in an ``int64`` numpy array; every routine
goes through the field's lookup tables, so the same code serves prime and
extension fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import GF, FieldElement


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Matrix:
    field: GF
    data: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.data, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise DimensionError("matrix data must be two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= self.field.q):
            raise ValueError("matrix entries outside the field")
        object.__setattr__(self, "data", a)

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: GF, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_strings(cls, field: GF, rows) -> Matrix:
        data = [[field.parse(str(e)) for e in row] for row in rows]
        cols = len(data[0]) if data else 0
        return cls(field, np.array(data, dtype=np.int64).reshape(len(data), cols))

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(int(e)) for e in row] for row in self.data]

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> Matrix:
        return transpose(self)

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, int(self.data[i, j]))

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over F_{self.field.q}: {self.to_strings()})"

    def rank(self) -> int:
        return rref(self)[1]

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols and self.rows and other.rows:
            raise DimensionError("column counts differ")
        if not self.rows:
            return other
        if not other.rows:
            return self
        return Matrix(self.field, np.vstack([self.data, other.data]))


# -- array level helpers -----------------------------------------------------


def vec_mul(field: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise product of (broadcastable) index arrays."""
    return field.mul[a, b]


def vec_add(field: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.add[a, b]


def matmul_array(field: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    if field.m == 1:
        return (a @ b) % field.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = field.add[out, field.mul[a[:, k, None], b[None, k, :]]]
    return out


def rref_array(field: GF, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination with first-nonzero pivoting."""
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = field.mul[field.inv[a[r, c]], a[r]]
        factors = a[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            a[hit] = field.sub[a[hit], field.mul[factors[hit, None], a[r][None, :]]]
        pivots.append(c)
        r += 1
    return a, pivots


# -- public operations -------------------------------------------------------


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    a, piv = rref_array(M.field, M.data)
    return Matrix(M.field, a), len(piv), piv


def row_basis(M: Matrix) -> Matrix:
    """The nonzero rows of rref(M)."""
    R, rank, _ = rref(M)
    return Matrix(M.field, R.data[:rank].reshape(rank, M.cols))


def null_space(M: Matrix) -> Matrix:
    """Rows spanning {x : M x^T = 0}."""
    field = M.field
    R, rank, piv = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(piv):
            basis[t, pc] = field.neg[R.data[i, f]]
    return Matrix(field, basis.reshape(len(free), n))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise ValueError("field mismatch")
    return Matrix(A.field, matmul_array(A.field, A.data, B.data))


def transpose(M: Matrix) -> Matrix:
    return Matrix(M.field, M.data.T.copy().reshape(M.cols, M.rows))


def mat_inv(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise DimensionError("only square matrices are invertible")
    n = M.rows
    aug = np.hstack([M.data, np.eye(n, dtype=np.int64)])
    R, piv = rref_array(M.field, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularMatrixError("matrix is singular")
    return Matrix(M.field, R[:, n:])


def in_row_space(M: Matrix, v: np.ndarray) -> bool:
    base = rref(M)[1]
    ext = np.vstack([M.data, np.asarray(v, dtype=np.int64).reshape(1, -1)])
    return len(rref_array(M.field, ext)[1]) == base


def row_space_contains(big: Matrix, small: Matrix) -> bool:
    """True iff rowspace(small) is a subspace of rowspace(big)."""
    if small.rows == 0:
        return True
    if big.rows == 0:
        return rref(small)[1] == 0
    return rref(big.vstack(small))[1] == rref(big)[1]


def same_row_space(A: Matrix, B: Matrix) -> bool:
    ra, rb = row_basis(A), row_basis(B)
    return ra.shape == rb.shape and np.array_equal(ra.data, rb.data)
