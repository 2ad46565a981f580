"""Gray maps R^n -> F_q^{nl} given by per-position invertible l x l matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, RCode
from .gf import GF
from .linalg import Matrix, mat_inv, matmul_array, rref
from .ring import RingElement, RingSpec


class GrayMapError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GrayMapSpec:
    """Block matrices M_0..M_{n-1}; a single matrix is broadcast."""

    field: GF
    l: int
    mats: tuple[Matrix, ...]

    def __post_init__(self):
        if not self.mats:
            raise GrayMapError("at least one matrix is required")
        for M in self.mats:
            if M.shape != (self.l, self.l):
                raise GrayMapError(f"Gray matrices must be {self.l}x{self.l}, got {M.shape}")
            if rref(M)[1] != self.l:
                raise GrayMapError("Gray matrix is not invertible")

    @classmethod
    def broadcast(cls, M: Matrix) -> GrayMapSpec:
        return cls(M.field, M.rows, (M,))

    @classmethod
    def from_json(cls, field: GF, data: dict) -> GrayMapSpec:
        if "matrix" in data:
            return cls.broadcast(Matrix.from_strings(field, data["matrix"]))
        mats = tuple(Matrix.from_strings(field, m) for m in data["matrices"])
        return cls(field, mats[0].rows, mats)

    def to_json(self) -> dict:
        if len(self.mats) == 1:
            return {"matrix": self.mats[0].to_strings()}
        return {"matrices": [M.to_strings() for M in self.mats]}

    def matrix(self, j: int) -> Matrix:
        return self.mats[0] if len(self.mats) == 1 else self.mats[j]

    def check_length(self, n: int) -> None:
        if len(self.mats) not in (1, n):
            raise GrayMapError(f"{len(self.mats)} Gray matrices given for length {n}")

    def block_diagonal(self, n: int) -> np.ndarray:
        """The nl x nl matrix acting on flat vectors from the right."""
        self.check_length(n)
        l = self.l
        big = np.zeros((n * l, n * l), dtype=np.int64)
        for j in range(n):
            big[j * l : (j + 1) * l, j * l : (j + 1) * l] = self.matrix(j).data
        return big


def _flat(v) -> np.ndarray:
    if isinstance(v, np.ndarray):
        return v.astype(np.int64)
    return np.array([c for r in v for c in (r.comps if isinstance(r, RingElement) else r)], dtype=np.int64)


def phi(v, spec: GrayMapSpec) -> np.ndarray:
    """Image (a_0 M_0, ..., a_{n-1} M_{n-1}) of an R-vector (or its flat form)."""
    flat = _flat(v)
    n = flat.size // spec.l
    spec.check_length(n)
    blocks = flat.reshape(n, spec.l)
    out = [matmul_array(spec.field, blocks[j : j + 1], spec.matrix(j).data)[0] for j in range(n)]
    return np.concatenate(out) if out else flat


def phi_inv(y, spec: GrayMapSpec, ring: RingSpec | None = None):
    """Inverse image; returns R-elements when ``ring`` is given, else flat."""
    y = np.asarray(y, dtype=np.int64)
    n = y.size // spec.l
    spec.check_length(n)
    blocks = y.reshape(n, spec.l)
    out = []
    for j in range(n):
        inv = mat_inv(spec.matrix(j)).data
        out.append(matmul_array(spec.field, blocks[j : j + 1], inv)[0])
    flat = np.concatenate(out) if out else y
    if ring is None:
        return flat
    return [ring.element(flat[j * spec.l : (j + 1) * spec.l]) for j in range(n)]


def gray_weight(v, spec: GrayMapSpec) -> int:
    """Sum over positions of the Hamming weight of a_j M_j."""
    flat = _flat(v)
    n = flat.size // spec.l
    total = 0
    for j in range(n):
        block = flat[j * spec.l : (j + 1) * spec.l].reshape(1, -1)
        total += int(np.count_nonzero(matmul_array(spec.field, block, spec.matrix(j).data)))
    return total


def gray_image(code: RCode | LinearCode, spec: GrayMapSpec) -> LinearCode:
    """Phi applied to each F_q-basis row of an R-code (or of its flat view)."""
    lin = code.as_linear_code() if isinstance(code, RCode) else code
    n = lin.n // spec.l
    if lin.k == 0:
        return LinearCode.zero(lin.field, lin.n)
    G = matmul_array(lin.field, lin.G.data, spec.block_diagonal(n))
    return LinearCode(Matrix(lin.field, G))


def check_orthogonality_matrix(spec: GrayMapSpec):
    """(ok, lam): ok iff M_j M_j^T = lam I for one nonzero lam and every j."""
    field, l = spec.field, spec.l
    lam = None
    for M in spec.mats:
        P = matmul_array(field, M.data, M.data.T)
        d = int(P[0, 0])
        if d == 0 or not np.array_equal(P, d * np.eye(l, dtype=np.int64)):
            return False, None
        if lam is not None and d != lam:
            return False, None
        lam = d
    return True, lam
