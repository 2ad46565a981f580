"""Linear codes over F_q, (theta, delta, alpha)-cyclic codes and their
(Theta, Delta, a)-cyclic counterparts over R = F_q^l.

A code over R is kept as its l component codes C_i over F_q.  The flat
F_q-view of an R-vector interleaves position-major, component-minor: flat
index ``j*l + i`` holds component ``i`` of position ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .gf import GF, FieldElement
from .linalg import Matrix, null_space, rref, row_basis, row_space_contains, matmul_array
from .ring import ProductAut, ProductDerivation, RingElement, RingSpec, apply_Delta, apply_Theta
from .skewpoly import BudgetExceeded, SkewPoly, SkewRing, right_divides
from .weights import DEFAULT_BUDGET, sample_min_weight, weight_histogram


class LinearCode:
    """An [n, k] code over F_q given by a generator matrix.

    The stored generator matrix is the reduced row echelon basis of the rows
    passed in, so ``k`` is always the true dimension.
    """

    def __init__(self, G: Matrix, name: str | None = None):
        self.field = G.field
        self.n = G.cols
        self.G = row_basis(G) if G.rows else Matrix(G.field, np.zeros((0, G.cols), dtype=np.int64))
        self.name = name

    @classmethod
    def zero(cls, field: GF, n: int) -> LinearCode:
        return cls(Matrix(field, np.zeros((0, n), dtype=np.int64)))

    @classmethod
    def full(cls, field: GF, n: int) -> LinearCode:
        return cls(Matrix.identity(field, n))

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}]_{self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and np.array_equal(self.G.data, other.G.data)
        )

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(1, -1)
        return row_space_contains(self.G, Matrix(self.field, v))

    def contains_code(self, other: LinearCode) -> bool:
        return row_space_contains(self.G, other.G)

    def codewords(self) -> np.ndarray:
        """Every codeword (only sensible for tiny codes)."""
        from .weights import span_table

        return span_table(self.field, self.G.data)


# -- pseudo-linear transformation and cyclic codes over F_q ------------------


def pseudo_linear_apply(ring: SkewRing, alpha: int, c) -> list[int]:
    """T(c) = theta(c) M_alpha + delta(c) for the companion matrix M_alpha."""
    field = ring.field
    c = [int(v) for v in c]
    n = len(c)
    th, de, add, mul = ring._theta, ring._delta, field.add, field.mul
    out = [0] * n
    out[0] = int(add[mul[alpha, th[c[n - 1]]], de[c[0]]])
    for j in range(1, n):
        out[j] = int(add[th[c[j - 1]], de[c[j]]])
    return out


@dataclass
class FqCyclicSpec:
    """A (theta, delta, alpha)-cyclic code <g> of length n over F_q."""

    n: int
    ring: SkewRing
    alpha: int
    g: SkewPoly

    def __post_init__(self):
        if isinstance(self.alpha, FieldElement):
            self.alpha = self.alpha.value
        if self.alpha == 0:
            raise ValueError("alpha must be a unit")
        if self.g.is_zero() or self.g.degree > self.n:
            raise ValueError("generator must be nonzero of degree <= n")

    @property
    def field(self) -> GF:
        return self.ring.field

    @property
    def k(self) -> int:
        return self.n - int(self.g.degree)

    def is_valid(self) -> bool:
        return right_divides(self.g, self.ring.xn_minus(self.n, self.alpha))


def generator_matrix_fq(spec: FqCyclicSpec) -> LinearCode:
    """Rows g, T(g), ..., T^{k-1}(g) of the padded generator."""
    n, k = spec.n, spec.k
    if k < 1:
        return LinearCode.zero(spec.field, n)
    rows = [spec.g.padded(n)]
    for _ in range(k - 1):
        rows.append(pseudo_linear_apply(spec.ring, spec.alpha, rows[-1]))
    return LinearCode(Matrix(spec.field, np.array(rows, dtype=np.int64)))


def is_closed_under(code: LinearCode, transform) -> bool:
    """Rank-stability test: T maps every basis row back into the code."""
    if code.k == 0:
        return True
    images = np.array([transform(row) for row in code.G.data], dtype=np.int64)
    return row_space_contains(code.G, Matrix(code.field, images))


def closure_check_fq(spec: FqCyclicSpec, code: LinearCode | None = None) -> bool:
    code = code or generator_matrix_fq(spec)
    return is_closed_under(code, lambda c: pseudo_linear_apply(spec.ring, spec.alpha, c))


# -- codes over R -------------------------------------------------------------


@dataclass
class RCodeSpec:
    """A (Theta, Delta_{Theta,s}, a)-cyclic code over R with component
    generators g_1..g_l (each monic in its component ring)."""

    n: int
    ring: RingSpec
    Theta: ProductAut
    s: RingElement
    a: RingElement
    gens: list[SkewPoly]
    notes: list[str] = dc_field(default_factory=list)

    def __post_init__(self):
        if len(self.gens) != self.ring.l:
            raise ValueError(f"need {self.ring.l} generators, got {len(self.gens)}")
        if any(c == 0 for c in self.a.comps):
            raise ValueError("a must be a unit of R")

    @property
    def field(self) -> GF:
        return self.ring.field

    @property
    def l(self) -> int:
        return self.ring.l

    def component_ring(self, i: int) -> SkewRing:
        return SkewRing(self.field, self.Theta.exps[i], self.s.comps[i])

    def component_spec(self, i: int) -> FqCyclicSpec:
        return FqCyclicSpec(self.n, self.component_ring(i), self.a.comps[i], self.gens[i])

    def components(self) -> list[FqCyclicSpec]:
        return [self.component_spec(i) for i in range(self.l)]

    @property
    def dimension(self) -> int:
        return self.n * self.l - sum(int(g.degree) for g in self.gens)

    @property
    def has_derivation(self) -> bool:
        return any(c != 0 for c in self.s.comps)


class RCode:
    """C = e_1 C_1 + ... + e_l C_l with its flat F_q basis."""

    def __init__(self, spec: RCodeSpec, components: list[LinearCode]):
        self.spec = spec
        self.components = components

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def l(self) -> int:
        return self.spec.l

    @property
    def field(self) -> GF:
        return self.spec.field

    @property
    def dimension(self) -> int:
        return sum(c.k for c in self.components)

    def flat_basis(self) -> Matrix:
        """F_q-basis of C in the interleaved flat layout (K x nl)."""
        n, l = self.n, self.l
        rows = []
        for i, comp in enumerate(self.components):
            for row in comp.G.data:
                flat = np.zeros(n * l, dtype=np.int64)
                flat[i::l] = row
                rows.append(flat)
        data = np.array(rows, dtype=np.int64).reshape(len(rows), n * l)
        return Matrix(self.field, data)

    def as_linear_code(self) -> LinearCode:
        return LinearCode(self.flat_basis())


def build_r_code(spec: RCodeSpec) -> RCode:
    return RCode(spec, [generator_matrix_fq(c) for c in spec.components()])


def flat_to_r_vector(spec: RCodeSpec, flat) -> list[RingElement]:
    l = spec.l
    return [spec.ring.element(flat[j * l : (j + 1) * l]) for j in range(spec.n)]


def r_vector_to_flat(vec: list[RingElement]) -> list[int]:
    return [c for r in vec for c in r.comps]


def pseudo_linear_apply_R(spec: RCodeSpec, vec: list[RingElement]) -> list[RingElement]:
    """T over R computed with ring-level Theta and Delta (no splitting)."""
    Delta = ProductDerivation(spec.s)
    n = len(vec)
    th = [apply_Theta(spec.Theta, r) for r in vec]
    de = [apply_Delta(Delta, spec.Theta, r) for r in vec]
    out = [spec.a * th[n - 1] + de[0]]
    for j in range(1, n):
        out.append(th[j - 1] + de[j])
    return out


def closure_check(spec: RCodeSpec, code: RCode | None = None) -> bool:
    """T_{Theta,Delta,M_a}(C) is contained in C, tested on the flat basis."""
    code = code or build_r_code(spec)
    lin = code.as_linear_code()

    def T(flat):
        return r_vector_to_flat(pseudo_linear_apply_R(spec, flat_to_r_vector(spec, flat)))

    return is_closed_under(lin, T)


def closure_check_components(spec: RCodeSpec, code: RCode | None = None) -> bool:
    code = code or build_r_code(spec)
    return all(closure_check_fq(cs, comp) for cs, comp in zip(spec.components(), code.components))


# -- distances and weight enumerators ----------------------------------------


def weight_enumerator(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[int]:
    """A_0..A_n by full enumeration of the q^k codewords."""
    if code.q**code.k > budget:
        raise BudgetExceeded(f"{code.q}^{code.k} codewords exceed budget {budget}")
    hist = weight_histogram(code.field, code.G.data, workers=workers)
    return [int(v) for v in hist.sum(axis=0)]


def _first_positive(A) -> int | None:
    return next((w for w in range(1, len(A)) if A[w] > 0), None)


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1, samples: int = 1 << 16):
    """(d, exact).  Exact by enumeration when q^k <= budget, otherwise an
    upper bound from systematic rows, pairs and a random sample."""
    if code.k == 0:
        return None, True
    if code.q**code.k <= budget:
        return _first_positive(weight_enumerator(code, budget, workers)), True
    return sample_min_weight(code.field, code.G.data, samples=samples), False


def krawtchouk(n: int, q: int, w: int, j: int) -> int:
    return sum((-1) ** s * (q - 1) ** (w - s) * comb(j, s) * comb(n - j, w - s) for s in range(w + 1))


def macwilliams_transform(B: list[int], n: int, q: int) -> list[int]:
    """Weight distribution of C from that of its Euclidean dual D:
    A_w = |D|^{-1} sum_j B_j K_w(j)."""
    size = sum(B)
    out = []
    for w in range(n + 1):
        total = sum(B[j] * krawtchouk(n, q, w, j) for j in range(n + 1) if B[j])
        if total % size:
            raise ArithmeticError("MacWilliams transform produced a non-integer count")
        out.append(total // size)
    return out


def euclidean_dual(code: LinearCode) -> LinearCode:
    if code.k == 0:
        return LinearCode.full(code.field, code.n)
    return LinearCode(null_space(code.G))


def macwilliams_weight_enumerator(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[int]:
    dual = euclidean_dual(code)
    if code.q**dual.k > budget:
        raise BudgetExceeded(f"{code.q}^{dual.k} dual codewords exceed budget {budget}")
    return macwilliams_transform(weight_enumerator(dual, budget, workers), code.n, code.q)


def macwilliams_min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1):
    """(d, exact) through the dual weight enumerator."""
    if code.k == 0:
        return None, True
    return _first_positive(macwilliams_weight_enumerator(code, budget, workers)), True


def full_weight_enumerator(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[int] | None:
    """Weight distribution by whichever of C, C^perp is smaller; None if
    neither fits the budget."""
    q = code.q
    if q**code.k <= min(budget, q ** (code.n - code.k)):
        return weight_enumerator(code, budget, workers)
    if q ** (code.n - code.k) <= budget:
        return macwilliams_weight_enumerator(code, budget, workers)
    if q**code.k <= budget:
        return weight_enumerator(code, budget, workers)
    return None


def best_distance(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1, method: str = "auto"):
    """(d, exact, method_used) choosing the cheaper exact path."""
    q, k, n = code.q, code.k, code.n
    if method == "direct":
        d, exact = min_distance(code, budget, workers)
        return d, exact, "direct"
    if method == "macwilliams":
        return (*macwilliams_min_distance(code, budget, workers), "macwilliams")
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if q**k <= budget and q**k <= q ** (n - k):
        return (*min_distance(code, budget, workers), "direct")
    if q ** (n - k) <= budget:
        return (*macwilliams_min_distance(code, budget, workers), "macwilliams")
    d, exact = min_distance(code, budget, workers)
    return d, exact, "direct" if exact else "sample"


def hull_sweep(code: LinearCode, sub_form: Matrix, budget: int = DEFAULT_BUDGET, workers: int = 1):
    """Weight histograms of C split by membership in {c in C : B c^T = 0}
    for the k x n matrix B = ``sub_form``; membership is carried as flag
    columns (G B^T) during the sweep."""
    if code.q**code.k > budget:
        raise BudgetExceeded(f"{code.q}^{code.k} codewords exceed budget {budget}")
    flags = matmul_array(code.field, code.G.data, sub_form.data.T)
    return weight_histogram(code.field, code.G.data, flag_cols=flags, workers=workers)


def span_count(code: LinearCode) -> int:
    """Number of distinct codewords, by explicit enumeration."""
    words = code.codewords()
    return len({tuple(w) for w in words.tolist()})


def rank(M: Matrix) -> int:
    return rref(M)[1]
