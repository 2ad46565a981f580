"""CSS quantum parameters from dual-containing codes.

The quantum distance is d' = min{wt(c) : c in C \\ D} for the dual D inside
C.  Two exact routes are available:

* ``sweep``: enumerate C with membership in D carried as flag columns.
* ``enumerator``: A_w(C \\ D) = A_w(C) - A_w(D), with both distributions
  obtained from one enumeration of the Euclidean dual (MacWilliams gives
  A(C)).  The annihilator dual is a monomial image of the Euclidean dual,
  so it has the same weight distribution.

``auto`` picks whichever enumeration is smaller.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import (
    FqCyclicSpec,
    LinearCode,
    RCodeSpec,
    best_distance,
    build_r_code,
    euclidean_dual,
    generator_matrix_fq,
    hull_sweep,
    macwilliams_transform,
    weight_enumerator,
)
from .duality import (
    annihilator_dual_of,
    gram_matrix,
    is_annihilator_dual_containing,
    is_euclidean_dual_containing_R,
)
from .gray import GrayMapSpec, check_orthogonality_matrix, gray_image
from .linalg import Matrix, matmul_array
from .skewpoly import BudgetExceeded
from .weights import DEFAULT_BUDGET

MDS = "MDS"
ALMOST_MDS = "almost MDS"
NEITHER = "neither"


@dataclass
class QuantumParams:
    n: int
    k: int
    d: int | None
    d_exact: bool
    q: int
    d_upper: int | None = None
    classification: str = NEITHER
    provisional: bool = False

    def __post_init__(self):
        self.classification, self.provisional = classify_singleton(self)

    @property
    def d_text(self) -> str:
        if self.d is None:
            return "?" if self.d_upper is None else f"<={self.d_upper}?"
        return str(self.d) if self.d_exact else f">={self.d}"

    def __str__(self):
        return f"[[{self.n}, {self.k}, {self.d_text}]]_{self.q}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_exact": self.d_exact,
            "d_upper": self.d_upper,
            "q": self.q,
            "class": self.classification,
            "provisional": self.provisional,
        }


def classify_singleton(params) -> tuple[str, bool]:
    """MDS iff 2d = n - k + 2, almost MDS iff 2d >= n - k.  The flag is
    True when d is only a lower bound."""
    if params.d is None:
        return NEITHER, True
    two_d, n, k = 2 * params.d, params.n, params.k
    if two_d == n - k + 2:
        cls = MDS
    elif two_d >= n - k:
        cls = ALMOST_MDS
    else:
        cls = NEITHER
    return cls, not params.d_exact


def _first_gap(A_big, A_small) -> int | None:
    return next((w for w in range(1, len(A_big)) if A_big[w] > A_small[w]), None)


def css_distance(
    code: LinearCode,
    dual_form: Matrix | None = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    method: str = "auto",
):
    """Minimum weight of C \\ D, or None when D = C.

    ``dual_form`` is the matrix B with D = {c in C : B c^T = 0}; it defaults
    to G (Euclidean).  For the annihilator dual pass G A.  Raises
    BudgetExceeded when neither route fits the budget.
    """
    q, k, n = code.q, code.k, code.n
    B = code.G if dual_form is None else dual_form
    if method == "auto":
        method = "sweep" if q**k <= q ** (n - k) else "enumerator"
    if method == "sweep":
        hist = hull_sweep(code, B, budget, workers)
        return _first_gap(hist.sum(axis=0), hist[0])
    if method == "enumerator":
        dual = euclidean_dual(code)
        if q**dual.k > budget:
            raise BudgetExceeded(f"{q}^{dual.k} dual codewords exceed budget {budget}")
        A_dual = weight_enumerator(dual, budget, workers)
        A_code = macwilliams_transform(A_dual, n, q)
        return _first_gap(A_code, A_dual)
    raise ValueError(f"unknown method {method!r}")


def _finish(n, kq, q, code, dist, exact_dist, budget, workers, method, dual_form):
    """Quantum params for a code whose dual sits inside it.

    ``dist`` is the classical distance, exact or (when ``exact_dist`` is
    False) only a sampled upper bound.  A lower bound d(C) that meets the
    quantum Singleton bound is exact.
    """
    if kq > 0:
        try:
            d = css_distance(code, dual_form, budget, workers, method)
            return QuantumParams(n, kq, d, True, q)
        except BudgetExceeded:
            pass
    # D = C (kq = 0) leaves C \\ D empty; otherwise the sweep was too big
    if dist is None or not exact_dist:
        return QuantumParams(n, kq, None, False, q, d_upper=dist)
    return QuantumParams(n, kq, dist, 2 * dist == n - kq + 2, q)


def css_single(code: LinearCode, budget: int = DEFAULT_BUDGET, workers: int = 1, method: str = "auto", distance=None):
    """[[n, 2k - n, d']] for a Euclidean dual-containing code."""
    if not code.contains_code(euclidean_dual(code)):
        raise ValueError("code is not Euclidean dual-containing")
    d, exact = distance if distance is not None else best_distance(code, budget, workers)[:2]
    return _finish(code.n, 2 * code.k - code.n, code.q, code, d, exact, budget, workers, method, None)


def quantum_dimension_literal(spec: RCodeSpec) -> int:
    """The dimension as printed for the R-code construction (sum k_i - nl)."""
    return spec.dimension - spec.n * spec.l


def quantum_dimension(spec: RCodeSpec) -> int:
    """2 sum k_i - nl, the CSS dimension for C_1 = C_2 = Phi(C)."""
    return 2 * spec.dimension - spec.n * spec.l


def css_from_r_code(
    spec: RCodeSpec,
    gray: GrayMapSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    method: str = "auto",
    image: LinearCode | None = None,
    distance=None,
) -> QuantumParams:
    if spec.has_derivation:
        raise ValueError("quantum construction needs a zero derivation")
    if not is_euclidean_dual_containing_R(spec):
        raise ValueError("R-code is not Euclidean dual-containing")
    ok, _ = check_orthogonality_matrix(gray)
    if not ok:
        raise ValueError("Gray matrices do not satisfy M M^T = lambda I")
    image = image or gray_image(build_r_code(spec), gray)
    if not image.contains_code(euclidean_dual(image)):
        raise AssertionError("Gray image lost dual containment")
    d, exact = distance if distance is not None else best_distance(image, budget, workers)[:2]
    return _finish(image.n, quantum_dimension(spec), image.q, image, d, exact, budget, workers, method, None)


def css_annihilator(
    spec: FqCyclicSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    method: str = "auto",
    distance=None,
) -> QuantumParams:
    if not is_annihilator_dual_containing(spec.n, spec.alpha, spec.g):
        raise ValueError("g does not divide h: code is not annihilator dual-containing")
    code = generator_matrix_fq(spec)
    A = gram_matrix(code.field, code.n, spec.alpha)
    form = Matrix(code.field, matmul_array(code.field, code.G.data, A.data))
    d, exact = distance if distance is not None else best_distance(code, budget, workers)[:2]
    return _finish(code.n, 2 * code.k - code.n, code.q, code, d, exact, budget, workers, method, form)


def css_distance_bruteforce(code: LinearCode, dual: LinearCode) -> int | None:
    """Reference: enumerate C, test membership in D one word at a time."""
    words = code.codewords()
    best = None
    for w in words:
        if not np.any(w) or dual.contains(w):
            continue
        wt = int(np.count_nonzero(w))
        best = wt if best is None else min(best, wt)
    return best


__all__ = [
    "QuantumParams",
    "classify_singleton",
    "css_distance",
    "css_single",
    "css_from_r_code",
    "css_annihilator",
    "css_distance_bruteforce",
    "quantum_dimension",
    "quantum_dimension_literal",
    "annihilator_dual_of",
]
