"""Euclidean duals of (theta, 0, alpha)-cyclic codes through h-dagger, and
annihilator duals of (Id, 0, alpha)-cyclic codes through the Gram matrix."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import (
    FqCyclicSpec,
    LinearCode,
    RCode,
    RCodeSpec,
    build_r_code,
    euclidean_dual,
    generator_matrix_fq,
)
from .gf import FieldElement
from .linalg import Matrix, matmul_array, null_space
from .skewpoly import SkewPoly, h_dagger, is_central, right_divides, right_divmod


class HypothesisError(ValueError):
    """The dual theory does not apply to this code."""


@dataclass
class DualityReport:
    euclidean_dual_gen: SkewPoly | None
    dual_containing: bool
    alpha_fixed: bool
    order_divides: bool
    central: bool
    cofactor: SkewPoly | None = None
    notes: list[str] = dc_field(default_factory=list)

    @property
    def hypotheses_met(self) -> bool:
        return self.alpha_fixed and self.order_divides and self.central

    def to_json(self) -> dict:
        return {
            "dual_generator": None if self.euclidean_dual_gen is None else str(self.euclidean_dual_gen),
            "cofactor": None if self.cofactor is None else str(self.cofactor),
            "dual_containing": self.dual_containing,
            "alpha_fixed": self.alpha_fixed,
            "order_divides": self.order_divides,
            "central": self.central,
            "notes": list(self.notes),
        }


def _alpha(alpha) -> int:
    return alpha.value if isinstance(alpha, FieldElement) else int(alpha)


def _require_no_derivation(g: SkewPoly) -> None:
    if g.ring.has_derivation:
        raise HypothesisError("dual theory needs a zero derivation")


def _require_central(n: int, alpha: int, g: SkewPoly) -> None:
    ring = g.ring
    if ring.apply_theta(alpha) != alpha:
        raise HypothesisError("alpha is not fixed by theta")
    if n % ring.theta.order:
        raise HypothesisError(f"order of theta ({ring.theta.order}) does not divide n = {n}")


def cofactor_h(n: int, alpha, g: SkewPoly) -> SkewPoly:
    """h with x^n - alpha = h g."""
    _require_no_derivation(g)
    alpha = _alpha(alpha)
    q, r = right_divmod(g.ring.xn_minus(n, alpha), g)
    if not r.is_zero():
        raise HypothesisError("g is not a right divisor of x^n - alpha")
    return q


def euclidean_dual_generator(n: int, alpha, g: SkewPoly) -> SkewPoly:
    alpha = _alpha(alpha)
    _require_no_derivation(g)
    _require_central(n, alpha, g)
    h = cofactor_h(n, alpha, g)
    return h_dagger(h, n - int(g.degree))


def dual_spec(spec: FqCyclicSpec) -> FqCyclicSpec:
    """The (theta, 0, alpha^{-1})-cyclic code generated by h-dagger."""
    hd = euclidean_dual_generator(spec.n, spec.alpha, spec.g)
    return FqCyclicSpec(spec.n, spec.ring, int(spec.field.inv[spec.alpha]), hd)


def is_euclidean_dual_containing_fq(n: int, alpha, g: SkewPoly) -> bool:
    """g right divides h-dagger."""
    return right_divides(g, euclidean_dual_generator(n, alpha, g))


def duality_report(spec: FqCyclicSpec) -> DualityReport:
    ring, alpha = spec.ring, spec.alpha
    fixed = ring.apply_theta(alpha) == alpha
    divides = spec.n % ring.theta.order == 0
    if ring.has_derivation or not (fixed and divides):
        return DualityReport(None, False, fixed, divides, False, notes=["dual theory hypotheses not met"])
    h = cofactor_h(spec.n, alpha, spec.g)
    hd = h_dagger(h, spec.n - int(spec.g.degree))
    return DualityReport(hd, right_divides(spec.g, hd), fixed, divides, is_central(spec.n, alpha, ring), cofactor=h)


def is_euclidean_dual_containing_R(spec: RCodeSpec) -> bool:
    if spec.has_derivation:
        raise HypothesisError("dual theory needs a zero derivation")
    return all(is_euclidean_dual_containing_fq(c.n, c.alpha, c.g) for c in spec.components())


def linalg_dual_containing(code: LinearCode) -> bool:
    """C^perp inside C by row-space inclusion."""
    return code.contains_code(euclidean_dual(code))


def r_code_dual_components(code: RCode) -> list[LinearCode]:
    return [euclidean_dual(c) for c in code.components]


# -- annihilator duality ------------------------------------------------------


def gram_matrix(field, n: int, alpha) -> Matrix:
    alpha = _alpha(alpha)
    A = np.zeros((n, n), dtype=np.int64)
    A[0, 0] = 1
    for i in range(1, n):
        A[i, n - i] = alpha
    return Matrix(field, A)


def annihilator_form(f: SkewPoly, g: SkewPoly, n: int, alpha) -> int:
    """Constant term of f g reduced (on the right) modulo x^n - alpha."""
    alpha = _alpha(alpha)
    _, r = right_divmod(f * g, f.ring.xn_minus(n, alpha))
    return r.coeff(0)


def annihilator_form_gram(f, g, n: int, alpha, field) -> int:
    """f A g^T on padded coefficient vectors."""
    fv = np.array(f.padded(n) if isinstance(f, SkewPoly) else f, dtype=np.int64).reshape(1, n)
    gv = np.array(g.padded(n) if isinstance(g, SkewPoly) else g, dtype=np.int64).reshape(n, 1)
    A = gram_matrix(field, n, alpha).data
    return int(matmul_array(field, matmul_array(field, fv, A), gv)[0, 0])


def _require_identity(spec: FqCyclicSpec) -> None:
    if spec.ring.theta_exp != 0 or spec.ring.has_derivation:
        raise HypothesisError("annihilator duality is only available for theta = Id, delta = 0")


def annihilator_dual_of(code: LinearCode, alpha) -> LinearCode:
    """{f : G A f^T = 0}."""
    if code.k == 0:
        return LinearCode.full(code.field, code.n)
    A = gram_matrix(code.field, code.n, alpha)
    return LinearCode(null_space(Matrix(code.field, matmul_array(code.field, code.G.data, A.data))))


def annihilator_dual(spec: FqCyclicSpec) -> LinearCode:
    _require_identity(spec)
    return annihilator_dual_of(generator_matrix_fq(spec), spec.alpha)


def is_annihilator_dual_containing(n: int, alpha, g: SkewPoly) -> bool:
    """g divides the cofactor h in F_q[x]."""
    if g.ring.theta_exp != 0 or g.ring.has_derivation:
        raise HypothesisError("annihilator duality is only available for theta = Id, delta = 0")
    return right_divides(g, cofactor_h(n, alpha, g))


def build_components_dual(spec: RCodeSpec) -> list[LinearCode]:
    return r_code_dual_components(build_r_code(spec))
