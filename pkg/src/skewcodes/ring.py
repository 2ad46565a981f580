"""The product ring R = F_q^l, its componentwise automorphisms and inner
derivations, and CRT splitting of skew polynomials over R."""

from __future__ import annotations

from dataclasses import dataclass

from .gf import GF, FieldAut
from .skewpoly import SkewPoly, SkewRing, skew_mul


@dataclass(frozen=True)
class RingSpec:
    field: GF
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("R = F_q^l needs l >= 1")

    def element(self, comps) -> RingElement:
        return RingElement(self, tuple(int(c) for c in comps))

    def parse(self, texts) -> RingElement:
        return self.element(self.field.parse(str(t)) for t in texts)

    def scalar(self, a: int) -> RingElement:
        """Image of a in F_q under the diagonal algebra map."""
        return self.element([a] * self.l)

    @property
    def one(self) -> RingElement:
        return self.scalar(1)

    @property
    def zero(self) -> RingElement:
        return self.scalar(0)

    def elements(self):
        import itertools

        for comps in itertools.product(range(self.field.q), repeat=self.l):
            yield self.element(comps)


@dataclass(frozen=True)
class RingElement:
    spec: RingSpec
    comps: tuple[int, ...]

    def __post_init__(self):
        if len(self.comps) != self.spec.l:
            raise ValueError(f"expected {self.spec.l} components, got {len(self.comps)}")

    def _zip(self, other, table):
        if other.spec != self.spec:
            raise ValueError("ring mismatch")
        return RingElement(self.spec, tuple(int(table[a, b]) for a, b in zip(self.comps, other.comps)))

    def __add__(self, other):
        return self._zip(other, self.spec.field.add)

    def __sub__(self, other):
        return self._zip(other, self.spec.field.sub)

    def __mul__(self, other):
        return self._zip(other, self.spec.field.mul)

    def __str__(self):
        f = self.spec.field
        return "(" + ", ".join(f.format(c) for c in self.comps) + ")"


@dataclass(frozen=True)
class ProductAut:
    """Theta = sigma^e_1 x ... x sigma^e_l."""

    exps: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) % self.m for e in self.exps))

    def component(self, i: int) -> FieldAut:
        return FieldAut(self.exps[i], self.m)


@dataclass(frozen=True)
class ProductDerivation:
    """Delta_{Theta,s}(r) = s (Theta(r) - r)."""

    s: RingElement


def apply_Theta(Theta: ProductAut, r: RingElement) -> RingElement:
    f = r.spec.field
    return r.spec.element(f.frobenius(c, e) for c, e in zip(r.comps, Theta.exps))


def apply_Delta(Delta: ProductDerivation, Theta: ProductAut, r: RingElement) -> RingElement:
    """The global formula s * (Theta(r) - r)."""
    return Delta.s * (apply_Theta(Theta, r) - r)


def apply_Delta_componentwise(Delta: ProductDerivation, Theta: ProductAut, r: RingElement) -> RingElement:
    """(delta_{theta_1,s_1}(r_1), ..., delta_{theta_l,s_l}(r_l))."""
    spec = r.spec
    out = []
    for i, c in enumerate(r.comps):
        ring = SkewRing(spec.field, Theta.exps[i], Delta.s.comps[i])
        out.append(ring.apply_delta(c))
    return spec.element(out)


def idempotent(i: int, spec: RingSpec) -> RingElement:
    """e_i with a 1 in slot i (1-based)."""
    if not 1 <= i <= spec.l:
        raise IndexError(f"idempotent index {i} outside 1..{spec.l}")
    return spec.element(1 if j == i - 1 else 0 for j in range(spec.l))


def is_unit(r: RingElement) -> bool:
    return all(c != 0 for c in r.comps)


class RSkewRing:
    """R[x; Theta, Delta_{Theta,s}] held as its l component rings."""

    def __init__(self, spec: RingSpec, Theta: ProductAut, s: RingElement):
        if len(Theta.exps) != spec.l:
            raise ValueError("Theta has the wrong number of components")
        self.spec = spec
        self.Theta = Theta
        self.s = s
        self.components = [SkewRing(spec.field, Theta.exps[i], s.comps[i]) for i in range(spec.l)]

    def __eq__(self, other):
        return isinstance(other, RSkewRing) and (self.spec, self.Theta, self.s) == (other.spec, other.Theta, other.s)

    def __hash__(self):
        return hash((self.spec, self.Theta, self.s))


@dataclass(frozen=True, eq=False)
class RSkewPoly:
    """A skew polynomial over R in CRT-split form."""

    ring: RSkewRing
    parts: tuple[SkewPoly, ...]

    def coefficients(self) -> list[RingElement]:
        """Joined form: coefficient k is the R-element of k-th coordinates."""
        spec = self.ring.spec
        deg = max((len(p.coeffs) for p in self.parts), default=0)
        return [spec.element(p.coeff(k) for p in self.parts) for k in range(deg)]

    def __mul__(self, other: RSkewPoly) -> RSkewPoly:
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return RSkewPoly(self.ring, tuple(skew_mul(a, b) for a, b in zip(self.parts, other.parts)))

    def __eq__(self, other):
        return isinstance(other, RSkewPoly) and self.ring == other.ring and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)


def crt_join(ring: RSkewRing, parts) -> RSkewPoly:
    parts = tuple(parts)
    if len(parts) != ring.spec.l:
        raise ValueError("need one component polynomial per coordinate")
    for p, comp in zip(parts, ring.components):
        if p.ring != comp:
            raise ValueError("component polynomial lives in the wrong ring")
    return RSkewPoly(ring, parts)


def crt_split(F: RSkewPoly) -> list[SkewPoly]:
    return list(F.parts)


def from_coefficients(ring: RSkewRing, coeffs: list[RingElement]) -> RSkewPoly:
    """Split a joined-form polynomial (list of R coefficients)."""
    parts = []
    for i, comp in enumerate(ring.components):
        parts.append(SkewPoly(comp, tuple(c.comps[i] for c in coeffs)))
    return RSkewPoly(ring, tuple(parts))


def joined_mul(ring: RSkewRing, F: list[RingElement], G: list[RingElement]) -> list[RingElement]:
    """Product in R[x; Theta, Delta] computed on joined coefficients with
    the R-level rule x r = Theta(r) x + Delta(r); independent of crt_split."""
    spec = ring.spec
    Delta = ProductDerivation(ring.s)
    if not F or not G:
        return []
    acc = [spec.zero] * (len(F) + len(G) - 1)
    cur = list(G)
    for i, fi in enumerate(F):
        if i:
            nxt = [spec.zero] * (len(cur) + 1)
            for j, c in enumerate(cur):
                nxt[j + 1] = nxt[j + 1] + apply_Theta(ring.Theta, c)
                nxt[j] = nxt[j] + apply_Delta(Delta, ring.Theta, c)
            cur = nxt
        for j, c in enumerate(cur):
            acc[j] = acc[j] + fi * c
    while acc and all(v == 0 for v in acc[-1].comps):
        acc.pop()
    return acc
