"""The skew polynomial ring F_q[x; theta, delta] with delta = s(theta - Id).

Multiplication follows the commutation rule ``x r = theta(r) x + delta(r)``:
left multiplication by ``x`` is a cheap map on coefficient vectors, and a
general product ``f g`` is assembled as ``sum_i f_i (x^i g)``.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from .gf import GF, FieldAut, FieldElement, FieldError

NEG_INF = -math.inf


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive search would exceed its configured budget."""


class SkewRing:
    """Context for F_q[x; sigma_p^theta_exp, s(theta - Id)]."""

    def __init__(self, field: GF, theta_exp: int = 0, s: int | FieldElement = 0):
        self.field = field
        self.theta = FieldAut(theta_exp, field.m)
        if isinstance(s, FieldElement):
            s = s.value
        self.s = int(s)
        self._theta = [int(v) for v in field.frobenius_table(self.theta.exponent)]
        sub, mul = field.sub, field.mul
        self._delta = [int(mul[self.s, sub[self._theta[a], a]]) for a in range(field.q)]

    @property
    def theta_exp(self) -> int:
        return self.theta.exponent

    @property
    def has_derivation(self) -> bool:
        return any(self._delta)

    def _key(self):
        return (self.field, self.theta.exponent, self.s)

    def __eq__(self, other):
        return isinstance(other, SkewRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        s = self.field.format(self.s)
        return f"SkewRing(F_{self.field.q}, theta=sigma^{self.theta_exp}, s={s})"

    def apply_theta(self, a: int) -> int:
        return self._theta[a]

    def apply_delta(self, a: int) -> int:
        return self._delta[a]

    def theta_power(self, a: int, k: int) -> int:
        for _ in range(k % self.field.m if self.field.m else 0):
            a = self._theta[a]
        return a

    # -- constructors --------------------------------------------------------

    def poly(self, coeffs) -> SkewPoly:
        return SkewPoly(self, tuple(int(c) for c in coeffs))

    def parse(self, text: str) -> SkewPoly:
        return SkewPoly(self, parse_poly_coeffs(text, self.field))

    @cached_property
    def one(self) -> SkewPoly:
        return SkewPoly(self, (1,))

    @cached_property
    def zero(self) -> SkewPoly:
        return SkewPoly(self, ())

    @cached_property
    def x(self) -> SkewPoly:
        return SkewPoly(self, (0, 1))

    def xn_minus(self, n: int, alpha: int | FieldElement) -> SkewPoly:
        """The polynomial x^n - alpha."""
        if isinstance(alpha, FieldElement):
            alpha = alpha.value
        c = [0] * (n + 1)
        c[0] = int(self.field.neg[alpha])
        c[n] = int(self.field.add[c[n], 1])
        return SkewPoly(self, tuple(c))

    def to_json(self) -> dict:
        return {"theta_exp": self.theta_exp, "s": self.field.format(self.s)}


@dataclass(frozen=True, eq=False)
class SkewPoly:
    """Coefficients (constant first, no trailing zeros) in a fixed ring."""

    ring: SkewRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def field(self) -> GF:
        return self.ring.field

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> list[int]:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def _check(self, other: SkewPoly) -> None:
        if not isinstance(other, SkewPoly) or other.ring != self.ring:
            raise ValueError("skew polynomials live in different rings")

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other: SkewPoly) -> SkewPoly:
        self._check(other)
        return SkewPoly(self.ring, _add(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other: SkewPoly) -> SkewPoly:
        self._check(other)
        neg = self.field.neg
        return SkewPoly(self.ring, _add(self.field, self.coeffs, [int(neg[c]) for c in other.coeffs]))

    def __neg__(self) -> SkewPoly:
        neg = self.field.neg
        return SkewPoly(self.ring, tuple(int(neg[c]) for c in self.coeffs))

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return skew_mul(self, other)

    def scale_left(self, u: int) -> SkewPoly:
        """The product u * f for a constant u (plain coefficient scaling)."""
        mul = self.field.mul
        return SkewPoly(self.ring, tuple(int(mul[u, c]) for c in self.coeffs))

    def monic(self) -> SkewPoly:
        if self.is_zero():
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        return self.scale_left(int(self.field.inv[self.lead]))

    def __str__(self):
        return format_poly(self.coeffs, self.field)

    def __repr__(self):
        return f"SkewPoly({self})"

    def to_json(self) -> dict:
        return {
            "coeffs": [self.field.format(c) for c in self.coeffs],
            **self.ring.to_json(),
        }


def _add(field: GF, a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    add = field.add
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(int(add[x, y]))
    return tuple(out)


def x_times(ring: SkewRing, coeffs) -> list[int]:
    """Coefficients of x * c(x): theta shifts up, delta stays in place."""
    field = ring.field
    out = [0] * (len(coeffs) + 1)
    th, de, add = ring._theta, ring._delta, field.add
    for j, c in enumerate(coeffs):
        if c:
            out[j + 1] = int(add[out[j + 1], th[c]])
            out[j] = int(add[out[j], de[c]])
    return out


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._check(g)
    ring, field = f.ring, f.field
    if f.is_zero() or g.is_zero():
        return ring.zero
    add, mul = field.add, field.mul
    acc = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    cur = list(g.coeffs)
    for i, fi in enumerate(f.coeffs):
        if i:
            cur = x_times(ring, cur)
        if fi:
            for j, c in enumerate(cur):
                if c:
                    acc[j] = int(add[acc[j], mul[fi, c]])
    return SkewPoly(ring, tuple(acc))


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return (q, r) with f = q*g + r and r = 0 or deg r < deg g."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    ring, field = f.ring, f.field
    dg = len(g.coeffs) - 1
    r = list(f.coeffs)
    while r and r[-1] == 0:
        r.pop()
    if len(r) - 1 < dg:
        return ring.zero, SkewPoly(ring, tuple(r))
    span = len(r) - 1 - dg
    shifted = [list(g.coeffs)]
    for _ in range(span):
        shifted.append(x_times(ring, shifted[-1]))
    quot = [0] * (span + 1)
    sub, mul, inv = field.sub, field.mul, field.inv
    while len(r) - 1 >= dg:
        d = len(r) - 1 - dg
        xg = shifted[d]
        c = int(mul[r[-1], inv[xg[-1]]])
        quot[d] = c
        for j, v in enumerate(xg):
            if v:
                r[j] = int(sub[r[j], mul[c, v]])
        while r and r[-1] == 0:
            r.pop()
    return SkewPoly(ring, tuple(quot)), SkewPoly(ring, tuple(r))


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    return right_divmod(f, g)[1].is_zero()


def h_dagger(h: SkewPoly, n: int | None = None) -> SkewPoly:
    """h^dagger(x) = h_d + theta(h_{d-1}) x + ... + theta^d(h_0) x^d, d = deg h."""
    if h.ring.has_derivation:
        raise ValueError("h-dagger is defined for zero derivation only")
    if h.is_zero():
        return h
    d = len(h.coeffs) - 1
    if n is not None and d > n:
        raise ValueError(f"deg h = {d} exceeds n = {n}")
    ring = h.ring
    return SkewPoly(ring, tuple(ring.theta_power(h.coeffs[d - i], i) for i in range(d + 1)))


def is_central(n: int, alpha: int | FieldElement, ring: SkewRing) -> bool:
    """theta(alpha) = alpha and ord(theta) | n, so x^n - alpha is central."""
    if isinstance(alpha, FieldElement):
        alpha = alpha.value
    if ring.has_derivation:
        raise ValueError("centrality test assumes zero derivation")
    return ring.apply_theta(alpha) == alpha and n % ring.theta.order == 0


def candidate_count(ring: SkewRing, r: int) -> int:
    return ring.field.q**r


def candidate(ring: SkewRing, r: int, index: int) -> SkewPoly:
    """The index-th monic degree-r polynomial; lower coefficients are the
    base-q digits of ``index`` (constant term least significant)."""
    q = ring.field.q
    cs = []
    for _ in range(r):
        index, d = divmod(index, q)
        cs.append(d)
    return SkewPoly(ring, tuple(cs) + (1,))


def iter_right_divisors(
    n: int, alpha: int, r: int, ring: SkewRing, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, SkewPoly]]:
    """(index, g) for monic degree-r right divisors of x^n - alpha in a
    shard [start, stop) of the candidate index range."""
    f = ring.xn_minus(n, alpha)
    stop = candidate_count(ring, r) if stop is None else stop
    for idx in range(start, stop):
        g = candidate(ring, r, idx)
        if right_divmod(f, g)[1].is_zero():
            yield idx, g


def enumerate_monic_right_divisors(
    n: int, alpha: int | FieldElement, r: int, ring: SkewRing, budget: int = 1 << 20
) -> list[SkewPoly]:
    if isinstance(alpha, FieldElement):
        alpha = alpha.value
    if not 0 <= r <= n:
        raise ValueError("divisor degree must lie in [0, n]")
    if candidate_count(ring, r) > budget:
        raise BudgetExceeded(f"{ring.field.q}^{r} candidates exceed budget {budget}")
    return [g for _, g in iter_right_divisors(n, alpha, r, ring)]


# -- text grammar ------------------------------------------------------------


def parse_poly_coeffs(text: str, field: GF) -> tuple[int, ...]:
    """Parse ``(w+1)x^3 + 2wx^2 + x + w + 1`` style text into coefficients."""
    from .gf import _split_terms

    s = text.replace(" ", "").replace("−", "-")
    if not s:
        raise FieldError("empty polynomial text")
    out: dict[int, int] = {}
    for sign, term in _split_terms(s):
        depth, xpos = 0, -1
        for i, ch in enumerate(term):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "x" and depth == 0:
                xpos = i
        if xpos < 0:
            coef_txt, k = term, 0
        else:
            coef_txt = term[:xpos].rstrip("*")
            rest = term[xpos + 1 :]
            if rest == "":
                k = 1
            elif rest.startswith("^") and rest[1:].isdigit():
                k = int(rest[1:])
            else:
                raise FieldError(f"bad exponent in term {term!r}")
        if coef_txt in ("", "+"):
            c = 1
        else:
            c = field.parse(coef_txt)
        if sign < 0:
            c = int(field.neg[c])
        out[k] = int(field.add[out.get(k, 0), c])
    deg = max(out)
    return tuple(out.get(i, 0) for i in range(deg + 1))


def format_poly(coeffs, field: GF) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        ctxt = field.format(c)
        if k == 0:
            parts.append(ctxt)
            continue
        mono = "x" if k == 1 else f"x^{k}"
        if c == 1:
            parts.append(mono)
        elif "+" in ctxt:
            parts.append(f"({ctxt}){mono}")
        else:
            parts.append(f"{ctxt}{mono}")
    return "+".join(parts) if parts else "0"
