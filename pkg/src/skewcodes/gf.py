"""Arithmetic in F_q = F_p[w]/(f(w)) and its Frobenius automorphisms.

An element is stored as the integer whose base-p digits are its coefficient
vector (constant term first), so ``w`` is ``p`` and ``w + 1`` is ``p + 1``.
All arithmetic goes through dense lookup tables that are built once per field
from plain polynomial arithmetic on coefficient vectors.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_ORDER = 1024

# constant term first
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # w^2 + w + 1
    (2, 3): (1, 1, 0, 1),  # w^3 + w + 1
    (3, 2): (2, 2, 1),  # w^2 + 2w + 2
    (2, 4): (1, 1, 0, 0, 1),  # w^4 + w + 1
}


class FieldError(ValueError):
    """Raised for invalid field specifications or element text."""


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


# -- polynomials over F_p as coefficient tuples (constant first) -------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod_p(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _polymod_p(list(modulus), list(tail) + [1], p):
                return False
    return True


# -- the field ---------------------------------------------------------------


class GF:
    """The finite field F_{p^m} with a fixed monic irreducible modulus.

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree ``m`` over F_p, constant term
        first.  Defaults to :data:`DEFAULT_MODULI` or, failing that, the first
        polynomial (in lexicographic order) whose root is primitive.  For a
        prime field the default is ``x - g`` with ``g`` the least primitive
        root, so that ``w`` names a generator of F_p^x in every field.
    require_primitive : bool
        Reject moduli whose root ``w`` is not a primitive element.
    """

    def __init__(self, p: int, m: int = 1, modulus=None, *, require_primitive: bool = False):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        if p**m > MAX_ORDER:
            raise FieldError(f"fields larger than {MAX_ORDER} elements are not supported")
        self.p = p
        self.m = m
        self.q = p**m
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, m)) or self._find_primitive_modulus()
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}: {modulus}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._build_tables()
        if require_primitive and not self.is_primitive(self.w):
            raise FieldError(f"w is not primitive for modulus {modulus}")

    def _find_primitive_modulus(self) -> tuple[int, ...]:
        p, m = self.p, self.m
        if m == 1:
            g = next(g for g in range(1, p) if p == 2 or all(pow(g, (p - 1) // r, p) != 1 for r in _prime_factors(p - 1)))
            return ((-g) % p, 1)
        for tail in itertools.product(range(p), repeat=m):
            cand = tuple(tail) + (1,)
            if cand[0] == 0 or not is_irreducible(cand, p):
                continue
            trial = GF.__new__(GF)
            trial.p, trial.m, trial.q, trial.modulus = p, m, p**m, cand
            trial._build_tables()
            if trial.is_primitive(trial.w):
                return cand
        raise FieldError(f"no primitive modulus found for F_{p}^{m}")  # pragma: no cover

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        digits = np.array([[(v // p**i) % p for i in range(m)] for v in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        add = (digits[:, None, :] + digits[None, :, :]) % p
        self.add = (add @ weights).astype(np.int64)
        self.neg = ((-digits) % p) @ weights
        self.sub = self.add[:, self.neg]
        mod = list(self.modulus)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            da = digits[a]
            for b in range(a, q):
                prod = np.convolve(da, digits[b]) % p
                rem = _polymod_p(prod.tolist(), mod, p)
                v = sum(c * p**i for i, c in enumerate(rem))
                mul[a, b] = mul[b, a] = v
        self.mul = mul
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
        self.inv = inv
        # sigma_p: a -> a^p
        elems = np.arange(q, dtype=np.int64)
        power = np.ones(q, dtype=np.int64)
        for _ in range(p):
            power = mul[power, elems]
        self.frob = power
        self.digits = digits

    # -- identity and display ------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.p}, {self.m}, modulus={self.modulus})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @cached_property
    def w(self) -> int:
        """Index of the class of the indeterminate."""
        if self.m == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    @property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint16

    # -- scalar arithmetic on indices ---------------------------------------

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = int(self.inv[a]), -e
        r = 1
        while e:
            if e & 1:
                r = int(self.mul[r, a])
            a = int(self.mul[a, a])
            e >>= 1
        return r

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = int(self.mul[x, a])
            k += 1
        return k

    def is_primitive(self, a: int) -> bool:
        return a != 0 and self.order(a) == self.q - 1

    def frobenius(self, a: int, e: int = 1) -> int:
        e %= self.m
        for _ in range(e):
            a = int(self.frob[a])
        return a

    def frobenius_table(self, e: int) -> np.ndarray:
        """Lookup table of sigma_p^e over all elements."""
        t = np.arange(self.q, dtype=np.int64)
        for _ in range(e % self.m):
            t = self.frob[t]
        return t

    def prime_subfield(self) -> list[int]:
        return list(range(self.p))

    # -- conversion ----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.digits[a])

    def from_coeffs(self, coeffs) -> int:
        cs = [int(c) % self.p for c in coeffs]
        if len(cs) > self.m:
            cs = _polymod_p(cs, list(self.modulus), self.p)
        return sum(c * self.p**i for i, c in enumerate(cs))

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, str):
            return FieldElement(self, parse_index(value, self))
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        return FieldElement(self, self.from_coeffs(value))

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise FieldError(f"index {index} outside [0, {self.q})")
        return FieldElement(self, int(index))

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> GF:
        return cls(int(data["p"]), int(data.get("m", 1)), data.get("modulus"))

    def format(self, a: int) -> str:
        return format_index(a, self)

    def parse(self, text: str) -> int:
        return parse_index(text, self)


@dataclass(frozen=True)
class FieldElement:
    """A value of F_q bound to its field; supports the usual operators."""

    field: GF
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("field mismatch")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.add[self.value, b]))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.sub[self.value, b]))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.sub[b, self.value]))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg[self.value]))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, int(self.field.mul[self.value, b]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * ff_inv(FieldElement(self.field, self._other(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> FieldElement:
        return ff_inv(self)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __str__(self):
        return format_index(self.value, self.field)

    def __repr__(self):
        return f"FieldElement({self})"


@dataclass(frozen=True)
class FieldAut:
    """sigma_p^exponent; exponent 0 is the identity."""

    exponent: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.m)

    def compose(self, other: FieldAut) -> FieldAut:
        if other.m != self.m:
            raise FieldError("automorphisms of different fields")
        return FieldAut(self.exponent + other.exponent, self.m)

    def __matmul__(self, other: FieldAut) -> FieldAut:
        return self.compose(other)

    @property
    def order(self) -> int:
        from math import gcd

        return self.m // gcd(self.exponent, self.m)

    @property
    def is_identity(self) -> bool:
        return self.exponent == 0


# -- free functions ----------------------------------------------------------


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldError("field mismatch")


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a + b


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a * b


def ff_inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError("zero has no inverse in F_q")
    return FieldElement(a.field, int(a.field.inv[a.value]))


def apply_aut(theta: FieldAut, a: FieldElement) -> FieldElement:
    """Return a^(p^e) by repeated p-th powering."""
    f = a.field
    x = a.value
    for _ in range(theta.exponent):
        x = f.pow(x, f.p)
    return FieldElement(f, x)


def enumerate_field(field: GF) -> list[FieldElement]:
    """All elements, ordered lexicographically on the coefficient vector
    read from the leading coefficient down."""
    order = sorted(range(field.q), key=lambda v: field.coeffs(v)[::-1])
    return [FieldElement(field, v) for v in order]


def parse_element(text: str, field: GF) -> FieldElement:
    return FieldElement(field, parse_index(text, field))


def format_element(a: FieldElement) -> str:
    return format_index(a.value, a.field)


# -- text grammar ------------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(w(?:\^(\d+))?)?$")


def parse_index(text: str, field: GF) -> int:
    """Parse ``c_k*w^k + ... + c_0`` (``*`` optional, ``-`` allowed)."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1]
    if not s:
        raise FieldError("empty element text")
    p = field.p
    coeffs: dict[int, int] = {}
    for sign, term in _split_terms(s):
        mt = _TERM.match(term)
        if not mt or (not mt.group(1) and not mt.group(2)):
            raise FieldError(f"cannot parse field element term {term!r} in {text!r}")
        c = int(mt.group(1)) if mt.group(1) else 1
        if c >= p:
            raise FieldError(f"coefficient {c} out of range [0, {p}) in {text!r}")
        k = int(mt.group(3) or 1) if mt.group(2) else 0
        if field.m == 1 and k:
            # prime field: w is a concrete primitive root
            c, k = c * field.pow(field.w, k) % p, 0
        coeffs[k] = (coeffs.get(k, 0) + sign * c) % p
    deg = max(coeffs)
    vec = [coeffs.get(i, 0) for i in range(deg + 1)]
    return field.from_coeffs(vec)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def _split_terms(s: str):
    terms, depth, start, sign = [], 0, 0, 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    for i in range(start, len(s)):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            terms.append((sign, s[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
    terms.append((sign, s[start:]))
    if any(not t for _, t in terms):
        raise FieldError(f"malformed expression {s!r}")
    return terms


def format_index(a: int, field: GF) -> str:
    if field.m == 1:
        return str(a)
    cs = field.coeffs(a)
    parts = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        mono = "w" if k == 1 else f"w^{k}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"
