"""Code-spec files: parsing, the verification pipeline and claim comparison.

A spec file is JSON::

    {"field": {"p": 3, "m": 2, "modulus": [2, 2, 1]},
     "ring": {"l": 2, "theta_exps": [1, 1], "s": ["0", "0"], "a": ["1", "2"]},
     "n": 4,
     "generators": ["2x+w+1", "2wx^2+2wx+w"],
     "gray": {"matrix": [["2w", "w"], ["w", "w"]]},
     "construction": "euclidean" | "annihilator" | "none",
     "claims": {"code": [8, 5, 4], "quantum": {"n": 8, "k": 2, "d": 4, "bound": false},
                "marker": "*", "code_remark": "MDS", "quantum_remark": "MDS",
                "cofactors": [...], "dual_generators": [...]},
     "notes": [...]}

Claims are metadata: they are compared against computed values, never used
to compute them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .codes import (
    FqCyclicSpec,
    LinearCode,
    RCodeSpec,
    best_distance,
    build_r_code,
    closure_check,
    euclidean_dual,
    generator_matrix_fq,
)
from .duality import (
    HypothesisError,
    annihilator_dual,
    cofactor_h,
    duality_report,
    is_annihilator_dual_containing,
)
from .gf import GF, FieldError
from .gray import GrayMapSpec, check_orthogonality_matrix, gray_image
from .linalg import Matrix, same_row_space
from .quantum import (
    ALMOST_MDS,
    MDS,
    QuantumParams,
    css_annihilator,
    css_from_r_code,
    quantum_dimension,
    quantum_dimension_literal,
)
from .ring import ProductAut, RingSpec
from .skewpoly import SkewPoly, SkewRing, h_dagger, right_divmod, skew_mul
from .weights import DEFAULT_BUDGET

GROUPS = ("examples", "table1", "table2", "table3")

REPRODUCED = "REPRODUCED"
BOUND_ONLY = "BOUND-ONLY"
MISMATCH = "MISMATCH"

OK, BOUND, BAD, INFO = "ok", "bound", "mismatch", "info"


class SpecError(ValueError):
    """The spec file is malformed or inconsistent."""


@dataclass
class CodeSpecFile:
    id: str
    spec: RCodeSpec
    gray: GrayMapSpec
    construction: str
    claims: dict
    notes: list[str]
    printed: list[SkewPoly]

    @property
    def field(self) -> GF:
        return self.spec.field


def _parse_gray(field: GF, l: int, data: dict | None) -> GrayMapSpec:
    if data is None:
        return GrayMapSpec.broadcast(Matrix.identity(field, l))
    return GrayMapSpec.from_json(field, data)


def parse_spec(data: dict, ident: str = "<spec>") -> CodeSpecFile:
    """Build a CodeSpecFile; any structural problem raises SpecError."""
    try:
        field = GF.from_json(data["field"])
        r = data["ring"]
        l = int(r["l"])
        ring = RingSpec(field, l)
        exps = [int(e) for e in r.get("theta_exps", [0] * l)]
        if len(exps) != l:
            raise SpecError("theta_exps has the wrong length")
        s = ring.parse(r.get("s", ["0"] * l))
        a = ring.parse(r.get("a", ["1"] * l))
        n = int(data["n"])
        gens_text = data["generators"]
        if len(gens_text) != l:
            raise SpecError(f"expected {l} generators, got {len(gens_text)}")
        notes = list(data.get("notes", []))
        printed, gens = [], []
        for i, text in enumerate(gens_text):
            comp = SkewRing(field, exps[i], s.comps[i])
            g = comp.parse(text)
            if g.is_zero():
                raise SpecError(f"generator {i + 1} is zero")
            printed.append(g)
            if not g.is_monic():
                notes.append(f"generator {i + 1} scaled to monic: {g.monic()}")
            gens.append(g.monic())
        spec = RCodeSpec(n, ring, ProductAut(exps, field.m), s, a, gens)
        gray = _parse_gray(field, l, data.get("gray"))
        gray.check_length(n)
        construction = data.get("construction", "none")
        if construction not in ("none", "euclidean", "annihilator"):
            raise SpecError(f"unknown construction {construction!r}")
    except SpecError:
        raise
    except (KeyError, TypeError, ValueError, FieldError, IndexError) as exc:
        raise SpecError(f"{ident}: {exc}") from exc
    return CodeSpecFile(data.get("id", ident), spec, gray, construction, dict(data.get("claims", {})), notes, printed)


def load_spec(path_or_id: str | Path) -> CodeSpecFile:
    """Load from a file path, or from a bundled id such as ``table1/row10``."""
    path = Path(path_or_id)
    try:
        if path.exists():
            text = path.read_text()
        else:
            name = str(path_or_id).removesuffix(".json")
            if "/" not in name:
                name = f"examples/{name}"
            text = resources.files("skewcodes.corpus").joinpath(f"{name}.json").read_text()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read spec {path_or_id}: {exc}") from exc
    return parse_spec(data, str(path_or_id))


def corpus_ids(group: str) -> list[str]:
    if group not in GROUPS:
        raise SpecError(f"unknown corpus group {group!r}")
    root = resources.files("skewcodes.corpus").joinpath(group)
    return sorted(f"{group}/{p.name.removesuffix('.json')}" for p in root.iterdir() if p.name.endswith(".json"))


# -- evaluation ---------------------------------------------------------------


@dataclass
class Check:
    name: str
    status: str
    computed: object = None
    claimed: object = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "computed": self.computed, "claimed": self.claimed, "detail": self.detail}


@dataclass
class Evaluation:
    id: str
    checks: list[Check] = dc_field(default_factory=list)
    code: dict | None = None
    quantum: QuantumParams | None = None
    notes: list[str] = dc_field(default_factory=list)

    def add(self, *args, **kwargs) -> Check:
        c = Check(*args, **kwargs)
        self.checks.append(c)
        return c

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if BAD in states:
            return MISMATCH
        if BOUND in states:
            return BOUND_ONLY
        return REPRODUCED

    def diagnostics(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.status not in (BAD, BOUND):
                continue
            parts = [] if c.computed is None and c.claimed is None else [f"computed {c.computed}, claimed {c.claimed}"]
            if c.detail:
                parts.append(c.detail)
            out.append(f"{c.name}: " + "; ".join(parts) if parts else c.name)
        return out

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "code": self.code,
            "quantum": None if self.quantum is None else self.quantum.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "notes": self.notes,
        }


def _code_text(n, k, d, exact) -> str:
    dt = "?" if d is None else (str(d) if exact else f"<={d}")
    return f"[{n}, {k}, {dt}]"


def _claim_text(c: dict) -> str:
    return f"[[{c['n']}, {c['k']}, {'>=' if c.get('bound') else ''}{c['d']}]]"


def _check_factorizations(ev: Evaluation, cs: CodeSpecFile) -> None:
    claims = cs.claims
    spec = cs.spec
    cof = claims.get("cofactors")
    if not cof:
        return
    hs = []
    for i, (text, g) in enumerate(zip(cof, cs.printed)):
        comp = g.ring
        h = comp.parse(text)
        target = comp.xn_minus(spec.n, spec.a.comps[i])
        quotient = right_divmod(target, g)[0]
        ok = skew_mul(h, g) == target and quotient == h
        ev.add(f"factorization {i + 1}", OK if ok else BAD, str(quotient), str(h), "" if ok else "h g differs from x^n - a")
        hs.append(h)
    duals = claims.get("dual_generators")
    if duals:
        for i, (text, h) in enumerate(zip(duals, hs)):
            hd = h_dagger(h)
            claimed = h.ring.parse(text)
            ok = hd == claimed
            ev.add(f"h-dagger {i + 1}", OK if ok else BAD, str(hd), str(claimed))


def _compare_code(ev: Evaluation, claim, n, k, d, exact, remark) -> None:
    if claim is None:
        return
    cn, ck, cd = claim
    ev.add("length", OK if cn == n else BAD, n, cn)
    ev.add("dimension", OK if ck == k else BAD, k, ck)
    if d is None:
        ev.add("distance", BAD, None, cd, "empty code")
    elif exact:
        ev.add("distance", OK if d == cd else BAD, d, cd)
    elif cd > d:
        ev.add("distance", BAD, f"<={d}", cd, f"a codeword of weight {d} exists")
    else:
        ev.add("distance", BOUND, f"<={d}", cd, "exact distance beyond budget")
    if remark in ("MDS", "Almost MDS") and d is not None:
        target = n - k + 1 if remark == "MDS" else n - k
        if exact:
            ev.add("classical remark", OK if d == target else BAD, d, f"{remark} (d={target})")
        else:
            ev.add("classical remark", BOUND, f"<={d}", f"{remark} (d={target})")


def _compare_quantum(ev: Evaluation, qp: QuantumParams, claims: dict) -> None:
    claim = claims.get("quantum")
    if claim is None:
        return
    ev.add("quantum length", OK if qp.n == claim["n"] else BAD, qp.n, claim["n"])
    ev.add("quantum dimension", OK if qp.k == claim["k"] else BAD, qp.k, claim["k"])
    cd, cbound = claim["d"], bool(claim.get("bound"))
    limit = (qp.n - qp.k + 2) // 2
    if cd > limit:
        ev.add("quantum Singleton", BAD, limit, cd, f"2d <= n-k+2 allows at most d = {limit}")
    if qp.d is None:
        ev.add("quantum distance", BOUND, qp.d_text, _claim_text(claim), "exact distance beyond budget")
    elif qp.d_exact:
        ok = qp.d >= cd if cbound else qp.d == cd
        ev.add("quantum distance", OK if ok else BAD, qp.d_text, _claim_text(claim))
    elif cbound and qp.d >= cd:
        ev.add("quantum distance", OK, qp.d_text, _claim_text(claim))
    elif qp.k == 0 and qp.d == cd:
        # [[n, 0]]: the distance is the minimum weight of C itself
        ev.add("quantum distance", OK, qp.d_text, _claim_text(claim), "k = 0: distance of the stabilizer code C")
    elif qp.d > cd and not cbound:
        ev.add("quantum distance", BAD, qp.d_text, _claim_text(claim), "lower bound exceeds the claimed distance")
    else:
        ev.add("quantum distance", BOUND, qp.d_text, _claim_text(claim), "only a lower bound is known")
    wanted = None
    marker = claims.get("marker")
    if marker:
        wanted = MDS if marker == "*" else ALMOST_MDS
    elif claims.get("quantum_remark") in ("MDS", "Almost MDS"):
        wanted = MDS if claims["quantum_remark"] == "MDS" else ALMOST_MDS
    if wanted is not None:
        if qp.d is None:
            ev.add("quantum class", BOUND, "unknown", wanted)
        else:
            ev.add("quantum class", OK if qp.classification == wanted else BAD, qp.classification, wanted)


def evaluate(cs: CodeSpecFile, budget: int = DEFAULT_BUDGET, workers: int = 1, method: str = "auto") -> Evaluation:
    """Run the whole pipeline on one spec and compare with its claims."""
    spec = cs.spec
    ev = Evaluation(cs.id, notes=list(cs.notes))
    # divisibility
    valid = True
    for i, comp in enumerate(spec.components()):
        ok = comp.is_valid()
        valid &= ok
        ev.add(
            f"divisor {i + 1}",
            OK if ok else BAD,
            detail="" if ok else f"g_{i + 1} is not a right divisor of x^{spec.n} - {spec.field.format(comp.alpha)}",
        )
    if not valid:
        return ev
    _check_factorizations(ev, cs)
    code = build_r_code(spec)
    ev.add("closure", OK if closure_check(spec, code) else BAD)
    image = gray_image(code, cs.gray)
    d, exact, used = best_distance(image, budget, workers, method)
    ev.code = {"n": image.n, "k": image.k, "d": d, "exact": exact, "q": image.q, "method": used}
    _compare_code(ev, cs.claims.get("code"), image.n, image.k, d, exact, cs.claims.get("code_remark"))
    if cs.construction == "euclidean":
        _euclidean(ev, cs, code, image, (d, exact), budget, workers, method)
    elif cs.construction == "annihilator":
        _annihilator(ev, cs, (d, exact), budget, workers, method)
    return ev


def _euclidean(ev, cs, code, image, distance, budget, workers, method) -> None:
    spec = cs.spec
    contained = True
    for i, comp in enumerate(spec.components()):
        try:
            rep = duality_report(comp)
        except HypothesisError as exc:
            ev.add(f"dual theory {i + 1}", BAD, detail=str(exc))
            return
        if not rep.hypotheses_met:
            ev.add(f"dual theory {i + 1}", BAD, detail="hypotheses not met")
            return
        lin = code.components[i]
        dual = euclidean_dual(lin)
        gen = generator_matrix_fq(FqCyclicSpec(spec.n, comp.ring, int(spec.field.inv[comp.alpha]), rep.euclidean_dual_gen))
        ev.add(f"dual generator {i + 1}", OK if same_row_space(gen.G, dual.G) else BAD, str(rep.euclidean_dual_gen))
        by_linalg = lin.contains_code(dual)
        if by_linalg != rep.dual_containing:
            ev.add(f"containment oracle {i + 1}", BAD, rep.dual_containing, by_linalg, "criterion disagrees with linear algebra")
        contained &= rep.dual_containing
    ev.add("dual containing", OK if contained else BAD, contained, True)
    ok, lam = check_orthogonality_matrix(cs.gray)
    ev.add("orthogonal Gray matrix", OK if ok else BAD, None if lam is None else spec.field.format(lam))
    if not (contained and ok):
        return
    k_lit, k_q = quantum_dimension_literal(spec), quantum_dimension(spec)
    if k_lit != k_q:
        ev.notes.append(f"quantum dimension 2*sum(k_i) - nl = {k_q}; sum(k_i) - nl would give {k_lit}")
    qp = css_from_r_code(spec, cs.gray, budget, workers, method, image=image, distance=distance)
    ev.quantum = qp
    _compare_quantum(ev, qp, cs.claims)


def _annihilator(ev, cs, distance, budget, workers, method) -> None:
    spec = cs.spec
    if spec.l != 1:
        ev.add("annihilator construction", BAD, detail="needs l = 1")
        return
    comp = spec.component_spec(0)
    try:
        contained = is_annihilator_dual_containing(spec.n, comp.alpha, comp.g)
        h = cofactor_h(spec.n, comp.alpha, comp.g)
    except HypothesisError as exc:
        ev.add("annihilator construction", BAD, detail=str(exc))
        return
    code = generator_matrix_fq(comp)
    by_linalg = code.contains_code(annihilator_dual(comp))
    ev.add("g divides h", OK if contained else BAD, str(h))
    if by_linalg != contained:
        ev.add("containment oracle", BAD, contained, by_linalg, "criterion disagrees with linear algebra")
    if not contained:
        return
    qp = css_annihilator(comp, budget, workers, method, distance=distance)
    ev.quantum = qp
    _compare_quantum(ev, qp, cs.claims)
