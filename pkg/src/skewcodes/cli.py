"""Command-line front end.

Exit codes: 0 when every claim matches (or is only bounded), 1 on a
mismatch, 2 on a malformed spec or a refused computation.
"""

from __future__ import annotations

import csv
import json
import sys

import click
import numpy as np

from .codes import (
    FqCyclicSpec,
    LinearCode,
    best_distance,
    build_r_code,
    generator_matrix_fq,
    macwilliams_min_distance,
    min_distance,
)
from .duality import HypothesisError, duality_report, is_annihilator_dual_containing
from .gf import GF, FieldError
from .gray import gray_image
from .linalg import Matrix
from .pipeline import (
    BAD,
    GROUPS,
    MISMATCH,
    Evaluation,
    SpecError,
    corpus_ids,
    evaluate,
    load_spec,
)
from .skewpoly import BudgetExceeded, SkewRing, enumerate_monic_right_divisors, format_poly
from .weights import DEFAULT_BUDGET

SCHEMA_VERSION = 1


class Budget(click.ParamType):
    """Integers written as 67108864, 2^26 or 1<<26."""

    name = "budget"

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            return value
        text = str(value).replace(" ", "")
        try:
            if "^" in text:
                b, e = text.split("^")
                return int(b) ** int(e)
            if "<<" in text:
                b, e = text.split("<<")
                return int(b) << int(e)
            return int(text)
        except ValueError:
            self.fail(f"{value!r} is not a budget", param, ctx)


BUDGET = Budget()
budget_opt = click.option("--budget", type=BUDGET, default=DEFAULT_BUDGET, show_default=True, help="Max enumerated codewords.")
workers_opt = click.option("--workers", type=click.IntRange(1), default=1, show_default=True, help="Worker processes.")
json_opt = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
method_opt = click.option(
    "--method", type=click.Choice(["auto", "direct", "macwilliams"]), default="auto", show_default=True
)


def _dump(obj) -> None:
    click.echo(json.dumps({"schema": SCHEMA_VERSION, **obj}, indent=2))


def _fail_spec(exc: Exception):
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


def _code_str(code: dict | None) -> str:
    if code is None:
        return "-"
    d = "-" if code["d"] is None else (str(code["d"]) if code["exact"] else f"<={code['d']}")
    return f"[{code['n']}, {code['k']}, {d}]_{code['q']}"


def _claim_code(claims: dict) -> str:
    c = claims.get("code")
    return "-" if c is None else f"[{c[0]}, {c[1]}, {c[2]}]"


def _claim_quantum(claims: dict) -> str:
    c = claims.get("quantum")
    if c is None:
        return "-"
    mark = claims.get("marker", "")
    return f"[[{c['n']}, {c['k']}, {'>=' if c.get('bound') else ''}{c['d']}]]{mark}"


def _print_evaluation(ev: Evaluation) -> None:
    click.echo(f"spec:    {ev.id}")
    click.echo(f"code:    {_code_str(ev.code)}" + (f"  ({ev.code['method']})" if ev.code else ""))
    if ev.quantum is not None:
        prov = " (provisional)" if ev.quantum.provisional else ""
        click.echo(f"quantum: {ev.quantum}  {ev.quantum.classification}{prov}")
    click.echo("checks:")
    for c in ev.checks:
        parts = [f"  {c.status:8s} {c.name}"]
        if c.computed is not None or c.claimed is not None:
            parts.append(f"computed={c.computed} claimed={c.claimed}")
        if c.detail:
            parts.append(f"({c.detail})")
        click.echo(" ".join(parts))
    for note in ev.notes:
        click.echo(f"note:    {note}")
    click.echo(f"status:  {ev.status}")


def _write_csv(path: str, rows: list[Evaluation]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "n", "k", "d", "exact", "q", "status"])
        for ev in rows:
            c = ev.code or {}
            w.writerow([ev.id, c.get("n"), c.get("k"), c.get("d"), c.get("exact"), c.get("q"), ev.status])


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Skew cyclic codes over F_q^l: Gray images, duals and CSS parameters."""


@main.command()
@click.argument("spec")
@budget_opt
@workers_opt
@method_opt
@json_opt
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Write a CSV summary row.")
def verify(spec, budget, workers, method, as_json, csv_path):
    """Run the full pipeline on SPEC (a path or a bundled id such as ex3_f9)."""
    try:
        cs = load_spec(spec)
        ev = evaluate(cs, budget, workers, method)
    except SpecError as exc:
        _fail_spec(exc)
    if as_json:
        _dump(ev.to_json())
    else:
        _print_evaluation(ev)
    if csv_path:
        _write_csv(csv_path, [ev])
    sys.exit(1 if ev.status == MISMATCH else 0)


@main.command()
@click.option(
    "--table", "table", type=click.Choice(["1", "2", "3", "examples", "all"]), default="all", show_default=True
)
@budget_opt
@workers_opt
@json_opt
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Write one CSV row per entry.")
def reproduce(table, budget, workers, as_json, csv_path):
    """Re-derive every bundled row and compare with its claims."""
    groups = list(GROUPS) if table == "all" else ["examples" if table == "examples" else f"table{table}"]
    rows = []
    for group in groups:
        for ident in corpus_ids(group):
            try:
                rows.append(evaluate(load_spec(ident), budget, workers))
            except SpecError as exc:
                _fail_spec(exc)
    if as_json:
        _dump({"rows": [ev.to_json() for ev in rows]})
    else:
        header = f"{'entry':18s} {'computed':22s} {'claimed':16s} {'quantum':30s} {'claimed':18s} status"
        click.echo(header)
        click.echo("-" * len(header))
        for ev in rows:
            cs = load_spec(ev.id)
            q = "-" if ev.quantum is None else f"{ev.quantum} {ev.quantum.classification}"
            click.echo(
                f"{ev.id:18s} {_code_str(ev.code):22s} {_claim_code(cs.claims):16s} "
                f"{q:30s} {_claim_quantum(cs.claims):18s} {ev.status}"
            )
            for diag in ev.diagnostics() if ev.status == MISMATCH else []:
                click.echo(f"{'':18s} ! {diag}")
        counts = {s: sum(ev.status == s for ev in rows) for s in ("REPRODUCED", "BOUND-ONLY", "MISMATCH")}
        click.echo(" ".join(f"{k}={v}" for k, v in counts.items()))
    if csv_path:
        _write_csv(csv_path, rows)
    sys.exit(1 if any(ev.status == MISMATCH for ev in rows) else 0)


def _field_from_opts(p, m, modulus) -> GF:
    mod = None if modulus is None else [int(c) for c in modulus.split(",")]
    return GF(p, m, mod)


@main.command()
@click.option("--p", "p", type=int, required=True, help="Characteristic.")
@click.option("--m", "m", type=int, default=1, show_default=True, help="Extension degree.")
@click.option("--modulus", default=None, help="Comma-separated coefficients, constant term first.")
@click.option("--theta", type=int, default=0, show_default=True, help="Frobenius exponent of theta.")
@click.option("--s", "s", default="0", show_default=True, help="Inner derivation parameter.")
@click.option("--n", "n", type=int, required=True)
@click.option("--alpha", default="1", show_default=True)
@click.option("--degree", "r", type=int, required=True, help="Degree of the generator.")
@click.option("--dual-containing", is_flag=True, help="Keep Euclidean dual-containing codes only.")
@click.option("--annihilator", is_flag=True, help="Keep annihilator dual-containing codes only (theta = Id).")
@click.option("--top", type=int, default=0, help="Show only the best K (0 = all).")
@budget_opt
@workers_opt
@json_opt
def search(p, m, modulus, theta, s, n, alpha, r, dual_containing, annihilator, top, budget, workers, as_json):
    """List monic right divisors of x^n - alpha of a given degree, ranked by
    distance then dimension."""
    try:
        field = _field_from_opts(p, m, modulus)
        ring = SkewRing(field, theta, field.parse(s))
        a = field.parse(alpha)
        if not 0 <= r <= n:
            raise SpecError("degree must lie in [0, n]")
        divisors = enumerate_monic_right_divisors(n, a, r, ring, budget=budget)
    except (FieldError, ValueError) as exc:
        _fail_spec(exc)
    except BudgetExceeded as exc:
        _fail_spec(f"refused: {exc}")
    found = []
    for idx, g in enumerate(divisors):
        spec = FqCyclicSpec(n, ring, a, g)
        entry = {"index": idx, "g": format_poly(g.coeffs, field), "n": n, "k": spec.k}
        try:
            if dual_containing:
                rep = duality_report(spec)
                if not (rep.hypotheses_met and rep.dual_containing):
                    continue
            if annihilator and not is_annihilator_dual_containing(n, a, g):
                continue
        except HypothesisError as exc:
            _fail_spec(exc)
        code = generator_matrix_fq(spec)
        if code.k:
            d, exact, _ = best_distance(code, budget, workers)
        else:
            d, exact = None, True
        entry.update(d=d, exact=exact)
        found.append(entry)
    found.sort(key=lambda e: (-(e["d"] or 0), not e["exact"], -e["k"], e["index"]))
    if top:
        found = found[:top]
    if as_json:
        _dump({"results": found})
        return
    for rank, e in enumerate(found, 1):
        d = "-" if e["d"] is None else (str(e["d"]) if e["exact"] else f"<={e['d']}")
        click.echo(f"{rank:3d}  [{e['n']}, {e['k']}, {d}]_{field.q}  {e['g']}")
    if not found:
        click.echo("no divisors found")


def _parse_matrix(field: GF, text: str) -> Matrix:
    rows = [r for r in text.split(";") if r.strip()]
    return Matrix.from_strings(field, [[e.strip() for e in r.split(",")] for r in rows])


@main.command()
@click.argument("spec", required=False)
@click.option("--field", "field_text", default=None, help="p or p,m for an inline matrix.")
@click.option("--matrix", "matrix_text", default=None, help="Rows separated by ';', entries by ','.")
@budget_opt
@workers_opt
@method_opt
@click.option("--check", is_flag=True, help="Also run the other exact route and fail on disagreement.")
@json_opt
def mindist(spec, field_text, matrix_text, budget, workers, method, check, as_json):
    """Minimum distance of a spec's Gray image or of an inline generator matrix."""
    try:
        if spec:
            cs = load_spec(spec)
            code = gray_image(build_r_code(cs.spec), cs.gray)
        elif matrix_text and field_text:
            parts = [int(v) for v in field_text.split(",")]
            field = GF(*parts)
            code = LinearCode(_parse_matrix(field, matrix_text))
        else:
            raise SpecError("give a spec or --field and --matrix")
        d, exact, used = best_distance(code, budget, workers, method)
    except (SpecError, FieldError, ValueError) as exc:
        _fail_spec(exc)
    except BudgetExceeded as exc:
        _fail_spec(f"refused: {exc}")
    result = {"n": code.n, "k": code.k, "q": code.q, "d": d, "exact": exact, "method": used}
    if check and exact:
        other = "macwilliams" if used == "direct" else "direct"
        try:
            if other == "direct":
                d2, exact2 = min_distance(code, budget, workers)
            else:
                d2, exact2 = macwilliams_min_distance(code, budget, workers)
        except BudgetExceeded:
            d2, exact2 = None, False
        if exact2:
            result["cross_check"] = {"method": other, "d": d2}
            if d2 != d:
                click.echo(f"error: oracle violation, {used} gives {d} but {other} gives {d2}", err=True)
                sys.exit(1)
    if as_json:
        _dump(result)
    else:
        dt = "-" if d is None else (str(d) if exact else f"<={d}")
        click.echo(f"[{code.n}, {code.k}, {dt}]_{code.q}  method={used} exact={str(exact).lower()}")
        if "cross_check" in result:
            click.echo(f"cross-check {result['cross_check']['method']}: {result['cross_check']['d']}")


@main.command("dual-check")
@click.argument("spec")
@json_opt
def dual_check(spec, as_json):
    """Euclidean or annihilator dual containment of each component."""
    try:
        cs = load_spec(spec)
    except SpecError as exc:
        _fail_spec(exc)
    out = []
    for i, comp in enumerate(cs.spec.components()):
        entry = {"component": i + 1, "divides": comp.is_valid()}
        if entry["divides"]:
            try:
                if cs.construction == "annihilator":
                    entry["annihilator_dual_containing"] = is_annihilator_dual_containing(comp.n, comp.alpha, comp.g)
                else:
                    entry.update(duality_report(comp).to_json())
            except HypothesisError as exc:
                entry["error"] = str(exc)
        out.append(entry)
    if as_json:
        _dump({"id": cs.id, "components": out})
    else:
        for e in out:
            click.echo(" ".join(f"{k}={v}" for k, v in e.items()))
    bad = any(not e["divides"] or "error" in e for e in out)
    sys.exit(1 if bad else 0)


@main.command()
@click.argument("spec")
@budget_opt
@workers_opt
@method_opt
@json_opt
def quantum(spec, budget, workers, method, as_json):
    """CSS parameters of a spec's dual-containing code."""
    try:
        cs = load_spec(spec)
        ev = evaluate(cs, budget, workers, method)
    except SpecError as exc:
        _fail_spec(exc)
    if ev.quantum is None:
        click.echo("error: no quantum code: " + "; ".join(ev.diagnostics() or ["construction is 'none'"]), err=True)
        sys.exit(1)
    qchecks = [c for c in ev.checks if c.name.startswith("quantum")]
    if as_json:
        _dump({"id": ev.id, "quantum": ev.quantum.to_json(), "checks": [c.to_json() for c in qchecks], "notes": ev.notes})
    else:
        prov = " (provisional)" if ev.quantum.provisional else ""
        click.echo(f"{ev.quantum}  {ev.quantum.classification}{prov}")
        for note in ev.notes:
            click.echo(f"note: {note}")
        for c in qchecks:
            click.echo(f"  {c.status:8s} {c.name} computed={c.computed} claimed={c.claimed}")
    sys.exit(1 if any(c.status == BAD for c in qchecks) else 0)


if __name__ == "__main__":
    main()
