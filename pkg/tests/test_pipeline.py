from __future__ import annotations

import copy
import json
from importlib import resources

import numpy as np
import pytest

from skewcodes.codes import build_r_code
from skewcodes.gray import gray_image, gray_weight
from skewcodes.pipeline import (
    BOUND_ONLY,
    MISMATCH,
    REPRODUCED,
    SpecError,
    corpus_ids,
    evaluate,
    load_spec,
    parse_spec,
)
from skewcodes.skewpoly import right_divides

from oracles import min_weight


def raw(ident):
    return json.loads(resources.files("skewcodes.corpus").joinpath(f"{ident}.json").read_text())


def test_corpus_sizes():
    assert len(corpus_ids("examples")) == 4
    assert len(corpus_ids("table1")) == 12
    assert len(corpus_ids("table2")) == 9
    assert len(corpus_ids("table3")) == 44
    with pytest.raises(SpecError):
        corpus_ids("table4")


def test_load_by_id_and_path(tmp_path):
    a = load_spec("ex3_f9")
    b = load_spec("examples/ex3_f9")
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(raw("examples/ex3_f9")))
    c = load_spec(p)
    assert a.spec.gens == b.spec.gens == c.spec.gens
    with pytest.raises(SpecError):
        load_spec("examples/missing")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SpecError):
        load_spec(bad)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("field"),
        lambda d: d["field"].update(modulus=[2, 0, 1]),
        lambda d: d["ring"].update(theta_exps=[1]),
        lambda d: d.update(generators=["x+1"]),
        lambda d: d.update(generators=["0", "x+1"]),
        lambda d: d["ring"].update(a=["1", "0"]),
        lambda d: d.update(construction="hermitian"),
        lambda d: d["gray"].update(matrix=[["1", "1"], ["1", "1"]]),
        lambda d: d.update(generators=["2x+q", "x"]),
    ],
)
def test_malformed_specs(mutate):
    data = copy.deepcopy(raw("examples/ex3_f9"))
    mutate(data)
    with pytest.raises(SpecError):
        parse_spec(data)


def test_monic_normalization_note():
    cs = load_spec("ex3_f9")
    assert all(g.is_monic() for g in cs.spec.gens)
    assert not cs.printed[0].is_monic()
    assert any("scaled to monic" in n for n in cs.notes)


def test_example3_pipeline():
    ev = evaluate(load_spec("ex3_f9"))
    assert ev.status == REPRODUCED
    assert ev.code == {"n": 8, "k": 5, "d": 4, "exact": True, "q": 9, "method": "macwilliams"}
    assert str(ev.quantum) == "[[8, 2, 4]]_9"
    assert any("sum(k_i) - nl" in n for n in ev.notes)


def test_corrupted_generator_reports_divisor():
    data = copy.deepcopy(raw("examples/ex3_f9"))
    data["generators"][1] = "2wx^2+2wx+w+1"
    ev = evaluate(parse_spec(data))
    assert ev.status == MISMATCH
    assert any("not a right divisor" in d for d in ev.diagnostics())


def test_budget_degradation():
    ev = evaluate(load_spec("ex3_f9"), budget=100)
    assert ev.status == BOUND_ONLY
    assert ev.code["exact"] is False
    assert ev.quantum.d is None


def test_f16_default_modulus_fails():
    data = copy.deepcopy(raw("table1/row12"))
    assert evaluate(parse_spec(data)).status == REPRODUCED
    del data["field"]["modulus"]  # w^4 + w + 1
    ev = evaluate(parse_spec(data))
    assert ev.status == MISMATCH
    assert any("g_2 is not a right divisor" in d for d in ev.diagnostics())


def test_q29_needs_alpha_one():
    data = copy.deepcopy(raw("table3/row44"))
    cs = parse_spec(data)
    assert cs.spec.components()[0].is_valid()
    data["ring"]["a"] = ["19"]
    ev = evaluate(parse_spec(data))
    assert ev.status == MISMATCH
    assert any("not a right divisor of x^29 - 19" in d for d in ev.diagnostics())


def test_table2_row8_witness():
    cs = load_spec("table2/row08")
    code = build_r_code(cs.spec)
    v = np.ones(4, dtype=np.int64)
    for comp in code.components:
        assert comp.contains(v)
    word = np.ones(12, dtype=np.int64)  # every position is (1, 1, 1)
    assert code.as_linear_code().contains(word)
    assert gray_weight(word, cs.gray) == 4
    img = gray_image(code, cs.gray)
    assert (img.n, img.k) == (12, 5) and min_weight(img) == 4


def test_table2_row9_witness():
    cs = load_spec("table2/row09")
    assert cs.spec.gens[2].degree == 0
    code = build_r_code(cs.spec)
    word = np.zeros(12, dtype=np.int64)
    word[2] = 1  # e_3 at position 0
    assert code.as_linear_code().contains(word)
    assert gray_weight(word, cs.gray) == 2
    assert min_weight(gray_image(code, cs.gray)) == 2


def test_table1_row9_is_a_flagged_mismatch():
    ev = evaluate(load_spec("table1/row09"))
    assert ev.status == MISMATCH
    assert str(ev.quantum) == "[[6, 2, 3]]_9"
    assert any("Singleton" in d for d in ev.diagnostics())


def test_printed_factorizations_checked():
    ev = evaluate(load_spec("ex2_f8"))
    names = {c.name: c.status for c in ev.checks}
    assert names["factorization 1"] == names["h-dagger 2"] == "ok"
    data = copy.deepcopy(raw("examples/ex2_f8"))
    data["claims"]["dual_generators"][0] = "x^3+1"
    ev = evaluate(parse_spec(data))
    assert ev.status == MISMATCH


def test_claims_do_not_feed_computation():
    data = copy.deepcopy(raw("examples/ex1_f4"))
    data["claims"]["code"] = [12, 3, 9]
    ev = evaluate(parse_spec(data))
    assert ev.code["d"] == 8 and ev.status == MISMATCH


def test_exact_quantum_results_respect_singleton():
    for group in ("examples", "table1", "table3"):
        for ident in corpus_ids(group):
            ev = evaluate(load_spec(ident))
            q = ev.quantum
            if q is not None and q.d is not None and q.d_exact:
                assert 2 * q.d <= q.n - q.k + 2, ident
            if q is not None and q.d is not None and ev.code["exact"]:
                assert q.d >= ev.code["d"]
