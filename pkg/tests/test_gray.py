from __future__ import annotations

import itertools

import numpy as np
import pytest

from skewcodes.codes import LinearCode, build_r_code, euclidean_dual
from skewcodes.gf import parse_element
from skewcodes.gray import (
    GrayMapError,
    GrayMapSpec,
    check_orthogonality_matrix,
    gray_image,
    gray_weight,
    phi,
    phi_inv,
)
from skewcodes.linalg import Matrix
from skewcodes.pipeline import corpus_ids, load_spec
from skewcodes.ring import RingSpec

from conftest import field
from oracles import all_codewords, min_weight

F4, F8, F9 = field(2, 2), field(2, 3), field(3, 2)
ALL_IDS = [i for g in ("examples", "table1", "table2", "table3") for i in corpus_ids(g)]


def gm(F, rows):
    return GrayMapSpec.broadcast(Matrix.from_strings(F, rows))


def test_identity_map_flattens():
    R = RingSpec(F4, 2)
    spec = GrayMapSpec.broadcast(Matrix.identity(F4, 2))
    v = [R.parse(["w", "1"]), R.parse(["0", "w+1"])]
    assert phi(v, spec).tolist() == [F4.parse("w"), 1, 0, F4.parse("w+1")]


def test_single_position_against_element_arithmetic():
    e = lambda t: parse_element(t, F9)
    spec = gm(F9, [["2w", "w"], ["w", "w"]])
    v = [RingSpec(F9, 2).parse(["w", "w"])]
    expect = [e("w") * e("2w") + e("w") * e("w"), e("w") * e("w") + e("w") * e("w")]
    assert phi(v, spec).tolist() == [x.value for x in expect]


def test_phi_roundtrip_and_linearity(rng):
    R = RingSpec(F9, 2)
    spec = GrayMapSpec(F9, 2, tuple(Matrix(F9, m) for m in ([[1, 2], [3, 4]], [[2, 0], [1, 1]], [[5, 1], [0, 7]])))
    for _ in range(200):
        a = rng.integers(0, 9, 6)
        b = rng.integers(0, 9, 6)
        assert phi_inv(phi(a, spec), spec).tolist() == a.tolist()
        s = F9.add[a, b]
        assert phi(s, spec).tolist() == F9.add[phi(a, spec), phi(b, spec)].tolist()
    back = phi_inv(phi(a, spec), spec, ring=R)
    assert [c for r in back for c in r.comps] == a.tolist()


def test_gray_weight_matches_hamming_weight(rng):
    spec = gm(F4, [["1", "1"], ["1", "w+1"]])
    for _ in range(200):
        v = rng.integers(0, 4, 12)
        assert gray_weight(v, spec) == int(np.count_nonzero(phi(v, spec)))
    assert gray_weight(np.zeros(12, dtype=np.int64), spec) == 0
    ident = GrayMapSpec.broadcast(Matrix.identity(F4, 3))
    R = RingSpec(F4, 3)
    assert gray_weight([R.parse(["w", "0", "1"])], ident) == 2


def test_gray_image_examples():
    for ident, params in [("ex1_f4", (12, 3, 8)), ("ex2_f8", (12, 6, 6))]:
        cs = load_spec(ident)
        img = gray_image(build_r_code(cs.spec), cs.gray)
        assert (img.n, img.k) == params[:2]
        assert min_weight(img) == params[2]
    z = gray_image(LinearCode.zero(F4, 6), gm(F4, [["1", "1"], ["1", "w+1"]]))
    assert z.k == 0 and z.n == 6


def test_orthogonality_predicate_examples():
    ok, lam = check_orthogonality_matrix(gm(F9, [["2w", "w"], ["w", "w"]]))
    w = parse_element("w", F9)
    assert ok and lam == (w * w * 2).value
    assert check_orthogonality_matrix(gm(F8, [["w^2+w+1", "1"], ["1", "w^2+w+1"]]))[0]
    assert check_orthogonality_matrix(gm(F4, [["1", "0"], ["1", "1"]])) == (False, None)
    # two matrices with different lambda
    mats = (Matrix.identity(F9, 2), Matrix(F9, [[3, 0], [0, 3]]))  # w I gives lambda = w^2
    assert check_orthogonality_matrix(GrayMapSpec(F9, 2, mats)) == (False, None)


def test_invalid_matrices_rejected():
    with pytest.raises(GrayMapError):
        gm(F4, [["1", "1"], ["1", "1"]])
    with pytest.raises(GrayMapError):
        GrayMapSpec(F4, 2, (Matrix.identity(F4, 3),))
    spec = GrayMapSpec(F4, 2, (Matrix.identity(F4, 2),) * 3)
    with pytest.raises(GrayMapError):
        phi(np.zeros(8, dtype=np.int64), spec)


def test_json_roundtrip():
    spec = gm(F9, [["2w", "w"], ["w", "w"]])
    again = GrayMapSpec.from_json(F9, spec.to_json())
    assert again.mats[0] == spec.mats[0]


@pytest.mark.parametrize("ident", ALL_IDS)
def test_parameter_transport(ident):
    cs = load_spec(ident)
    code = build_r_code(cs.spec)
    img = gray_image(code, cs.gray)
    assert img.n == cs.spec.n * cs.spec.l
    assert img.k == sum(c.k for c in code.components)
    if img.q**img.k <= 1 << 12:
        # Gray distance straight from R-codewords
        words = all_codewords(code.as_linear_code())
        dg = min(gray_weight(w, cs.gray) for w in words[1:] if w.any())
        assert dg == min_weight(img)


def _table1_small():
    out = []
    for ident in corpus_ids("table1"):
        cs = load_spec(ident)
        if cs.spec.field.q ** cs.spec.dimension <= 1 << 16:
            out.append(ident)
    return out


TRANSPORT_IDS = _table1_small()


@pytest.mark.parametrize("ident", TRANSPORT_IDS)
def test_orthogonality_transport(ident):
    cs = load_spec(ident)
    assert check_orthogonality_matrix(cs.gray)[0]
    flat = build_r_code(cs.spec).as_linear_code()
    dual_image = gray_image(euclidean_dual(flat), cs.gray)
    assert dual_image == euclidean_dual(gray_image(flat, cs.gray))
