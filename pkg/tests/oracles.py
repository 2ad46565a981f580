"""Slow reference computations shared by the test modules."""

from __future__ import annotations

import itertools

import numpy as np

from skewcodes.linalg import matmul_array


def all_codewords(code) -> np.ndarray:
    """Every codeword via itertools over the message space."""
    msgs = np.array(list(itertools.product(range(code.q), repeat=code.k)), dtype=np.int64)
    if code.k == 0:
        return np.zeros((1, code.n), dtype=np.int64)
    return matmul_array(code.field, msgs, code.G.data)


def weight_distribution(code) -> list[int]:
    words = all_codewords(code)
    wts = np.count_nonzero(words, axis=1)
    return [int(v) for v in np.bincount(wts, minlength=code.n + 1)]


def min_weight(code) -> int | None:
    A = weight_distribution(code)
    return next((w for w in range(1, len(A)) if A[w]), None)


def css_min_weight(code, dual) -> int | None:
    """min weight of C \\ D, with membership in D by parity checks."""
    from skewcodes.linalg import null_space

    words = all_codewords(code)
    H = null_space(dual.G).data
    outside = matmul_array(code.field, words, H.T).any(axis=1) if H.size else np.zeros(len(words), bool)
    wts = np.count_nonzero(words[outside], axis=1)
    return int(wts.min()) if wts.size else None
