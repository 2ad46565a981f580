"""Exhaustive weight distributions of linear codes over F_q.

A message ``m = (m_low, m_high)`` encodes to ``a + b`` with ``a`` spanned by
the low rows and ``b`` by the high rows.  All low-row words are tabulated
once, column-major; then for each high-row word ``b`` the weight of every
``a + b`` is the number of positions where ``a_j != -b_j``.  The high part is
cut into shards on its leading digits, which are scanned independently and
summed, so the worker count never changes the result.

Optional *flag columns* ride along with the generator matrix: a word whose
flag part is zero lies in a designated subcode (e.g. the dual, for hull
sweeps), and such words are histogrammed separately.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .gf import GF
from .linalg import matmul_array, rref_array

DEFAULT_BUDGET = 1 << 26
LOW_TABLE_LIMIT = 1 << 18


def span_table(field: GF, rows: np.ndarray) -> np.ndarray:
    """All q^r linear combinations of ``rows``; row 0 is the least
    significant message digit."""
    rows = np.asarray(rows, dtype=np.int64)
    r, n = rows.shape
    table = np.zeros((1, n), dtype=np.int64)
    for t in range(r):
        scaled = field.mul[np.arange(field.q)[:, None], rows[t][None, :]]
        table = field.add[table[None, :, :], scaled[:, None, :]].reshape(-1, n)
    return table


def _shard_hist(field: GF, AT: np.ndarray, n: int, offset: np.ndarray, sub_rows: np.ndarray) -> np.ndarray:
    B = field.add[span_table(field, sub_rows), offset[None, :]]
    negB = field.neg[B].astype(AT.dtype)
    ncols = AT.shape[0]
    N = AT.shape[1]
    hist = np.zeros((2, n + 1), dtype=np.int64)
    w = np.empty(N, dtype=np.uint8)
    for b in negB:
        w[:] = 0
        for j in range(n):
            w += AT[j] != b[j]
        if ncols > n:
            flag = np.zeros(N, dtype=bool)
            for j in range(n, ncols):
                flag |= AT[j] != b[j]
            hist[0] += np.bincount(w[~flag], minlength=n + 1)
            hist[1] += np.bincount(w[flag], minlength=n + 1)
        else:
            hist[0] += np.bincount(w, minlength=n + 1)
    return hist


_WORKER_STATE: dict = {}


def _init_worker(field_json, AT, n):
    _WORKER_STATE["field"] = GF.from_json(field_json)
    _WORKER_STATE["AT"] = AT
    _WORKER_STATE["n"] = n


def _run_shard(args):
    offset, sub_rows = args
    s = _WORKER_STATE
    return _shard_hist(s["field"], s["AT"], s["n"], offset, sub_rows)


def weight_histogram(
    field: GF,
    G: np.ndarray,
    flag_cols: np.ndarray | None = None,
    workers: int = 1,
) -> np.ndarray:
    """Histogram of codeword weights of the row space of ``G``.

    ``G`` must have full row rank.  Returns an array of shape (2, n+1):
    row 0 counts words whose flag part vanishes (all words when no flag
    columns are given), row 1 the rest.
    """
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if n >= 255:
        raise ValueError("codes longer than 254 are not supported by the enumerator")
    ext = G if flag_cols is None else np.hstack([G, np.asarray(flag_cols, dtype=np.int64).reshape(k, -1)])
    q = field.q
    if k == 0:
        hist = np.zeros((2, n + 1), dtype=np.int64)
        hist[0, 0] = 1
        return hist
    k1 = 1
    while k1 < k and q ** (k1 + 1) <= LOW_TABLE_LIMIT:
        k1 += 1
    AT = np.ascontiguousarray(span_table(field, ext[:k1]).T.astype(field.dtype))
    high = ext[k1:]
    k2 = high.shape[0]
    t = 0
    while t < k2 and q**t < 8 * max(workers, 1):
        t += 1
    top, sub = high[k2 - t :], high[: k2 - t]
    offsets = span_table(field, top) if t else np.zeros((1, ext.shape[1]), dtype=np.int64)
    jobs = [(off, sub) for off in offsets]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(field.to_json(), AT, n)
        ) as pool:
            parts = list(pool.map(_run_shard, jobs))
    else:
        parts = [_shard_hist(field, AT, n, off, s) for off, s in jobs]
    return np.sum(parts, axis=0)


def default_workers() -> int:
    return max(1, os.cpu_count() or 1)


def sample_min_weight(field: GF, G: np.ndarray, samples: int = 1 << 16, seed: int = 0) -> int:
    """Upper bound on the minimum distance from the systematic rows, all
    two-row combinations, and a seeded random sample of messages."""
    R, piv = rref_array(field, G)
    R = R[: len(piv)]
    k, n = R.shape
    if k == 0:
        return n + 1
    best = int(np.min(np.count_nonzero(R, axis=1)))
    scal = np.arange(1, field.q)
    for i in range(k):
        for j in range(i + 1, k):
            words = field.add[R[i][None, :], field.mul[scal[:, None], R[j][None, :]]]
            best = min(best, int(np.min(np.count_nonzero(words, axis=1))))
    rng = np.random.default_rng(seed)
    chunk = 4096
    done = 0
    while done < samples:
        m = rng.integers(0, field.q, size=(min(chunk, samples - done), k))
        m = m[np.any(m != 0, axis=1)]
        if m.size:
            words = matmul_array(field, m, R)
            best = min(best, int(np.min(np.count_nonzero(words, axis=1))))
        done += chunk
    return best
