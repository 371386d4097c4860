"""Pure numpy/scipy implementations of the compiled kernels.

Selected automatically when the extension is not built, or when
``SYSGRAPH_PURE_PYTHON=1``. Results match ``_ckernels`` exactly.
"""

from itertools import combinations, islice

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

_CHUNK = 1 << 16


def label_components(nbr, keep):
    n, d = nbr.shape
    cols = [c for c in range(d) if keep[c]]
    if not cols or n == 0:
        return np.arange(n, dtype=np.int64), n
    src = np.repeat(np.arange(n, dtype=np.int64), len(cols))
    dst = nbr[:, cols].reshape(-1)
    adj = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
    count, raw = connected_components(adj, directed=False)
    # renumber so labels follow each component's smallest vertex
    first = np.full(count, n, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(n, dtype=np.int64))
    rank = np.empty(count, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(count, dtype=np.int64)
    return rank[raw].astype(np.int64), int(count)


def _chunk_boundaries(nbr, rows):
    # rows: (m, s) array of vertex ids; boundary = s*d - 2*(inner edges)
    m, s = rows.shape
    d = nbr.shape[1]
    nb = nbr[rows]  # (m, s, d)
    inside = (nb[:, :, :, None] == rows[:, None, None, :]).any(axis=3)
    inner2 = inside.sum(axis=(1, 2))
    return s * d - inner2


def min_boundary_combinations(nbr, s, lo, hi):
    n = nbr.shape[0]
    if s < 1 or s > n:
        raise ValueError("subset size out of range")
    hi = min(hi, n - s + 1)
    if lo >= hi:
        return -1, None
    best, wit = -1, None
    for first in range(lo, hi):
        rest = combinations(range(first + 1, n), s - 1)
        while True:
            block = list(islice(rest, _CHUNK))
            if not block and s > 1:
                break
            if s == 1:
                rows = np.array([[first]], dtype=np.int64)
            else:
                rows = np.empty((len(block), s), dtype=np.int64)
                rows[:, 0] = first
                rows[:, 1:] = block
            bnd = _chunk_boundaries(nbr, rows)
            k = int(np.argmin(bnd))
            if best < 0 or bnd[k] < best:
                best, wit = int(bnd[k]), rows[k].copy()
            if s == 1:
                break
    return best, wit


def _bit_reverse(masks, n):
    out = np.zeros_like(masks)
    for b in range(n):
        out |= ((masks >> np.uint64(b)) & np.uint64(1)) << np.uint64(n - 1 - b)
    return out


def min_boundary_sweep(nbr, s_max):
    n, d = nbr.shape
    if n > 30:
        raise ValueError("full sweep limited to n <= 30")
    best = np.full(s_max + 1, -1, dtype=np.int64)
    masks = np.zeros(s_max + 1, dtype=np.uint64)
    # lex-smallest among equal-size sets == largest bit-reversed mask
    rev_best = np.zeros(s_max + 1, dtype=np.uint64)
    us, vs = [], []
    for c in range(d):
        col = nbr[:, c]
        keep = np.arange(n) < col
        us.append(np.nonzero(keep)[0])
        vs.append(col[keep])
    us = np.concatenate(us).astype(np.uint64)
    vs = np.concatenate(vs).astype(np.uint64)
    total = 1 << n
    step = 1 << 18
    one = np.uint64(1)
    for start in range(0, total, step):
        m = np.arange(start, min(total, start + step), dtype=np.uint64)
        size = np.bitwise_count(m).astype(np.int64)
        bnd = np.zeros(m.size, dtype=np.int64)
        for u, v in zip(us, vs):
            bnd += (((m >> u) ^ (m >> v)) & one).astype(np.int64)
        rev = _bit_reverse(m, n)
        for s in np.unique(size):
            if s > s_max:
                continue
            sel = size == s
            b = bnd[sel]
            lowest = b.min()
            cand = rev[sel][b == lowest]
            r = cand.max()
            if best[s] < 0 or lowest < best[s] or (lowest == best[s] and r > rev_best[s]):
                best[s] = lowest
                rev_best[s] = r
    for s in range(s_max + 1):
        masks[s] = _bit_reverse(np.array([rev_best[s]], dtype=np.uint64), n)[0]
    return best, masks
